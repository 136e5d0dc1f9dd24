#include "convextri/cli.hpp"

int main(int argc, char** argv) {
    return convextri::run_cli(argc, argv);
}
