#include "convextri/chord.hpp"

namespace convextri {

namespace {

void require_valid(int n, Chord c) {
    if (c.a < 0 || c.b >= n || c.a == c.b)
        throw InvalidChord("chord " + to_string(c) + " invalid for n=" + std::to_string(n));
}

} // namespace

int circular_length(int n, Chord c) {
    require_valid(n, c);
    int d = c.b - c.a;
    return d < n - d ? d : n - d;
}

bool is_boundary(int n, Chord c) {
    return circular_length(n, c) == 1;
}

bool crosses(int n, Chord c1, Chord c2) {
    require_valid(n, c1);
    require_valid(n, c2);
    if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b)
        return false;
    bool in1 = c1.a < c2.a && c2.a < c1.b;
    bool in2 = c1.a < c2.b && c2.b < c1.b;
    return in1 != in2;
}

std::string to_string(Chord c) {
    return std::to_string(c.a) + "-" + std::to_string(c.b);
}

std::string to_string(const std::vector<Chord>& cs) {
    std::string s;
    for (const Chord& c : cs) {
        if (!s.empty()) s += ",";
        s += to_string(c);
    }
    return s;
}

} // namespace convextri
