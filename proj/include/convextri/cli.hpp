#pragma once

#include <string>
#include <vector>

namespace convextri {

/// Exit codes: 0 affirmative/success, 1 negative mathematical verdict,
/// 2 input error, 3 internal verification failure.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args); // args without program name

} // namespace convextri
