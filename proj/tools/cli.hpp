#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symgen::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_consistency_error = 3;

// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace symgen::cli
