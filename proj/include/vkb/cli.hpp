#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vkb::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 verification or fuzz failure, 2 bad input or usage, 3 enumeration cap.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vkb::cli
