#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bandinv::cli {

/// Exit codes of the command line tool.
enum Exit : int { kOk = 0, kParse = 1, kValidation = 2, kNumerical = 3 };

inline constexpr std::size_t kMaxDim = 64;
inline constexpr std::size_t kMaxBand = 8;

/// Runs one command. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bandinv::cli
