#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mesostab::cli {

inline constexpr const char* kToolName = "mesostab";
inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchema = "mesostab/1";

enum ExitCode : int {
  kPasses = 0,
  kObstruction = 1,  // also degenerate and "no equilibrium found"
  kInputError = 2,   // parse failure, guard refusal, bad flags
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a over raw bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace mesostab::cli
