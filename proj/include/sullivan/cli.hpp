#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sullivan::cli {

enum class Command { Validate, Minimize, AtModel, Homology, Verify };
enum class Format { Report, Machine };

struct RunConfig {
  Command command = Command::Validate;
  std::string input;
  int max_degree = 10;
  Format format = Format::Report;
  std::optional<std::string> output;
  std::optional<std::string> against;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNotEqual = 1;  // homology --against found a difference
inline constexpr int kUserError = 2;
inline constexpr int kInternalError = 3;

struct RunResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// Executes one command. Text meant for --output is in `out`; the caller
// decides where it goes.
RunResult run(const RunConfig& config);

// Parses arguments (without the program name), runs, and writes output.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sullivan::cli
