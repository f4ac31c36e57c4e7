#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace borsuk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;   // parse, domain or usage error
inline constexpr int kExitUnsupported = 2;  // unsupported space or capacity

struct HomologyCommand {
  std::string space;
  std::optional<int> bound;
};

struct CapacityCommand {
  std::string space;
  bool enumerate = false;
};

struct CompareCommand {
  std::string space_x;
  std::string space_y;
  std::optional<int> bound;
};

struct SummandsCommand {
  std::string group;
};

using Command = std::variant<HomologyCommand, CapacityCommand, CompareCommand, SummandsCommand>;

struct Options {
  Command command;
  bool json = false;
};

/// Executes one command. Results go to `out`; failures print a single
/// "error: <reason_code>: <message>" line to `err` and return 1 or 2.
int run(const Options& options, std::ostream& out, std::ostream& err);

/// Full command-line entry point: argument parsing plus run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace borsuk::cli
