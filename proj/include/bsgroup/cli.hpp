#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bsgroup/coset_dynamics.hpp"
#include "bsgroup/tree.hpp"

namespace bsgroup::cli {

enum class OutputFormat { Json, Text, Dot };

struct CliConfig {
  std::size_t ball_cap = kDefaultBallCap;
  std::uint64_t orbit_cap = kDefaultOrbitCap;
  std::optional<OutputFormat> output_format;  // unset: the subcommand's default
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`; errors go to `err` as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsgroup::cli
