#pragma once

// Command dispatch for the unitcycle executable. Kept in the library so the
// exit-code contract can be tested without spawning processes.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unitcycle/cycle_poly.hpp"
#include "unitcycle/unit_action.hpp"

namespace unitcycle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// The oracle traces every permutation explicitly; refuse it above this n.
inline constexpr u64 kOracleLimit = 100'000;

/// --method all is the default up to this n, formula above it.
inline constexpr u64 kSelfVerifyLimit = 256;

enum class Command { index, orbits, ctype, count_subsets, count_orbits, verify };

struct CliRequest {
  Command command = Command::index;
  u64 n = 1;
  std::optional<Method> method;  // nullopt: every path ("all")
  std::optional<i64> a;
  std::optional<u64> k;
  Format format = Format::plain;
};

/// Decimal ("360") or factored ("2^3*3^2*5") form; factored bases must be
/// prime. Throws std::invalid_argument on anything else, including 0.
u64 parse_n(std::string_view text);

/// Executes a validated request. Results go to out, diagnostics to err.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the request.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitcycle::cli
