#ifndef CHEBLAB_CLI_COMMANDS_HPP
#define CHEBLAB_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cheblab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertionFailure = 1;
inline constexpr int kExitUsage = 2;

/// Raised for configuration errors that should exit with status 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
  std::string catalog = "builtin";  // "builtin" or a JSON file path
  std::string entry;
  std::string subgroup;             // subfield name
  std::string phi = "one";          // "one", "zero", "delta:(..)", "indicator:k", "sigma-phi:(..)"
  std::uint64_t x = 100000;
  int checkpoints = 20;
  std::vector<double> s_values = {1.1, 1.05, 1.02};
  std::uint64_t cutoff = 1000000;
  std::string out = "-";            // "-" = standard output
  int workers = 1;
  bool quick = false;
};

/// Exact verification suites (group laws, reciprocity, the pointwise
/// induction identity, the cyclic construction contract, catalog validation,
/// factorization-vs-coset cross-check).  Verdicts go to err; exit 0 iff all
/// suites pass.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Class-count convergence series for every conjugacy class of the entry.
int cmd_density(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Both sides of the induction identity; asserts exact per-checkpoint
/// equality of the two exact sums.
int cmd_induction(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Per-prime comparison of subfield-polynomial factor degrees against orbit
/// sizes on cosets.
int cmd_crosscheck(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Cyclic reduction with the exact oracle and the empirical oracle.
int cmd_reduce(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Truncated analytic-density estimates for both routes on an s-grid.
int cmd_analytic(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cheblab::cli

#endif
