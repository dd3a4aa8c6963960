#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "boolinfo/channel.hpp"
#include "boolinfo/hypercube.hpp"

namespace boolinfo {

enum class Scope { all, balanced };

/// A function class to scan. Enumeration order is ascending truth-table bit
/// pattern (bit m set <=> f(m) = -1), which for the balanced scope walks the
/// popcount-2^(n-1) patterns in that same ascending order.
struct FunctionClass {
  int n;
  Scope scope;
};

std::uint64_t class_size(const FunctionClass& cls);

/// Scan caps: exhaustive runs stop at n = 4 unless `large` is set, which
/// admits the n = 5 balanced class (~6.0e8 functions).
bool class_enumerable(const FunctionClass& cls, bool large);

struct Violation {
  int n;
  std::uint64_t function_bits;
  double alpha;
  double lhs;
  double rhs;
  std::string check;
};

struct SearchReport {
  FunctionClass cls;
  std::string check;
  std::vector<double> alpha_grid;
  std::uint64_t checked_count = 0;
  std::vector<Violation> violations;
  std::vector<double> max_mi;                          // per grid point
  std::vector<std::vector<std::uint64_t>> maximizers;  // per grid point, ascending bits
  std::vector<double> min_margin;                      // per grid point

  bool ok() const { return violations.empty(); }
};

struct ScanOptions {
  int threads = 1;
  bool large = false;
  std::string checkpoint_path;                     // empty = no checkpointing
  std::uint64_t checkpoint_every = std::uint64_t{1} << 20;
  bool resume = false;                             // skip ranges already in the checkpoint
};

/// Streams the class in enumeration order. Returns the number of functions
/// visited.
std::uint64_t for_each_in_class(const FunctionClass& cls, bool large,
                                const std::function<void(const BooleanFunction&)>& visit);

/// Materializes small classes (size <= 2^20) for tests and exploration.
std::vector<BooleanFunction> enumerate_class(const FunctionClass& cls);

/// Truth-table bit pattern of the rank-th function of the class (enumeration
/// order above).
std::uint64_t class_member_bits(const FunctionClass& cls, std::uint64_t rank);

/// f equals x_i or -x_i for some coordinate.
bool is_dictator_or_negation(int n, std::uint64_t bits);
bool is_dictator_or_negation(const BooleanFunction& f);

// Verification scans. Violations are data, not errors; each theorem check
// allows 1e-12 slack before recording one.
SearchReport verify_conjecture(const FunctionClass& cls, std::span<const double> alphas,
                               const ScanOptions& options = {});
SearchReport verify_theorem1(int n, std::span<const double> alphas,
                             const ScanOptions& options = {});
SearchReport verify_moment_bounds(int n, std::span<const double> alphas,
                                  std::span<const int> k_set, const ScanOptions& options = {});
SearchReport verify_corollary(int n, std::span<const double> alphas,
                              const ScanOptions& options = {});
/// Pure maximizer scan (no inequality checked); margins are slack to the
/// conjectured ceiling.
SearchReport max_mi_scan(const FunctionClass& cls, std::span<const double> alphas,
                         const ScanOptions& options = {});

/// Uniformly random balanced function: a seeded Fisher-Yates shuffle of the
/// half-ones table. Identical seed, identical function, on every platform.
BooleanFunction random_balanced(int n, std::uint64_t seed);

/// Deterministic generator used by the randomized property checks.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next_u64();
  std::uint64_t next_below(std::uint64_t bound);  // uniform in [0, bound)
  double next_unit();                             // uniform in [0, 1)
  double next_symmetric();                        // uniform in [-1, 1)

private:
  std::uint64_t state_;
};

BooleanFunction random_function(int n, Rng& rng);
RealHypercubeFunction random_real_table(int n, Rng& rng);

/// Majority-vs-dictator moment comparison at a fixed noise level.
struct CrossoverRow {
  int k;
  double moment_majority;
  double moment_dictator;
  double moment_ratio;         // majority / dictator
  double maxdev_ratio_power;   // (max|d|_maj / max|d|_dict)^(2k)
};

struct CrossoverTable {
  int n;
  NoiseParameter noise;
  double maxdev_majority;
  double maxdev_dictator;
  bool degenerate;  // alpha = 1/2: every moment is 0, ratios undefined
  std::vector<CrossoverRow> rows;
};

CrossoverTable moment_crossover_experiment(int n, NoiseParameter noise,
                                           std::span<const int> k_list);

/// One checkpoint record: a contiguous scanned range with its partial
/// tallies, appended as a JSON line. Maximizers keep their MI values so
/// records can be re-merged with fresh scan output.
struct CheckpointRecord {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::vector<double> max_mi;
  std::vector<std::vector<std::pair<double, std::uint64_t>>> maximizers;
  std::vector<double> min_margin;
};

std::vector<CheckpointRecord> load_checkpoint(const std::string& path);

}  // namespace boolinfo
