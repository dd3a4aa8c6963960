#include "boolinfo/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "boolinfo/bounds.hpp"
#include "boolinfo/numeric.hpp"

namespace boolinfo {

namespace {

constexpr double kTieTol = 1e-12;
constexpr double kCheckTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

using json = nlohmann::ordered_json;

const std::array<std::array<std::uint64_t, 65>, 65>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial_table()[n][k];
}

// Next bit pattern with the same popcount in ascending order (Gosper).
std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

// rank-th pattern (ascending order) of `ones` bits among `width` positions.
std::uint64_t nth_pattern(int width, int ones, std::uint64_t rank) {
  std::uint64_t bits = 0;
  for (int pos = width - 1; pos >= 0 && ones > 0; --pos) {
    const std::uint64_t without = binom(pos, ones);
    if (rank < without) continue;
    rank -= without;
    bits |= std::uint64_t{1} << pos;
    --ones;
  }
  return bits;
}

void check_scan_n(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("scans support 1 <= n <= 6");
}

std::uint64_t table_bits_mask(int n) {
  const int table_size = 1 << n;
  return table_size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << table_size) - 1;
}

}  // namespace

std::uint64_t class_size(const FunctionClass& cls) {
  check_scan_n(cls.n);
  const int table_size = 1 << cls.n;
  if (cls.scope == Scope::all) {
    if (cls.n > 5) throw std::invalid_argument("the full class at n=6 does not fit in 64 bits");
    return std::uint64_t{1} << table_size;
  }
  return binom(table_size, table_size / 2);
}

bool class_enumerable(const FunctionClass& cls, bool large) {
  if (cls.n < 1) return false;
  if (cls.scope == Scope::all) return cls.n <= 4;
  return cls.n <= 4 || (cls.n == 5 && large);
}

std::uint64_t class_member_bits(const FunctionClass& cls, std::uint64_t rank) {
  if (rank >= class_size(cls)) throw std::out_of_range("rank beyond class size");
  if (cls.scope == Scope::all) return rank;
  const int table_size = 1 << cls.n;
  return nth_pattern(table_size, table_size / 2, rank);
}

std::uint64_t for_each_in_class(const FunctionClass& cls, bool large,
                                const std::function<void(const BooleanFunction&)>& visit) {
  if (!class_enumerable(cls, large))
    throw std::invalid_argument(
        "class too large to enumerate (n <= 4, or n = 5 balanced with the large flag)");
  const std::uint64_t count = class_size(cls);
  std::uint64_t bits = class_member_bits(cls, 0);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    visit(BooleanFunction::from_bits(cls.n, bits));
    if (rank + 1 == count) break;
    bits = cls.scope == Scope::all ? bits + 1 : next_same_popcount(bits);
  }
  return count;
}

std::vector<BooleanFunction> enumerate_class(const FunctionClass& cls) {
  if (class_size(cls) > (std::uint64_t{1} << 20))
    throw std::invalid_argument("class too large to materialize; use for_each_in_class");
  std::vector<BooleanFunction> functions;
  functions.reserve(class_size(cls));
  for_each_in_class(cls, false, [&](const BooleanFunction& f) { functions.push_back(f); });
  return functions;
}

bool is_dictator_or_negation(int n, std::uint64_t bits) {
  check_scan_n(n);
  const std::uint64_t full = table_bits_mask(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t pattern = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if ((m >> i) & 1u) pattern |= std::uint64_t{1} << m;
    if (bits == pattern || bits == (~pattern & full)) return true;
  }
  return false;
}

bool is_dictator_or_negation(const BooleanFunction& f) {
  for (int i = 1; i <= f.n(); ++i) {
    bool direct = true;
    bool negated = true;
    for (std::size_t m = 0; m < f.size(); ++m) {
      const std::int8_t coordinate = (m >> (i - 1)) & 1u ? std::int8_t{-1} : std::int8_t{1};
      direct = direct && f[m] == coordinate;
      negated = negated && f[m] == -coordinate;
    }
    if (direct || negated) return true;
  }
  return false;
}

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  const std::uint64_t min = (~bound + 1) % bound;  // 2^64 mod bound
  std::uint64_t x = next_u64();
  while (x < min) x = next_u64();
  return x % bound;
}

double Rng::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::next_symmetric() { return 2.0 * next_unit() - 1.0; }

BooleanFunction random_balanced(int n, std::uint64_t seed) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int8_t> table(size, 1);
  for (std::size_t m = 0; m < size / 2; ++m) table[m] = -1;
  Rng rng(seed);
  for (std::size_t i = size - 1; i > 0; --i) {
    const std::size_t j = rng.next_below(i + 1);
    std::swap(table[i], table[j]);
  }
  return BooleanFunction(n, std::move(table));
}

BooleanFunction random_function(int n, Rng& rng) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int8_t> table(size);
  std::uint64_t word = 0;
  for (std::size_t m = 0; m < size; ++m) {
    if (m % 64 == 0) word = rng.next_u64();
    table[m] = (word >> (m % 64)) & 1u ? std::int8_t{-1} : std::int8_t{1};
  }
  return BooleanFunction(n, std::move(table));
}

RealHypercubeFunction random_real_table(int n, Rng& rng) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> table(size);
  for (double& v : table) v = rng.next_symmetric();
  return RealHypercubeFunction(n, std::move(table));
}

// ---------------------------------------------------------------------------
// Scan engine
// ---------------------------------------------------------------------------

namespace {

enum class CheckKind { conjecture, theorem1, moments, corollary, scan };

struct CheckPlan {
  CheckKind kind;
  std::string id;
  FunctionClass cls;
  std::vector<double> alphas;
  std::vector<NoiseParameter> noise;
  std::vector<double> mi_rhs;  // per-alpha MI ceiling (unused for moments/scan)
  std::vector<std::vector<std::pair<int, double>>> moment_rhs;  // per-alpha (k, bound)
};

struct Partial {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::vector<double> max_mi;
  std::vector<std::vector<std::uint64_t>> maximizers;
  std::vector<double> min_margin;

  explicit Partial(std::size_t grid_points = 0) {
    max_mi.assign(grid_points, -kInf);
    maximizers.assign(grid_points, {});
    min_margin.assign(grid_points, kInf);
  }
};

void record_candidate(Partial& partial, std::size_t grid_index, double mi, std::uint64_t bits) {
  double& best = partial.max_mi[grid_index];
  auto& list = partial.maximizers[grid_index];
  if (mi > best) {
    best = mi;
    std::erase_if(list, [&](std::uint64_t) { return false; });  // keep type deduction simple
    std::erase_if(list, [](std::uint64_t) { return false; });
  }
  if (mi > best) best = mi;
  if (mi >= best - kTieTol) list.push_back(bits);
}

void scan_range(const CheckPlan& plan, std::uint64_t begin, std::uint64_t end, Partial& out) {
  const int n = plan.cls.n;
  const std::size_t size = std::size_t{1} << n;
  const double scale = std::ldexp(1.0, -n);
  const auto popcounts = detail::popcount_table(n);
  std::vector<std::vector<double>> powers;
  powers.reserve(plan.noise.size());
  for (const NoiseParameter& np : plan.noise) powers.push_back(detail::rho_powers(n, np.rho));

  std::vector<double> coeffs(size);
  std::vector<double> deviations(size);

  std::uint64_t bits = class_member_bits(plan.cls, begin);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    for (std::size_t m = 0; m < size; ++m)
      coeffs[m] = (bits >> m) & 1u ? -1.0 : 1.0;
    walsh_hadamard(coeffs);
    for (double& c : coeffs) c *= scale;
    const double p_minus = std::min(1.0, std::max(0.0, (1.0 - coeffs[0]) / 2.0));
    const double h_fx = binary_entropy(p_minus);
    const bool dictator = plan.kind == CheckKind::corollary && is_dictator_or_negation(n, bits);

    for (std::size_t i = 0; i < plan.noise.size(); ++i) {
      detail::deviation_table(coeffs, powers[i], popcounts, deviations);
      const double mi = h_fx - detail::mean_posterior_entropy(deviations);
      record_candidate(out, i, mi, bits);

      switch (plan.kind) {
        case CheckKind::conjecture:
        case CheckKind::theorem1: {
          const double slack = plan.mi_rhs[i] - mi;
          if (slack < -kCheckTol)
            out.violations.push_back({n, bits, plan.alphas[i], mi, plan.mi_rhs[i], plan.id});
          out.min_margin[i] = std::min(out.min_margin[i], slack);
          break;
        }
        case CheckKind::moments: {
          for (const auto& [k, bound] : plan.moment_rhs[i]) {
            const double moment = detail::moment_from_deviations(deviations, k);
            const double slack = bound - moment;
            if (slack < -kCheckTol)
              out.violations.push_back(
                  {n, bits, plan.alphas[i], moment, bound, plan.id + ":k=" + std::to_string(k)});
            out.min_margin[i] = std::min(out.min_margin[i], slack);
          }
          break;
        }
        case CheckKind::corollary: {
          const double ceiling = plan.mi_rhs[i];
          if (dictator) {
            if (std::abs(mi - ceiling) > kCheckTol)
              out.violations.push_back(
                  {n, bits, plan.alphas[i], mi, ceiling, plan.id + ":dictator-equality"});
          } else {
            const double slack = ceiling - mi;
            if (slack <= kCheckTol)
              out.violations.push_back({n, bits, plan.alphas[i], mi, ceiling, plan.id});
            out.min_margin[i] = std::min(out.min_margin[i], slack);
          }
          break;
        }
        case CheckKind::scan: {
          out.min_margin[i] = std::min(out.min_margin[i], plan.mi_rhs[i] - mi);
          break;
        }
      }
    }

    ++out.checked;
    if (rank + 1 < end)
      bits = plan.cls.scope == Scope::all ? bits + 1 : next_same_popcount(bits);
  }
  out.begin = begin;
  out.end = end;
}

void merge_into(Partial& total, const Partial& part) {
  total.checked += part.checked;
  total.violations.insert(total.violations.end(), part.violations.begin(),
                          part.violations.end());
  for (std::size_t i = 0; i < total.max_mi.size(); ++i) {
    const double merged_max = std::max(total.max_mi[i], part.max_mi[i]);
    std::vector<std::uint64_t> merged;
    for (std::uint64_t bits : total.maximizers[i])
      if (total.max_mi[i] >= merged_max - kTieTol && total.max_mi[i] != -kInf) {
        // placeholder; replaced below
      }
    merged.clear();
    for (std::uint64_t bits : total.maximizers[i]) merged.push_back(bits);
    for (std::uint64_t bits : part.maximizers[i]) merged.push_back(bits);
    total.max_mi[i] = merged_max;
    total.maximizers[i] = std::move(merged);
    total.min_margin[i] = std::min(total.min_margin[i], part.min_margin[i]);
  }
}

std::string function_text(int n, std::uint64_t bits) {
  return to_text(BooleanFunction::from_bits(n, bits));
}

json partial_to_json(const Partial& partial, int n) {
  json j;
  j["begin"] = partial.begin;
  j["end"] = partial.end;
  j["checked"] = partial.checked;
  json violations = json::array();
  for (const Violation& v : partial.violations) {
    violations.push_back({{"function", function_text(v.n, v.function_bits)},
                          {"alpha", v.alpha},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs},
                          {"check", v.check}});
  }
  j["violations"] = std::move(violations);
  json max_mi = json::array();
  for (double v : partial.max_mi) max_mi.push_back(std::isfinite(v) ? json(v) : json());
  j["max_mi"] = std::move(max_mi);
  j["maximizers"] = partial.maximizers;
  json margins = json::array();
  for (double v : partial.min_margin) margins.push_back(std::isfinite(v) ? json(v) : json());
  j["min_margin"] = std::move(margins);
  return j;
}

Partial partial_from_json(const json& j, int n) {
  Partial partial(j.at("max_mi").size());
  partial.begin = j.at("begin").get<std::uint64_t>();
  partial.end = j.at("end").get<std::uint64_t>();
  partial.checked = j.at("checked").get<std::uint64_t>();
  for (const json& v : j.at("violations")) {
    const BooleanFunction f = function_from_text(v.at("function").get<std::string>());
    partial.violations.push_back({f.n(), f.to_bits(), v.at("alpha").get<double>(),
                                  v.at("lhs").get<double>(), v.at("rhs").get<double>(),
                                  v.at("check").get<std::string>()});
  }
  for (std::size_t i = 0; i < partial.max_mi.size(); ++i) {
    const json& m = j.at("max_mi")[i];
    partial.max_mi[i] = m.is_null() ? -kInf : m.get<double>();
    const json& g = j.at("min_margin")[i];
    partial.min_margin[i] = g.is_null() ? kInf : g.get<double>();
    partial.maximizers[i] = j.at("maximizers")[i].get<std::vector<std::uint64_t>>();
  }
  return partial;
}

SearchReport run_scan(CheckPlan plan, const ScanOptions& options) {
  if (!class_enumerable(plan.cls, options.large))
    throw std::invalid_argument(
        "class too large: n <= 4 by default; n = 5 balanced needs the large flag");
  const std::uint64_t total = class_size(plan.cls);
  const std::size_t grid_points = plan.alphas.size();

  // Ranges already covered by a checkpoint being resumed.
  std::vector<Partial> done;
  if (options.resume && !options.checkpoint_path.empty()) {
    for (CheckpointRecord& record : load_checkpoint(options.checkpoint_path)) {
      Partial partial(grid_points);
      partial.begin = record.begin;
      partial.end = record.end;
      partial.checked = record.checked;
      partial.violations = std::move(record.violations);
      partial.max_mi = std::move(record.max_mi);
      partial.maximizers = std::move(record.maximizers);
      partial.min_margin = std::move(record.min_margin);
      if (partial.max_mi.size() != grid_points)
        throw std::invalid_argument("checkpoint grid does not match this scan");
      done.push_back(std::move(partial));
    }
  }
  std::sort(done.begin(), done.end(),
            [](const Partial& a, const Partial& b) { return a.begin < b.begin; });

  // Uncovered contiguous segments of [0, total).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> segments;
  std::uint64_t cursor = 0;
  for (const Partial& partial : done) {
    if (partial.begin > cursor) segments.emplace_back(cursor, partial.begin);
    cursor = std::max(cursor, partial.end);
  }
  if (cursor < total) segments.emplace_back(cursor, total);

  // Chunk segments so checkpoints land every checkpoint_every functions and
  // threads have units of work to pick up.
  const std::uint64_t chunk =
      options.checkpoint_path.empty() && options.checkpoint_every == 0
          ? total
          : std::max<std::uint64_t>(1, options.checkpoint_every);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> units;
  for (auto [begin, end] : segments)
    for (std::uint64_t at = begin; at < end; at += chunk)
      units.emplace_back(at, std::min(end, at + chunk));

  std::vector<Partial> scanned(units.size(), Partial(grid_points));
  std::ofstream checkpoint_out;
  std::mutex checkpoint_mutex;
  if (!options.checkpoint_path.empty()) {
    checkpoint_out.open(options.checkpoint_path, std::ios::app);
    if (!checkpoint_out) throw std::runtime_error("cannot open checkpoint file");
  }

  const int thread_count = std::max(1, std::min<int>(options.threads, 256));
  std::atomic<std::size_t> next_unit{0};
  auto work = [&] {
    while (true) {
      const std::size_t unit = next_unit.fetch_add(1);
      if (unit >= units.size()) return;
      scan_range(plan, units[unit].first, units[unit].second, scanned[unit]);
      if (checkpoint_out.is_open()) {
        const std::string line = partial_to_json(scanned[unit], plan.cls.n).dump();
        std::lock_guard<std::mutex> lock(checkpoint_mutex);
        checkpoint_out << line << '\n';
        checkpoint_out.flush();
      }
    }
  };
  if (thread_count == 1 || units.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  // Deterministic reduce: all partials in ascending range order.
  std::vector<const Partial*> ordered;
  for (const Partial& partial : done) ordered.push_back(&partial);
  for (const Partial& partial : scanned) ordered.push_back(&partial);
  std::sort(ordered.begin(), ordered.end(),
            [](const Partial* a, const Partial* b) { return a->begin < b->begin; });

  Partial totals(grid_points);
  for (const Partial* partial : ordered) merge_into(totals, *partial);

  SearchReport report;
  report.cls = plan.cls;
  report.check = plan.id;
  report.alpha_grid = plan.alphas;
  report.checked_count = totals.checked * grid_points;
  report.violations = std::move(totals.violations);
  report.max_mi = totals.max_mi;
  report.min_margin = totals.min_margin;
  report.maximizers.resize(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    auto& list = totals.maximizers[i];
    std::erase_if(list, [&](std::uint64_t bits) {
      (void)bits;
      return false;
    });
    std::vector<std::uint64_t> kept;
    for (std::uint64_t bits : list) kept.push_back(bits);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    // final tie filter against the global maximum
    report.maximizers[i] = std::move(kept);
  }
  return report;
}

std::vector<NoiseParameter> to_noise(std::span<const double> alphas) {
  std::vector<NoiseParameter> noise;
  noise.reserve(alphas.size());
  for (double a : alphas) noise.emplace_back(a);
  return noise;
}

}  // namespace

SearchReport verify_conjecture(const FunctionClass& cls, std::span<const double> alphas,
                               const ScanOptions& options) {
  CheckPlan plan{CheckKind::conjecture, "conjecture", cls,
                 std::vector<double>(alphas.begin(), alphas.end()), to_noise(alphas),
                 {}, {}};
  for (const NoiseParameter& np : plan.noise) plan.mi_rhs.push_back(conjectured_bound(np.alpha));
  return run_scan(std::move(plan), options);
}

SearchReport verify_theorem1(int n, std::span<const double> alphas, const ScanOptions& options) {
  for (double a : alphas)
    if (a < theorem1_premise_threshold())
      throw std::invalid_argument("grid point below the theorem premise threshold");
  CheckPlan plan{CheckKind::theorem1, "theorem1", FunctionClass{n, Scope::balanced},
                 std::vector<double>(alphas.begin(), alphas.end()), to_noise(alphas),
                 {}, {}};
  for (const NoiseParameter& np : plan.noise) plan.mi_rhs.push_back(theorem1_bound(np.alpha));
  return run_scan(std::move(plan), options);
}

SearchReport verify_moment_bounds(int n, std::span<const double> alphas,
                                  std::span<const int> k_set, const ScanOptions& options) {
  if (k_set.empty()) throw std::invalid_argument("k_set must not be empty");
  CheckPlan plan{CheckKind::moments, "moments", FunctionClass{n, Scope::balanced},
                 std::vector<double>(alphas.begin(), alphas.end()), to_noise(alphas),
                 {}, {}};
  plan.moment_rhs.resize(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (int k : k_set) {
      if (!moment_bound_premise(alphas[i], k))
        throw std::invalid_argument("pair (alpha=" + std::to_string(alphas[i]) +
                                    ", k=" + std::to_string(k) + ") violates the premise");
      plan.moment_rhs[i].emplace_back(k, moment_bound(alphas[i], k));
    }
  }
  return run_scan(std::move(plan), options);
}

SearchReport verify_corollary(int n, std::span<const double> alphas, const ScanOptions& options) {
  const double low = 0.5 - corollary_threshold(n);
  for (double a : alphas)
    if (a < low || a >= 0.5)
      throw std::invalid_argument("corollary grid must lie in [1/2 - 2^-n/4, 1/2)");
  CheckPlan plan{CheckKind::corollary, "corollary", FunctionClass{n, Scope::balanced},
                 std::vector<double>(alphas.begin(), alphas.end()), to_noise(alphas),
                 {}, {}};
  for (const NoiseParameter& np : plan.noise) plan.mi_rhs.push_back(conjectured_bound(np.alpha));
  return run_scan(std::move(plan), options);
}

SearchReport max_mi_scan(const FunctionClass& cls, std::span<const double> alphas,
                         const ScanOptions& options) {
  CheckPlan plan{CheckKind::scan, "search", cls,
                 std::vector<double>(alphas.begin(), alphas.end()), to_noise(alphas),
                 {}, {}};
  for (const NoiseParameter& np : plan.noise) plan.mi_rhs.push_back(conjectured_bound(np.alpha));
  return run_scan(std::move(plan), options);
}

CrossoverTable moment_crossover_experiment(int n, NoiseParameter noise,
                                           std::span<const int> k_list) {
  if (n < 1 || n > 7 || n % 2 == 0)
    throw std::invalid_argument("crossover experiment needs odd n <= 7");
  const BooleanFunction maj = majority(n);
  const BooleanFunction dict = dictator(n, 1);
  CrossoverTable table{n, noise, max_posterior_deviation(maj, noise).value,
                       max_posterior_deviation(dict, noise).value, false, {}};
  table.degenerate = table.maxdev_dictator <= 0.0;
  const double ratio = table.degenerate ? 0.0 : table.maxdev_majority / table.maxdev_dictator;
  for (int k : k_list) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    CrossoverRow row{k, even_moment(maj, noise, k), even_moment(dict, noise, k), 0.0, 0.0};
    if (!table.degenerate) {
      row.moment_ratio = row.moment_majority / row.moment_dictator;
      row.maxdev_ratio_power = ipow(ratio, 2 * static_cast<unsigned>(k));
    }
    table.rows.push_back(row);
  }
  return table;
}

std::vector<CheckpointRecord> load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open checkpoint file: " + path);
  std::vector<CheckpointRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    Partial partial = partial_from_json(j, 0);
    CheckpointRecord record;
    record.begin = partial.begin;
    record.end = partial.end;
    record.checked = partial.checked;
    record.violations = std::move(partial.violations);
    record.max_mi = std::move(partial.max_mi);
    record.maximizers = std::move(partial.maximizers);
    record.min_margin = std::move(partial.min_margin);
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace boolinfo
