#pragma once

#include <map>
#include <optional>
#include <span>

#include "boolinfo/channel.hpp"

namespace boolinfo {

// Closed-form bounds on I(f(X);Y). Each function validates 0 <= alpha <= 1/2
// and throws premise_error outside its proven validity range instead of
// extrapolating; *_premise predicates let callers render blanks instead.

/// 1 - h(alpha), the conjectured ceiling. Evaluated by series for small
/// 1-2*alpha so the value keeps full relative precision near alpha = 1/2.
double conjectured_bound(double alpha);

/// (1-2*alpha)^2, the classical universal bound.
double quadratic_bound(double alpha);

/// Fourth-moment refinement for balanced functions; valid for
/// alpha >= (1 - 1/sqrt(3))/2. Alias of general_t_bound(alpha, 2).
double theorem1_bound(double alpha);

/// (2k-1)^k (1-2*alpha)^(2k), valid while (1-2*alpha)*sqrt(2k-1) <= 1.
double moment_bound(double alpha, int k);

/// The order-t moment bound on mutual information; t = 1 recovers the
/// quadratic bound, t = 2 is theorem1_bound.
double general_t_bound(double alpha, int t);

/// Noise level 2^-n / 4 below 1/2 at which dictatorship provably wins among
/// balanced functions.
double corollary_threshold(int n);

/// Bound on any balanced non-dictator, strictly below the dictator value on
/// [1/2 - corollary_threshold(n), 1/2].
double nondictator_mi_bound(double alpha, int n);

double theorem1_premise_threshold();        // (1 - 1/sqrt(3))/2
double general_t_premise_threshold(int t);  // (1 - 1/sqrt(2t-1))/2
bool moment_bound_premise(double alpha, int k);

/// One alpha's worth of bound evaluations; premise failures become empty
/// optionals rather than values.
struct BoundReport {
  NoiseParameter noise;
  double conjectured;
  double quadratic;
  std::optional<double> theorem1;
  std::map<int, std::optional<double>> general_t;
  std::map<int, std::optional<double>> moment_bounds;
};

BoundReport bound_report(NoiseParameter noise, std::span<const int> t_set,
                         std::span<const int> k_set);

}  // namespace boolinfo
