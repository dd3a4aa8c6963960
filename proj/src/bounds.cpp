#include "boolinfo/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "boolinfo/errors.hpp"
#include "boolinfo/numeric.hpp"

namespace boolinfo {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw std::invalid_argument("alpha must lie in [0, 1/2]");
}

void check_order(int value, const char* name) {
  if (value < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
}

// 1 - h((1-rho)/2) as the entropy series; all terms are positive, so the
// value keeps full relative precision where direct 1 - h cancels to noise.
double one_minus_entropy_series(double rho) {
  const double rho_sq = rho * rho;
  double acc = 0.0;
  for (int k = 24; k >= 1; --k)
    acc = acc * rho_sq + entropy_taylor_coefficient(k);
  return acc * rho_sq;
}

}  // namespace

double conjectured_bound(double alpha) {
  check_alpha(alpha);
  const double rho = 1.0 - 2.0 * alpha;
  if (rho < 0.125) return one_minus_entropy_series(rho);
  return 1.0 - binary_entropy(alpha);
}

double quadratic_bound(double alpha) {
  check_alpha(alpha);
  const double rho = 1.0 - 2.0 * alpha;
  return rho * rho;
}

double general_t_premise_threshold(int t) {
  check_order(t, "t");
  return 0.5 * (1.0 - 1.0 / std::sqrt(2.0 * t - 1.0));
}

double theorem1_premise_threshold() { return general_t_premise_threshold(2); }

bool moment_bound_premise(double alpha, int k) {
  check_alpha(alpha);
  check_order(k, "k");
  return (1.0 - 2.0 * alpha) * std::sqrt(2.0 * k - 1.0) <= 1.0;
}

double general_t_bound(double alpha, int t) {
  check_alpha(alpha);
  check_order(t, "t");
  if (alpha < general_t_premise_threshold(t))
    throw premise_error("general-t bound needs alpha >= (1 - 1/sqrt(2t-1))/2, got alpha=" +
                        std::to_string(alpha) + " for t=" + std::to_string(t));
  const double rho = 1.0 - 2.0 * alpha;
  double used = 0.0;
  double acc = 0.0;
  for (int k = 1; k < t; ++k) {
    const double c = entropy_taylor_coefficient(k);
    used += c;
    acc += c * ipow(2.0 * k - 1.0, static_cast<unsigned>(k)) *
           ipow(rho, 2 * static_cast<unsigned>(k));
  }
  acc += (1.0 - used) * ipow(2.0 * t - 1.0, static_cast<unsigned>(t)) *
         ipow(rho, 2 * static_cast<unsigned>(t));
  return acc;
}

double theorem1_bound(double alpha) { return general_t_bound(alpha, 2); }

double moment_bound(double alpha, int k) {
  if (!moment_bound_premise(alpha, k))
    throw premise_error("moment bound needs (1-2*alpha)*sqrt(2k-1) <= 1, got alpha=" +
                        std::to_string(alpha) + " for k=" + std::to_string(k));
  const double rho = 1.0 - 2.0 * alpha;
  return ipow(2.0 * k - 1.0, static_cast<unsigned>(k)) * ipow(rho, 2 * static_cast<unsigned>(k));
}

double corollary_threshold(int n) {
  check_order(n, "n");
  return std::ldexp(1.0, -n - 2);
}

double nondictator_mi_bound(double alpha, int n) {
  check_alpha(alpha);
  check_order(n, "n");
  if (alpha < theorem1_premise_threshold())
    throw premise_error("nondictator bound needs alpha >= (1 - 1/sqrt(3))/2");
  const double c = entropy_taylor_coefficient(1);
  const double four_to_minus_n = std::ldexp(1.0, -2 * n);
  const double rho = 1.0 - 2.0 * alpha;
  const double x = rho * rho;
  return c * (1.0 - four_to_minus_n) * x + (9.0 * (1.0 - c) + c * four_to_minus_n) * (x * x);
}

BoundReport bound_report(NoiseParameter noise, std::span<const int> t_set,
                         std::span<const int> k_set) {
  BoundReport report{noise, conjectured_bound(noise.alpha), quadratic_bound(noise.alpha),
                     std::nullopt, {}, {}};
  if (noise.alpha >= theorem1_premise_threshold()) report.theorem1 = theorem1_bound(noise.alpha);
  for (int t : t_set) {
    if (noise.alpha >= general_t_premise_threshold(t))
      report.general_t[t] = general_t_bound(noise.alpha, t);
    else
      report.general_t[t] = std::nullopt;
  }
  for (int k : k_set) {
    if (moment_bound_premise(noise.alpha, k))
      report.moment_bounds[k] = moment_bound(noise.alpha, k);
    else
      report.moment_bounds[k] = std::nullopt;
  }
  return report;
}

}  // namespace boolinfo
