#include "boolinfo/channel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boolinfo/errors.hpp"
#include "boolinfo/numeric.hpp"

namespace boolinfo {

namespace {

double clamp_unit(double v) { return std::min(1.0, std::max(-1.0, v)); }

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("moment order k must be >= 1");
}

}  // namespace

NoiseParameter::NoiseParameter(double alpha_value) : alpha(alpha_value), rho(1.0 - 2.0 * alpha_value) {
  if (!(alpha_value >= 0.0 && alpha_value <= 0.5))
    throw std::invalid_argument("alpha must lie in [0, 1/2]");
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -(p * std::log2(p)) - ((1.0 - p) * std::log2(1.0 - p));
}

double entropy_taylor_coefficient(int k) {
  check_k(k);
  return std::numbers::log2e / (2.0 * k * (2.0 * k - 1.0));
}

namespace detail {

std::vector<double> rho_powers(int n, double rho) {
  std::vector<double> powers(static_cast<std::size_t>(n) + 1);
  powers[0] = 1.0;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * rho;
  return powers;
}

std::vector<std::uint8_t> popcount_table(int n) {
  std::vector<std::uint8_t> counts(std::size_t{1} << n);
  for (std::size_t s = 0; s < counts.size(); ++s)
    counts[s] = static_cast<std::uint8_t>(std::popcount(static_cast<std::uint64_t>(s)));
  return counts;
}

void deviation_table(std::span<const double> coeffs, std::span<const double> rho_powers,
                     std::span<const std::uint8_t> popcounts, std::span<double> out) {
  for (std::size_t s = 0; s < coeffs.size(); ++s) out[s] = coeffs[s] * rho_powers[popcounts[s]];
  walsh_hadamard(out);
  for (double& d : out) d = clamp_unit(d);
}

double mean_posterior_entropy(std::span<const double> deviations) {
  const double sum = pairwise_sum_terms(0, deviations.size(), [&](std::size_t y) {
    const double p = std::min(1.0, std::max(0.0, (1.0 - deviations[y]) / 2.0));
    return binary_entropy(p);
  });
  return std::ldexp(sum, -std::countr_zero(deviations.size()));
}

double moment_from_deviations(std::span<const double> deviations, int k) {
  const double sum = pairwise_sum_terms(0, deviations.size(), [&](std::size_t y) {
    const double dd = deviations[y] * deviations[y];
    return ipow(dd, static_cast<unsigned>(k));
  });
  return std::ldexp(sum, -std::countr_zero(deviations.size()));
}

double function_entropy(const FourierSpectrum& spec) {
  const double p_minus = std::min(1.0, std::max(0.0, (1.0 - spec[0]) / 2.0));
  return binary_entropy(p_minus);
}

}  // namespace detail

namespace {

std::vector<double> deviations_for(const FourierSpectrum& spec, double rho) {
  const auto powers = detail::rho_powers(spec.n(), rho);
  const auto counts = detail::popcount_table(spec.n());
  std::vector<double> out(spec.size());
  detail::deviation_table(spec.coeffs(), powers, counts, out);
  return out;
}

}  // namespace

PosteriorTable posterior_table(const BooleanFunction& f, NoiseParameter noise) {
  auto deviations = deviations_for(fourier_transform(f), noise.rho);
  return PosteriorTable{noise, RealHypercubeFunction(f.n(), std::move(deviations))};
}

double mutual_information(const FourierSpectrum& spec, NoiseParameter noise) {
  const auto deviations = deviations_for(spec, noise.rho);
  return detail::function_entropy(spec) - detail::mean_posterior_entropy(deviations);
}

double mutual_information(const BooleanFunction& f, NoiseParameter noise) {
  return mutual_information(fourier_transform(f), noise);
}

double even_moment(const FourierSpectrum& spec, NoiseParameter noise, int k) {
  check_k(k);
  const auto deviations = deviations_for(spec, noise.rho);
  return detail::moment_from_deviations(deviations, k);
}

double even_moment(const BooleanFunction& f, NoiseParameter noise, int k) {
  return even_moment(fourier_transform(f), noise, k);
}

double second_moment_spectral(const FourierSpectrum& spec, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0, 1]");
  const auto counts = detail::popcount_table(spec.n());
  const double rho_sq = rho * rho;
  const auto powers = detail::rho_powers(spec.n(), rho_sq);
  return pairwise_sum_terms(0, spec.size(), [&](std::size_t s) {
    const double c = spec[s];
    return c * c * powers[counts[s]];
  });
}

MaxDeviation max_posterior_deviation(const BooleanFunction& f, NoiseParameter noise) {
  const PosteriorTable table = posterior_table(f, noise);
  MaxDeviation best{-1.0, 0};
  for (std::size_t y = 0; y < table.deviations.size(); ++y) {
    const double magnitude = std::abs(table.deviation(y));
    if (magnitude > best.value) best = MaxDeviation{magnitude, y};
  }
  return best;
}

double entropy_taylor_lower_bound(double p, int t) {
  if (!(p >= -1.0 && p <= 1.0)) throw std::invalid_argument("p outside [-1, 1]");
  check_k(t);
  double used = 0.0;
  double acc = 0.0;
  for (int k = 1; k < t; ++k) {
    const double c = entropy_taylor_coefficient(k);
    used += c;
    acc += c * ipow(p, 2 * static_cast<unsigned>(k));
  }
  acc += (1.0 - used) * ipow(p, 2 * static_cast<unsigned>(t));
  return 1.0 - acc;
}

double mi_upper_from_moments(const MomentReport& report, int t, bool balanced) {
  check_k(t);
  if (!balanced)
    throw premise_error("moment-based MI bound requires a balanced function");
  if (report.moments.size() < static_cast<std::size_t>(t))
    throw std::invalid_argument("report holds fewer than t moments");
  double used = 0.0;
  double acc = 0.0;
  for (int k = 1; k < t; ++k) {
    const double c = entropy_taylor_coefficient(k);
    used += c;
    acc += c * report.moments[static_cast<std::size_t>(k) - 1];
  }
  acc += (1.0 - used) * report.moments[static_cast<std::size_t>(t) - 1];
  return acc;
}

MomentReport moment_report(const BooleanFunction& f, NoiseParameter noise, int k_max) {
  check_k(k_max);
  const FourierSpectrum spec = fourier_transform(f);
  const auto deviations = deviations_for(spec, noise.rho);
  MomentReport report{f.n(), noise, {}, 0.0};
  report.moments.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k)
    report.moments.push_back(detail::moment_from_deviations(deviations, k));
  report.mi_bits = detail::function_entropy(spec) - detail::mean_posterior_entropy(deviations);
  return report;
}

HypercontractivityCheck hypercontractive_check(const RealHypercubeFunction& g, double rho,
                                               double p, double q) {
  if (!(p >= 1.0) || !(q > p) || !std::isfinite(q))
    throw std::invalid_argument("need 1 <= p < q < infinity");
  if (!(rho >= 0.0)) throw std::invalid_argument("rho must be nonnegative");
  const RealHypercubeFunction smoothed = noise_operator(fourier_transform(g), rho);
  const auto norm = [](const RealHypercubeFunction& h, double exponent) {
    const double sum = pairwise_sum_terms(0, h.size(), [&](std::size_t y) {
      return std::pow(std::abs(h[y]), exponent);
    });
    return std::pow(std::ldexp(sum, -h.n()), 1.0 / exponent);
  };
  const double threshold = std::sqrt((p - 1.0) / (q - 1.0));
  return HypercontractivityCheck{norm(smoothed, q), norm(g, p), rho <= threshold + 1e-12};
}

}  // namespace boolinfo
