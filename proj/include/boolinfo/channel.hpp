#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boolinfo/hypercube.hpp"

namespace boolinfo {

/// BSC crossover probability with its derived correlation. alpha is the
/// single source of truth; rho = 1 - 2*alpha is stored so every consumer
/// sees the same rounding.
struct NoiseParameter {
  double alpha;
  double rho;

  explicit NoiseParameter(double alpha_value);
};

/// Posterior deviations d(y) = 1 - 2*Pr(f(X) = -1 | Y = y), one per output
/// mask. Entries are clipped to [-1, 1] to absorb transform round-off.
struct PosteriorTable {
  NoiseParameter noise;
  RealHypercubeFunction deviations;

  int n() const { return deviations.n(); }
  double deviation(std::size_t mask) const { return deviations[mask]; }
  double posterior(std::size_t mask) const { return (1.0 - deviations[mask]) / 2.0; }
};

/// Even moments M_2k = E_Y[d(Y)^(2k)] for k = 1..k_max, plus the exact
/// mutual information they accompany.
struct MomentReport {
  int n;
  NoiseParameter noise;
  std::vector<double> moments;  // moments[k-1] = M_2k
  double mi_bits;
};

struct MaxDeviation {
  double value;
  std::uint64_t mask;
};

struct HypercontractivityCheck {
  double lhs;
  double rhs;
  bool premise_ok;
};

/// Base-2 binary entropy; h(0) = h(1) = 0 by continuity.
double binary_entropy(double p);

/// c_k = log2(e) / (2k(2k-1)), the k-th coefficient of the entropy series.
/// bounds and channel both read their coefficients from here.
double entropy_taylor_coefficient(int k);

PosteriorTable posterior_table(const BooleanFunction& f, NoiseParameter noise);

/// I(f(X);Y) in bits: h(Pr(f = -1)) minus the mean posterior entropy.
double mutual_information(const BooleanFunction& f, NoiseParameter noise);
double mutual_information(const FourierSpectrum& spec, NoiseParameter noise);

/// M_2k by direct summation over the 2^n posterior deviations.
double even_moment(const BooleanFunction& f, NoiseParameter noise, int k);
double even_moment(const FourierSpectrum& spec, NoiseParameter noise, int k);

/// Sum over subsets of fhat(S)^2 * rho^(2|S|); the spectral route to the
/// second moment, kept separate from even_moment so the two can cross-check
/// each other.
double second_moment_spectral(const FourierSpectrum& spec, double rho);

/// Largest |d(y)| and the smallest output mask attaining it.
MaxDeviation max_posterior_deviation(const BooleanFunction& f, NoiseParameter noise);

/// Lower bound on h((1-p)/2): the first t-1 entropy-series terms with the
/// tail collapsed onto p^(2t).
double entropy_taylor_lower_bound(double p, int t);

/// Upper bound on I(f(X);Y) from the first t even moments. Only valid for
/// balanced f (H(f(X)) = 1); refuses to run otherwise.
double mi_upper_from_moments(const MomentReport& report, int t, bool balanced);

MomentReport moment_report(const BooleanFunction& f, NoiseParameter noise, int k_max = 8);

/// lhs = ||T_rho g||_q, rhs = ||g||_p under the uniform measure;
/// premise_ok reports whether rho <= sqrt((p-1)/(q-1)) (with a 1e-12 grace
/// so boundary choices of rho count as inside).
HypercontractivityCheck hypercontractive_check(const RealHypercubeFunction& g, double rho,
                                               double p, double q);

namespace detail {

/// Fills `out` with the clamped posterior deviations of the spectrum under
/// correlation rho_powers[1]: coefficient at s is scaled by
/// rho_powers[popcounts[s]] and the result is inverse-transformed. Shared by
/// the public channel operations and by the search scans, so both always
/// produce identical bits.
void deviation_table(std::span<const double> coeffs, std::span<const double> rho_powers,
                     std::span<const std::uint8_t> popcounts, std::span<double> out);

/// Mean of h((1 - d)/2) over the table.
double mean_posterior_entropy(std::span<const double> deviations);

/// Mean of d^(2k) over the table.
double moment_from_deviations(std::span<const double> deviations, int k);

std::vector<double> rho_powers(int n, double rho);
std::vector<std::uint8_t> popcount_table(int n);

/// h(Pr(f = -1)) read off the empty-set coefficient (exact for sign tables).
double function_entropy(const FourierSpectrum& spec);

}  // namespace detail

}  // namespace boolinfo
