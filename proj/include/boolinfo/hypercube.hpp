#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolinfo {

// Index convention used by every table and spectrum in this library:
// an input mask m encodes the point x of {-1,+1}^n with bit (j-1) of m set
// iff x_j = -1 (so b -> (-1)^b maps bit 0/1 to +1/-1). Fourier character
// subsets S use the same bit order: coeffs[s] belongs to S = {j : bit j-1 of
// s set}.

/// Table-size cap on n. Defaults to 24 (a 2^24 table of doubles is 128 MiB);
/// the BOOLINFO_NMAX environment variable overrides it, read once per process.
int max_n();

/// A Boolean function {-1,+1}^n -> {-1,+1} stored as a dense sign table.
class BooleanFunction {
public:
  BooleanFunction(int n, std::vector<std::int8_t> table);

  /// Builds the function whose truth table is the bit pattern `bits`:
  /// bit m set <=> f(mask m) = -1. Requires n <= 6 so the table fits in one
  /// word; larger functions go through the vector constructor.
  static BooleanFunction from_bits(int n, std::uint64_t bits);

  int n() const { return n_; }
  std::size_t size() const { return table_.size(); }
  std::int8_t operator[](std::size_t mask) const { return table_[mask]; }
  std::span<const std::int8_t> table() const { return table_; }

  /// The truth table as a bit pattern (bit m set <=> f(m) = -1); n <= 6 only.
  std::uint64_t to_bits() const;

  bool operator==(const BooleanFunction&) const = default;

private:
  int n_;
  std::vector<std::int8_t> table_;
};

/// A real-valued table on {-1,+1}^n (noise-operator outputs, posteriors).
class RealHypercubeFunction {
public:
  RealHypercubeFunction(int n, std::vector<double> table);

  int n() const { return n_; }
  std::size_t size() const { return table_.size(); }
  double operator[](std::size_t mask) const { return table_[mask]; }
  std::span<const double> table() const { return table_; }

private:
  int n_;
  std::vector<double> table_;
};

/// Fourier-Walsh coefficients; coeffs[s] is the correlation of f with the
/// parity character on the subset encoded by s.
class FourierSpectrum {
public:
  FourierSpectrum(int n, std::vector<double> coeffs);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t subset_mask) const { return coeffs_[subset_mask]; }
  std::span<const double> coeffs() const { return coeffs_; }

private:
  int n_;
  std::vector<double> coeffs_;
};

// Named families. Coordinates are 1-based to match the x_j naming.
BooleanFunction dictator(int n, int coordinate);
BooleanFunction parity(int n, std::span<const int> coordinates);
BooleanFunction majority(int n);  // odd n only
BooleanFunction constant(int n, int sign);
/// f(x) = +1 iff sum_j weights[j-1] * x_j >= theta.
BooleanFunction threshold(int n, std::span<const double> weights, double theta);

/// Exact integer count: true iff exactly 2^(n-1) entries equal -1.
bool is_balanced(const BooleanFunction& f);

/// In-place Walsh-Hadamard butterfly (unnormalized, self-inverse up to 2^n).
/// data.size() must be a power of two.
void walsh_hadamard(std::span<double> data);

FourierSpectrum fourier_transform(const BooleanFunction& f);
FourierSpectrum fourier_transform(const RealHypercubeFunction& g);
RealHypercubeFunction inverse_transform(const FourierSpectrum& spec);

/// Scales each coefficient by rho^|S|. rho must be nonnegative; values above
/// 1 are legal (the T_{1/rho} composition needs them) but leave the [-1,1]
/// output guarantee behind.
FourierSpectrum attenuate(const FourierSpectrum& spec, double rho);

RealHypercubeFunction noise_operator(const BooleanFunction& f, double rho);
RealHypercubeFunction noise_operator(const FourierSpectrum& spec, double rho);

/// W_k = sum of squared coefficients at level k, for k = 0..n.
std::vector<double> weight_profile(const FourierSpectrum& spec);

/// Truth-table text format "n:HEX": HEX is the 2^n-bit table as a big-endian
/// hex string, bit m set <=> f(mask m) = -1. Round-trips bit-exactly.
std::string to_text(const BooleanFunction& f);
BooleanFunction function_from_text(std::string_view text);

}  // namespace boolinfo
