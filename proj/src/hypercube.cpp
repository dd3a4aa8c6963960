#include "boolinfo/hypercube.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace boolinfo {

namespace {

int read_max_n() {
  const char* env = std::getenv("BOOLINFO_NMAX");
  if (env == nullptr || *env == '\0') return 24;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1 || value > 30)
    throw std::invalid_argument("BOOLINFO_NMAX must be an integer in [1, 30]");
  return static_cast<int>(value);
}

void check_n(int n) {
  if (n < 1 || n > max_n())
    throw std::invalid_argument("n must be in [1, " + std::to_string(max_n()) +
                                "], got " + std::to_string(n));
}

void check_coordinate(int n, int coordinate) {
  if (coordinate < 1 || coordinate > n)
    throw std::invalid_argument("coordinate " + std::to_string(coordinate) +
                                " out of range for n=" + std::to_string(n));
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

int max_n() {
  static const int cap = read_max_n();
  return cap;
}

BooleanFunction::BooleanFunction(int n, std::vector<std::int8_t> table)
    : n_(n), table_(std::move(table)) {
  check_n(n_);
  if (table_.size() != (std::size_t{1} << n_))
    throw std::invalid_argument("table length " + std::to_string(table_.size()) +
                                " does not match 2^" + std::to_string(n_));
  for (std::size_t m = 0; m < table_.size(); ++m)
    if (table_[m] != 1 && table_[m] != -1)
      throw std::invalid_argument("table entry at mask " + std::to_string(m) +
                                  " is not a sign");
}

BooleanFunction BooleanFunction::from_bits(int n, std::uint64_t bits) {
  check_n(n);
  if (n > 6) throw std::invalid_argument("from_bits supports n <= 6");
  const std::size_t size = std::size_t{1} << n;
  if (n < 6 && (bits >> size) != 0)
    throw std::invalid_argument("bit pattern has bits beyond the table");
  std::vector<std::int8_t> table(size);
  for (std::size_t m = 0; m < size; ++m)
    table[m] = (bits >> m) & 1u ? std::int8_t{-1} : std::int8_t{1};
  return BooleanFunction(n, std::move(table));
}

std::uint64_t BooleanFunction::to_bits() const {
  if (n_ > 6) throw std::invalid_argument("to_bits supports n <= 6");
  std::uint64_t bits = 0;
  for (std::size_t m = 0; m < table_.size(); ++m)
    if (table_[m] < 0) bits |= std::uint64_t{1} << m;
  return bits;
}

RealHypercubeFunction::RealHypercubeFunction(int n, std::vector<double> table)
    : n_(n), table_(std::move(table)) {
  check_n(n_);
  if (table_.size() != (std::size_t{1} << n_))
    throw std::invalid_argument("table length does not match 2^n");
  for (double v : table_)
    if (!std::isfinite(v)) throw std::invalid_argument("table contains a non-finite value");
}

FourierSpectrum::FourierSpectrum(int n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  check_n(n_);
  if (coeffs_.size() != (std::size_t{1} << n_))
    throw std::invalid_argument("coefficient count does not match 2^n");
  for (double v : coeffs_)
    if (!std::isfinite(v)) throw std::invalid_argument("spectrum contains a non-finite value");
}

BooleanFunction dictator(int n, int coordinate) {
  check_n(n);
  check_coordinate(n, coordinate);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int8_t> table(size);
  for (std::size_t m = 0; m < size; ++m)
    table[m] = (m >> (coordinate - 1)) & 1u ? std::int8_t{-1} : std::int8_t{1};
  return BooleanFunction(n, std::move(table));
}

BooleanFunction parity(int n, std::span<const int> coordinates) {
  check_n(n);
  std::uint32_t subset = 0;
  for (int c : coordinates) {
    check_coordinate(n, c);
    subset |= std::uint32_t{1} << (c - 1);
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int8_t> table(size);
  for (std::size_t m = 0; m < size; ++m)
    table[m] = std::popcount(static_cast<std::uint32_t>(m) & subset) % 2 ? std::int8_t{-1}
                                                                         : std::int8_t{1};
  return BooleanFunction(n, std::move(table));
}

BooleanFunction majority(int n) {
  check_n(n);
  if (n % 2 == 0)
    throw std::invalid_argument("majority needs odd n, got " + std::to_string(n));
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int8_t> table(size);
  for (std::size_t m = 0; m < size; ++m) {
    const int minus_ones = std::popcount(static_cast<std::uint32_t>(m));
    table[m] = 2 * minus_ones > n ? std::int8_t{-1} : std::int8_t{1};
  }
  return BooleanFunction(n, std::move(table));
}

BooleanFunction constant(int n, int sign) {
  check_n(n);
  if (sign != 1 && sign != -1) throw std::invalid_argument("constant sign must be +1 or -1");
  return BooleanFunction(n, std::vector<std::int8_t>(std::size_t{1} << n,
                                                     static_cast<std::int8_t>(sign)));
}

BooleanFunction threshold(int n, std::span<const double> weights, double theta) {
  check_n(n);
  if (weights.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("threshold needs exactly n weights");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int8_t> table(size);
  for (std::size_t m = 0; m < size; ++m) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += (m >> j) & 1u ? -weights[j] : weights[j];
    table[m] = sum >= theta ? std::int8_t{1} : std::int8_t{-1};
  }
  return BooleanFunction(n, std::move(table));
}

bool is_balanced(const BooleanFunction& f) {
  std::size_t minus_ones = 0;
  for (std::int8_t v : f.table())
    if (v < 0) ++minus_ones;
  return minus_ones == f.size() / 2;
}

void walsh_hadamard(std::span<double> data) {
  const std::size_t size = data.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("walsh_hadamard needs a power-of-two table");
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += half << 1) {
      for (std::size_t j = block; j < block + half; ++j) {
        const double u = data[j];
        const double v = data[j + half];
        data[j] = u + v;
        data[j + half] = u - v;
      }
    }
  }
}

FourierSpectrum fourier_transform(const BooleanFunction& f) {
  std::vector<double> coeffs(f.table().begin(), f.table().end());
  walsh_hadamard(coeffs);
  const double scale = std::ldexp(1.0, -f.n());
  for (double& c : coeffs) c *= scale;
  return FourierSpectrum(f.n(), std::move(coeffs));
}

FourierSpectrum fourier_transform(const RealHypercubeFunction& g) {
  std::vector<double> coeffs(g.table().begin(), g.table().end());
  walsh_hadamard(coeffs);
  const double scale = std::ldexp(1.0, -g.n());
  for (double& c : coeffs) c *= scale;
  return FourierSpectrum(g.n(), std::move(coeffs));
}

RealHypercubeFunction inverse_transform(const FourierSpectrum& spec) {
  std::vector<double> table(spec.coeffs().begin(), spec.coeffs().end());
  walsh_hadamard(table);
  return RealHypercubeFunction(spec.n(), std::move(table));
}

FourierSpectrum attenuate(const FourierSpectrum& spec, double rho) {
  if (!(rho >= 0.0)) throw std::invalid_argument("rho must be nonnegative");
  std::vector<double> powers(static_cast<std::size_t>(spec.n()) + 1);
  powers[0] = 1.0;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * rho;
  std::vector<double> coeffs(spec.coeffs().begin(), spec.coeffs().end());
  for (std::size_t s = 0; s < coeffs.size(); ++s)
    coeffs[s] *= powers[std::popcount(static_cast<std::uint64_t>(s))];
  return FourierSpectrum(spec.n(), std::move(coeffs));
}

RealHypercubeFunction noise_operator(const BooleanFunction& f, double rho) {
  return inverse_transform(attenuate(fourier_transform(f), rho));
}

RealHypercubeFunction noise_operator(const FourierSpectrum& spec, double rho) {
  return inverse_transform(attenuate(spec, rho));
}

std::vector<double> weight_profile(const FourierSpectrum& spec) {
  std::vector<double> levels(static_cast<std::size_t>(spec.n()) + 1, 0.0);
  for (std::size_t s = 0; s < spec.size(); ++s) {
    const double c = spec[s];
    levels[std::popcount(static_cast<std::uint64_t>(s))] += c * c;
  }
  return levels;
}

std::string to_text(const BooleanFunction& f) {
  const std::size_t size = f.size();
  const std::size_t digits = size <= 4 ? 1 : size / 4;
  std::string hex(digits, '0');
  for (std::size_t m = 0; m < size; ++m) {
    if (f[m] >= 0) continue;
    const std::size_t digit = digits - 1 - m / 4;
    hex[digit] = static_cast<char>("0123456789abcdef"[hex_value(hex[digit]) | (1 << (m % 4))]);
  }
  return std::to_string(f.n()) + ":" + hex;
}

BooleanFunction function_from_text(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("expected \"n:HEX\", missing ':'");
  int n = 0;
  {
    const std::string head(text.substr(0, colon));
    std::size_t used = 0;
    try {
      n = std::stoi(head, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad bit-count before ':' in \"" + std::string(text) + "\"");
    }
    if (used != head.size())
      throw std::invalid_argument("bad bit-count before ':' in \"" + std::string(text) + "\"");
  }
  check_n(n);
  const std::string_view hex = text.substr(colon + 1);
  const std::size_t size = std::size_t{1} << n;
  const std::size_t max_digits = size <= 4 ? 1 : size / 4;
  if (hex.empty() || hex.size() > max_digits)
    throw std::invalid_argument("hex table must have between 1 and " +
                                std::to_string(max_digits) + " digits");
  std::vector<std::int8_t> table(size, 1);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int value = hex_value(hex[hex.size() - 1 - i]);
    if (value < 0)
      throw std::invalid_argument(std::string("invalid hex digit '") + hex[hex.size() - 1 - i] +
                                  "'");
    for (int b = 0; b < 4; ++b) {
      if ((value >> b & 1) == 0) continue;
      const std::size_t m = i * 4 + static_cast<std::size_t>(b);
      if (m >= size) throw std::invalid_argument("hex table has bits beyond 2^n");
      table[m] = -1;
    }
  }
  return BooleanFunction(n, std::move(table));
}

}  // namespace boolinfo
