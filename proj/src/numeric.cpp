#include "boolinfo/numeric.hpp"

#include <stdexcept>

namespace boolinfo {

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_terms(0, values.size(), [&](std::size_t i) { return values[i]; });
}

double ipow(double x, unsigned k) {
  double result = 1.0;
  double base = x;
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k != 0) base *= base;
  }
  return result;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> points(static_cast<std::size_t>(count));
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) points[static_cast<std::size_t>(i)] = lo + i * step;
  points.back() = hi;
  return points;
}

}  // namespace boolinfo
