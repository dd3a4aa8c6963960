#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace boolinfo {

/// Deterministic pairwise (recursive halving) summation. Table reductions go
/// through this so results do not depend on the caller's thread count, and so
/// sums of 2^n equal values stay exact.
double pairwise_sum(std::span<const double> values);

/// Pairwise reduction of term(i) for i in [begin, end) without materializing
/// the terms.
template <typename Term>
double pairwise_sum_terms(std::size_t begin, std::size_t end, Term&& term) {
  const std::size_t count = end - begin;
  if (count <= 8) {
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = begin + count / 2;
  return pairwise_sum_terms(begin, mid, term) + pairwise_sum_terms(mid, end, term);
}

/// x^k by binary exponentiation; one fixed evaluation order everywhere.
double ipow(double x, unsigned k);

/// count evenly spaced points from lo to hi inclusive (count >= 1; a single
/// point sits at lo).
std::vector<double> linear_grid(double lo, double hi, int count);

}  // namespace boolinfo
