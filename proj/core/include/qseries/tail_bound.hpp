#pragma once

#include <cstddef>

namespace qseries {

/// Majorant C * n^m * e^(-beta n) for the summands of an exponentially
/// decaying series, valid for n with beta*n >= min_exponent.
struct TailMajorant {
  double log10_c = 0.0;
  int m = 0;
  double beta = 0.0;
  double min_exponent = 0.0;
};

/// log10 of a rigorous upper bound on sum_{n > N} C n^m e^(-beta n), or +inf
/// when N is too small for the geometric-ratio argument to apply.
double tail_bound_log10(const TailMajorant& majorant, std::size_t terms);

/// Smallest N (found by doubling, then bisection) whose tail bound is below
/// 10^(-target_digits).
std::size_t truncation_index(const TailMajorant& majorant, double target_digits);

}  // namespace qseries
