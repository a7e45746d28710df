#pragma once

#include "gentle/max_paths.hpp"

namespace gentle {

// h(t) = numerator / (1-t)^denom_exponent with integer numerator coefficients.
// Finite-dimensional presentations divide out the (1-t) factor exactly, so
// denom_exponent is 1 precisely when some maximal path is infinite.
struct RationalHilbert {
  std::vector<long long> numerator;  // coefficient of t^i at index i
  int denom_exponent = 0;
  std::vector<long long> k_counts;  // k_counts[n-1] = #finite maximal paths of length >= n

  std::vector<long long> coefficients(int terms) const;
  std::string to_string() const;
  long long total_dimension() const;  // numerator(1); only meaningful when denom_exponent == 0
};

RationalHilbert hilbert_series(const GentlePresentation& p);

// Existence of sign and k with h(1/t) = sign * t^k * h(t).
// For a numerator N of degree d over (1-t)^e this holds iff N is palindromic
// or anti-palindromic, with k = e - d.
struct Palindromy {
  bool holds = false;
  int sign = 0;  // +1 / -1 when holds
  std::optional<int> k;
};

Palindromy palindromy_check(const RationalHilbert& h);

}  // namespace gentle
