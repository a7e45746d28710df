#include "gentle/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace gentle {

RationalHilbert hilbert_series(const GentlePresentation& p) {
  const Quiver& q = p.quiver();
  MaximalPathDecomposition d = decompose_maximal_paths(p);

  RationalHilbert h;
  for (int n = 1; n <= d.max_finite_length; ++n) {
    long long kn = 0;
    for (const auto& mp : d.paths)
      if (!mp.infinite && mp.path.length() >= n) ++kn;
    h.k_counts.push_back(kn);
  }

  // numerator over (1-t): |Q0| + (|Q1|-|Q0|) t - sum k_n t^(n+1)
  h.numerator.assign(d.max_finite_length + 2, 0);
  h.numerator[0] = q.vertex_count();
  h.numerator[1] = q.arrow_count() - q.vertex_count();
  for (int n = 1; n <= d.max_finite_length; ++n) h.numerator[n + 1] -= h.k_counts[n - 1];
  while (h.numerator.size() > 1 && h.numerator.back() == 0) h.numerator.pop_back();
  h.denom_exponent = 1;

  if (d.infinite_count == 0) {
    // Exact division by (1-t): q_i = sum_{j<=i} numerator_j.
    std::vector<long long> qt(h.numerator.size(), 0);
    long long run = 0;
    for (size_t i = 0; i < h.numerator.size(); ++i) {
      run += h.numerator[i];
      qt[i] = run;
    }
    if (run != 0) throw Error(Err::Internal, "numerator not divisible by (1-t)");
    qt.pop_back();  // quotient degree is one less
    while (qt.size() > 1 && qt.back() == 0) qt.pop_back();
    h.numerator = std::move(qt);
    h.denom_exponent = 0;
  }
  return h;
}

std::vector<long long> RationalHilbert::coefficients(int terms) const {
  std::vector<long long> c(terms, 0);
  for (int i = 0; i < terms && i < static_cast<int>(numerator.size()); ++i) c[i] = numerator[i];
  if (denom_exponent == 1) {
    for (int i = 1; i < terms; ++i) c[i] += c[i - 1];
  }
  return c;
}

long long RationalHilbert::total_dimension() const {
  long long s = 0;
  for (long long v : numerator) s += v;
  return s;
}

namespace {

std::string poly_string(const std::vector<long long>& c) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    long long a = c[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    long long mag = a < 0 ? -a : a;
    if (mag != 1 || i == 0) os << mag;
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string RationalHilbert::to_string() const {
  std::string num = poly_string(numerator);
  if (denom_exponent == 0) return num;
  return "(" + num + ")/(1 - t)";
}

Palindromy palindromy_check(const RationalHilbert& h) {
  Palindromy out;
  const auto& n = h.numerator;
  std::vector<long long> rev(n.rbegin(), n.rend());
  bool pal = rev == n;
  bool anti = true;
  for (size_t i = 0; i < n.size(); ++i)
    if (rev[i] != -n[i]) {
      anti = false;
      break;
    }
  if (!pal && !anti) return out;
  // h(1/t) = (-1)^e t^(e-d) rev(N)(t) / (1-t)^e with d = deg N.
  int e = h.denom_exponent;
  int sign_from_denom = (e % 2 == 0) ? 1 : -1;
  out.holds = true;
  out.sign = (pal ? 1 : -1) * sign_from_denom;
  out.k = e - static_cast<int>(n.size() - 1);
  return out;
}

}  // namespace gentle
