#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gentle/invariants.hpp"
#include "gentle/resolutions.hpp"

namespace gentle {

using Rational = boost::multiprecision::cpp_rational;

// Dense rational matrix, just enough linear algebra for the verifiers.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }
  bool is_zero() const;
  int rank() const;
  static QMatrix mul(const QMatrix& a, const QMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// The degreewise basis of A out to a bound, with constant-time products.
// A basis path is determined by its degree and first arrow, so each degree
// slice is keyed by first arrow (stationary paths by vertex).
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(const GentlePresentation& p, int bound);

  const GentlePresentation& presentation() const { return *pres_; }
  int bound() const { return bound_; }
  int dim(int n) const;
  const std::vector<Path>& basis(int n) const;
  int index_of(const Path& path) const;  // index within its degree, -1 if absent

  // Product of basis elements by (degree, index); nullopt when the product is
  // zero. Throws WindowTooWide when the result degree exceeds the bound.
  std::optional<std::pair<int, int>> product(int dp, int ip, int dq, int iq) const;

  // A_n -> A_{n + l(by)} as matrices; `by` must be a basis path.
  QMatrix right_mult(const Path& by, int n) const;
  QMatrix left_mult(const Path& by, int n) const;

 private:
  const GentlePresentation* pres_;
  int bound_ = 0;
  std::vector<std::vector<Path>> basis_;          // by degree
  std::vector<std::vector<int>> index_by_first_;  // degree >= 1: arrow -> index
};

// Basis paths of length len ending at v (unique backward walk per last arrow).
std::vector<Path> paths_into(const GentlePresentation& p, VertexId v, int len);

struct CheckItem {
  enum class Kind {
    CentralityFailed,
    DimensionMismatch,
    NotAComplex,
    ExactnessFailed,
    NotFree,
  } kind = Kind::DimensionMismatch;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool ok() const { return items.empty(); }
  void add(CheckItem::Kind kind, std::string detail) { items.push_back({kind, std::move(detail)}); }
};

// Generator centrality by exhaustive products, and the degreewise centralizer
// dimension against the dimension the description predicts.
CheckReport verify_center(const GentlePresentation& p, const CenterDescription& c, int bound);

struct DegreeWindow {
  int lo = 0;
  int hi = 0;
};

// Materializes every term of the complex in each degree of the window, checks
// consecutive composites vanish (including the augmentation) and graded
// exactness by rank counting. Throws WindowTooWide instead of clipping when a
// slice would need paths longer than the bound.
CheckReport verify_complex(const GentlePresentation& p, const GradedComplex& c, int bound,
                           DegreeWindow w);

// Degreewise dimensions of Ext^i(S(v), A) from the dual of the projective
// resolution, for degrees d with -i <= d <= bound - i - 1.
std::map<int, long long> ext_dims_bruteforce(const GentlePresentation& p, VertexId v, int i,
                                             int bound);

// Dimensions the descriptor predicts on the same window; OracleDims must
// already carry its dims.
std::map<int, long long> descriptor_dims(const GentlePresentation& p, const ExtDescriptor& e,
                                         int lo, int hi);

// Checks {b * x^k : b in basis, k >= 0} is degreewise independent and spanning
// out to the bound, where x is the sum of the given paths (all of one length).
CheckReport verify_free_module(const GentlePresentation& p, const std::vector<Path>& basis,
                               const std::vector<Path>& x_summands, int bound);

// Membership in the two-sided monomial ideal generated by the idempotents at
// the listed vertices and the listed paths: q passes through a listed vertex
// or contains a listed path as a contiguous subword.
bool in_monomial_ideal(const GentlePresentation& p, const Path& q,
                       const std::vector<VertexId>& idempotents, const std::vector<Path>& paths);

// Degreewise dimensions of that ideal for degrees 0..bound.
std::vector<long long> ideal_dims(const GentlePresentation& p,
                                  const std::vector<VertexId>& idempotents,
                                  const std::vector<Path>& paths, int bound);

}  // namespace gentle
