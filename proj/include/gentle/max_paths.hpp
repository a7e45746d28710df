#pragma once

#include "gentle/presentation.hpp"

namespace gentle {

// Maximal path of the presentation. Finite: a basis path that extends by no
// arrow on either side. Infinite: represented by its primitive cycle, rotated
// to start at the smallest arrow id (canonical rotation).
struct MaximalPath {
  bool infinite = false;
  Path path;
  int period() const { return infinite ? path.length() : -1; }

  friend bool operator==(const MaximalPath& a, const MaximalPath& b) {
    return a.infinite == b.infinite && a.path == b.path;
  }
};

// Right/left extension walk from an arrow. cyclic=false: path is the right
// (left) maximal basis path starting (ending) at the arrow. cyclic=true: path
// is the primitive cycle starting (ending) at the arrow.
struct WalkResult {
  bool cyclic = false;
  Path path;
};

WalkResult gamma_r(const GentlePresentation& p, ArrowId a);
WalkResult gamma_l(const GentlePresentation& p, ArrowId a);

struct MaximalPathDecomposition {
  std::vector<MaximalPath> paths;     // discovery order (scan arrows by id)
  std::vector<int> arrow_assignment;  // arrow id -> index into paths
  int finite_count = 0;
  int infinite_count = 0;
  // Longest finite maximal path length, 0 when none.
  int max_finite_length = 0;
};

// Every arrow lies on exactly one maximal path; this computes the partition.
MaximalPathDecomposition decompose_maximal_paths(const GentlePresentation& p);

// Same quiver, complementary relation set. Always validates; an involution.
GentlePresentation koszul_dual(const GentlePresentation& p);

// One forbidden-walk thread out of a vertex: the walk from `first` along
// forbidden successors. Finite threads carry the whole walk (its full word is
// a right maximal forbidden path); periodic threads carry one period, the walk
// having returned to `first`.
struct ForbiddenThread {
  ArrowId first = -1;
  std::vector<ArrowId> arrows;
  bool periodic = false;
  // Word of the first `len` arrows of the (possibly repeating) walk; nullopt
  // when a finite thread is shorter than len.
  std::optional<Path> word(int len) const;
};

// R(v)_k, the degree-k forbidden paths out of v, organised by thread.
struct ForbiddenSets {
  VertexId vertex = -1;
  int max_k = 0;
  std::vector<ForbiddenThread> threads;  // by first-arrow id
  std::vector<std::vector<Path>> r_sets;  // r_sets[k] = R(v)_k for k = 0..max_k
  std::vector<Path> r_prime;  // all right maximal forbidden words out of v (finite threads)
};

ForbiddenSets forbidden_sets(const GentlePresentation& p, VertexId v, int max_k);

// Pair (p, w): p a finite maximal forbidden path, w a basis path from v with
// t(w) = t(p) and last arrows distinct. w is the stationary path or a right
// maximal basis path out of v.
struct LPlusPair {
  Path p;
  Path w;
  bool w_is_unit = false;
  ArrowId w_first = -1;  // first arrow of w when not the unit
};

struct LPrimeLPlus {
  std::vector<Path> lprime;                   // finite maximal paths of the dual
  std::vector<std::vector<LPlusPair>> lplus;  // per vertex
};

LPrimeLPlus lprime_and_lplus(const GentlePresentation& p);

}  // namespace gentle
