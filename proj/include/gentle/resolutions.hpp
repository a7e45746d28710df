#pragma once

#include <map>

#include "gentle/max_paths.hpp"

namespace gentle {

// One indecomposable summand of a term.
//   Projective  e_v A                  (vertex, shift)
//   InjVertex   I(v), the module of inverse paths into v   (vertex, shift)
//   InjArrow    I(alpha) for an arrow on a cycle: one basis vector b_n in
//               every integer degree along the two-sided walk through alpha
// shift is the bracket value k of M[k], with M[k]_d = M_{d+k}.
enum class SummandKind { Projective, InjVertex, InjArrow };

struct Summand {
  SummandKind kind = SummandKind::Projective;
  VertexId vertex = -1;
  ArrowId arrow = -1;
  int shift = 0;
  // Projective terms: the forbidden-thread ordinal. Injective terms: the
  // ordinal of the pair in L+(v). -1 for P_0 and for the extra I(v).
  int thread = -1;
};

// Component maps, applied left to right.
//   LeftMult  x -> path * x                           (projective differentials)
//   WStar     q^{-1} -> (q minus the suffix `path`)^{-1}, 0 when not a suffix
//   RhoInf    I(alpha) -> I(s(alpha)): kill b_n for n > 0, embed the rest
struct MapOp {
  enum class Kind { LeftMult, WStar, RhoInf } kind = Kind::LeftMult;
  Path path;
  ArrowId arrow = -1;
};

struct MapEntry {
  int from = 0;
  int to = 0;
  int sign = 1;
  std::vector<MapOp> ops;
};

// Augmentation component e_v A -> terms[0] of an injective resolution,
// determined by the image of e_v.
struct IotaEntry {
  int to_summand = 0;
  enum class Kind { InversePath, Unit, Socle } kind = Kind::Socle;
  Path path;  // InversePath: e_v -> path^{-1}
};

struct GradedComplex {
  enum class Orientation { Projective, Injective } orientation = Orientation::Projective;
  VertexId vertex = -1;
  std::vector<std::vector<Summand>> terms;
  // Projective: maps[k] lists the components of terms[k+1] -> terms[k].
  // Injective: maps[k] lists the components of terms[k] -> terms[k+1].
  std::vector<std::vector<MapEntry>> maps;
  bool complete = true;                           // projective: all threads died in range
  std::optional<std::pair<int, int>> periodicity; // (prefix, period) when incomplete forever
  std::vector<IotaEntry> iota;                    // injective only
  int m = 0;                                      // injective only: length
  std::optional<Path> iso_witness;                // injective, m = 0: e_v A ~ I(t(w))[-l(w)]
};

// Minimal projective resolution of the simple at v, out to `steps` terms.
GradedComplex projective_resolution(const GentlePresentation& p, VertexId v, int steps = 32);

// nullopt when a forbidden thread out of v is periodic.
std::optional<int> proj_dim(const GentlePresentation& p, VertexId v);

// Minimal injective resolution of e_v A; always finite.
GradedComplex injective_resolution(const GentlePresentation& p, VertexId v);

// Ext^i(S(v), A) up to iso, from the shape of the forbidden threads.
// QuotientSum terms (w, a, k) denote (A e_w / A a)[k]. The mixed degree-one
// case at a branching vertex is left to the truncated-algebra oracle: kind
// OracleDims with empty dims, to be filled by ext_dims_bruteforce.
struct ExtDescriptor {
  enum class Kind { Zero, FreeAtVertex, ArrowModule, Simple, QuotientSum, OracleDims } kind =
      Kind::Zero;
  int degree = 0;
  VertexId vertex = -1;  // FreeAtVertex / Simple
  ArrowId arrow = -1;    // ArrowModule
  std::vector<std::tuple<VertexId, ArrowId, int>> quotient_summands;
  std::map<int, long long> dims;  // OracleDims, filled externally
};

ExtDescriptor ext_simple(const GentlePresentation& p, VertexId v, int i);
bool ext_nonzero(const GentlePresentation& p, VertexId v, int i);

}  // namespace gentle
