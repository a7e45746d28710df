#pragma once

#include "gentle/hilbert.hpp"

namespace gentle {

// 1 iff some maximal path is infinite, else 0.
int gk_dim(const GentlePresentation& p);
// 0 iff some maximal path is finite, else 1.
int depth(const GentlePresentation& p);
// Longest maximal path of the dual; nullopt when the dual has an infinite one.
std::optional<int> global_dim(const GentlePresentation& p);
// Longest finite maximal path of the dual when one exists; otherwise 0 for a
// truncated cycle algebra and 1 for everything else.
int injective_dim(const GentlePresentation& p);

// The center is spanned by 1, the cyclic finite maximal paths, and positive
// powers of one generator per infinite maximal path (the sum of that cycle's
// rotations).
struct CenterDescription {
  std::vector<Path> cyclic_finite;
  struct CycleGenerator {
    int path_index = -1;         // into the decomposition's paths
    std::vector<Path> summands;  // rotations, by first-arrow id
  };
  std::vector<CycleGenerator> cycle_generators;
  // When the unique maximal path is infinite the algebra is free over its
  // center; rank and a free basis are reported.
  struct FreeOverCenter {
    long long rank = 0;
    std::vector<Path> basis;
  };
  std::optional<FreeOverCenter> free_over_center;
};

CenterDescription center(const GentlePresentation& p);

// Arrows lying on finite maximal paths; they generate the prime radical.
std::vector<ArrowId> prime_radical(const GentlePresentation& p);
bool is_semiprime(const GentlePresentation& p);

struct CohenMacaulay {
  bool is_cm = false;
  int depth = 0;
  int gk = 0;
  // Witness for the infinite-dimensional case: A is free over k[x] with
  // x = sum of all arrows and the basis below (stationary paths plus all
  // arrows except one chosen arrow out of each non-sink vertex).
  struct FreeWitness {
    std::vector<Path> basis;
    std::vector<ArrowId> removed;  // the chosen arrows, by source vertex
  };
  std::optional<FreeWitness> witness;
};

CohenMacaulay cohen_macaulay(const GentlePresentation& p);

// Structural quiver predicates used by the classification.
bool is_cyclic_path_algebra(const GentlePresentation& p);    // oriented cycle, no relations
bool is_truncated_cycle_algebra(const GentlePresentation& p);  // cycle graph, every length-2 path a relation
bool is_doubled_quiver(const GentlePresentation& p);         // |Q1| = 2 |Q0|

struct ASStatus {
  enum class Level { NotGorenstein, Gorenstein, Regular } level = Level::NotGorenstein;
  enum class Shape { None, CyclicPathAlgebra, TruncatedCycle, DoubledQuiver } shape = Shape::None;
  // Self-duality data: the cohomological degree k and the internal shift l.
  std::optional<int> ext_degree;       // 1 / 0 / 1 in shape order below
  std::optional<int> internal_degree;  // 1 / -1 / 0 in shape order below
  // The companion statement reports the Gorenstein parameter separately; both
  // values are carried verbatim since they disagree in sign conventions.
  std::string parameter_note;
  std::optional<int> dimension;  // global dimension when Regular
};

ASStatus as_classification(const GentlePresentation& p);

// Trichotomy instance: (i) AS Gorenstein, (ii) palindromic Hilbert series,
// (iii) quiver shape (oriented cycle or doubled). Equivalent for infinite
// dimensional Cohen-Macaulay presentations; (iii) is reported only there.
struct StanleyCheck {
  bool as_gorenstein = false;
  bool palindromic = false;
  std::optional<bool> quiver_condition;
  // "theorem instance verified" | "counterexample to the naive extension" |
  // "not applicable"
  std::string verdict;
};

StanleyCheck stanley_check(const GentlePresentation& p);

// Everything the classification report needs, bundled.
struct Classification {
  Kind kind = Kind::Gentle;
  int gk = 0;
  int depth = 0;
  std::optional<int> global_dim;
  int injective_dim = 0;
  bool semiprime = false;
  CohenMacaulay cm;
  Palindromy palindromy;
  ASStatus as_status;
  StanleyCheck stanley;
};

Classification classify(const GentlePresentation& p);

}  // namespace gentle
