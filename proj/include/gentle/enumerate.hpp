#pragma once

#include "gentle/presentation.hpp"

namespace gentle {

// Every relation set making the quiver (locally) gentle. The choice is local:
// a vertex with in and out arrows admits exactly two relation sets (the two
// matchings; for the 2x2 case the two permutations, identity first), any other
// vertex exactly one (empty). Presentations are ordered by the mixed-radix
// counter over choice vertices, vertex 0 most significant, option 0 first.
std::vector<GentlePresentation> enumerate_presentations(const Quiver& q);
long long enumeration_count(const Quiver& q);

// Connected quivers on at most 2 vertices with at most 4 arrows within the
// degree bounds, for corpus tests. Vertices "1", "2"; arrows "a1", "a2", ...
// (loops at 1, loops at 2, forward, backward).
std::vector<Quiver> small_quiver_corpus();

}  // namespace gentle
