#pragma once

#include "gentle/max_paths.hpp"

namespace gentle {

// Prime two-sided ideals. Every prime is one of:
//   MaxAtVertex  m_v: the other stationary paths plus the loops at v.
//   AnnInfinite  ann(J_gamma) for an infinite maximal path gamma: the
//                stationary paths off the cycle plus the arrows with both
//                endpoints on the cycle that do not lie on gamma. Its span is
//                exactly the paths that are not subpaths of gamma.
//   PolyFamily   ann(J_gamma) + (p(m_gamma)) for irreducible p with p(0) != 0,
//                where m_gamma is the central rotation sum of the cycle.
enum class PrimeKind { MaxAtVertex, AnnInfinite, PolyFamily };

enum class PolyCertification { Irreducible, Reducible, Unverified };

struct PrimeIdeal {
  PrimeKind kind = PrimeKind::MaxAtVertex;
  VertexId vertex = -1;  // MaxAtVertex only
  int cycle_ordinal = -1;  // position among the infinite maximal paths
  Path cycle;              // primitive cycle (AnnInfinite / PolyFamily)
  std::vector<VertexId> idempotent_generators;
  std::vector<ArrowId> arrow_generators;
  bool height_zero = false;
  // Instantiated family member only: p by ascending degree, and how far the
  // rational-root test could certify irreducibility (degree <= 3).
  std::vector<long long> poly;
  std::optional<PolyCertification> certification;
};

struct PrimeSpectrum {
  // The zero ideal is prime exactly when the unique maximal path is infinite.
  bool algebra_is_prime = false;
  std::vector<PrimeIdeal> primes;  // m_v ascending, then ann's, then family stubs
  std::vector<std::pair<int, int>> inclusions;  // (i, j) with primes[i] < primes[j]
};

PrimeSpectrum prime_spectrum(const GentlePresentation& p);

// Member of the polynomial family over the cycle_ordinal-th infinite maximal
// path. poly is read by ascending degree; throws DegreeZero for constant
// polynomials and VanishesAtZero when p(0) = 0 (those ideals are the listed
// m_v's, not new primes).
PrimeIdeal instantiate_poly_prime(const GentlePresentation& p, int cycle_ordinal,
                                  const std::vector<long long>& poly);

// True when `candidate` is a contiguous subpath of some rotation of the
// infinite path with the given primitive cycle (stationary: vertex on cycle).
bool subpath_of_cycle_power(const Quiver& q, const Path& cycle, const Path& candidate);

}  // namespace gentle
