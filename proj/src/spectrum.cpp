#include "gentle/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace gentle {

namespace {

std::set<VertexId> cycle_vertices(const Quiver& q, const Path& cycle) {
  std::set<VertexId> on;
  for (ArrowId a : cycle.arrows()) {
    on.insert(q.source(a));
    on.insert(q.target(a));
  }
  return on;
}

PrimeIdeal annihilator_ideal(const GentlePresentation& p, const MaximalPathDecomposition& dec,
                             int path_index, int ordinal) {
  const Quiver& q = p.quiver();
  const Path& cycle = dec.paths[path_index].path;
  PrimeIdeal out;
  out.kind = PrimeKind::AnnInfinite;
  out.cycle_ordinal = ordinal;
  out.cycle = cycle;
  auto on = cycle_vertices(q, cycle);
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (!on.count(v)) out.idempotent_generators.push_back(v);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (!on.count(q.source(a)) || !on.count(q.target(a))) continue;
    if (dec.arrow_assignment[a] != path_index) out.arrow_generators.push_back(a);
  }
  out.height_zero = true;
  return out;
}

PolyCertification certify(const std::vector<long long>& poly) {
  int deg = static_cast<int>(poly.size()) - 1;
  if (deg == 1) return PolyCertification::Irreducible;
  if (deg > 3) return PolyCertification::Unverified;
  // Degree 2 or 3: irreducible over the rationals iff there is no rational
  // root r/s with r | poly[0] and s | poly[deg].
  auto divisors = [](long long n) {
    std::vector<long long> d;
    n = std::llabs(n);
    for (long long i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        d.push_back(i);
        d.push_back(n / i);
      }
    return d;
  };
  for (long long r : divisors(poly[0]))
    for (long long s : divisors(poly[deg]))
      for (int sign : {1, -1}) {
        // Evaluate s^deg * p(sign * r / s) by Horner.
        long long val = 0;
        for (int i = deg; i >= 0; --i) val = val * sign * r + poly[i] * [&] {
          long long pw = 1;
          for (int j = 0; j < deg - i; ++j) pw *= s;
          return pw;
        }();
        if (val == 0) return PolyCertification::Reducible;
      }
  return PolyCertification::Irreducible;
}

}  // namespace

bool subpath_of_cycle_power(const Quiver& q, const Path& cycle, const Path& candidate) {
  if (candidate.is_stationary()) return cycle_vertices(q, cycle).count(candidate.base()) > 0;
  if (candidate.length() == 0) return false;
  // Unroll the cycle far enough to contain any rotation of the needed length.
  std::vector<ArrowId> unrolled;
  int copies = candidate.length() / cycle.length() + 2;
  for (int i = 0; i < copies; ++i)
    unrolled.insert(unrolled.end(), cycle.arrows().begin(), cycle.arrows().end());
  const auto& w = candidate.arrows();
  return std::search(unrolled.begin(), unrolled.end(), w.begin(), w.end()) != unrolled.end();
}

PrimeSpectrum prime_spectrum(const GentlePresentation& p) {
  const Quiver& q = p.quiver();
  auto dec = decompose_maximal_paths(p);
  PrimeSpectrum out;
  out.algebra_is_prime = dec.paths.size() == 1 && dec.paths[0].infinite;

  std::vector<std::set<VertexId>> on_infinite;  // vertex sets, one per infinite path
  std::vector<int> infinite_indices;
  for (std::size_t i = 0; i < dec.paths.size(); ++i)
    if (dec.paths[i].infinite) {
      infinite_indices.push_back(static_cast<int>(i));
      on_infinite.push_back(cycle_vertices(q, dec.paths[i].path));
    }

  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    PrimeIdeal m;
    m.kind = PrimeKind::MaxAtVertex;
    m.vertex = v;
    for (VertexId w = 0; w < q.vertex_count(); ++w)
      if (w != v) m.idempotent_generators.push_back(w);
    for (ArrowId a : q.arrows_from(v))
      if (q.target(a) == v) m.arrow_generators.push_back(a);
    m.height_zero = std::none_of(on_infinite.begin(), on_infinite.end(),
                                 [&](const auto& s) { return s.count(v) > 0; });
    out.primes.push_back(std::move(m));
  }

  int n_max = static_cast<int>(out.primes.size());
  for (std::size_t k = 0; k < infinite_indices.size(); ++k)
    out.primes.push_back(annihilator_ideal(p, dec, infinite_indices[k], static_cast<int>(k)));

  for (std::size_t k = 0; k < infinite_indices.size(); ++k) {
    PrimeIdeal stub = out.primes[n_max + k];
    stub.kind = PrimeKind::PolyFamily;
    stub.height_zero = false;
    out.primes.push_back(std::move(stub));
  }

  for (std::size_t k = 0; k < infinite_indices.size(); ++k) {
    int ann = n_max + static_cast<int>(k);
    for (VertexId v = 0; v < q.vertex_count(); ++v)
      if (on_infinite[k].count(v)) out.inclusions.emplace_back(ann, v);
    out.inclusions.emplace_back(ann, n_max + static_cast<int>(infinite_indices.size() + k));
  }
  return out;
}

PrimeIdeal instantiate_poly_prime(const GentlePresentation& p, int cycle_ordinal,
                                  const std::vector<long long>& poly) {
  auto trimmed = poly;
  while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
  if (trimmed.size() <= 1)
    throw Error(Err::DegreeZero, "family members need a polynomial of degree at least 1");
  if (trimmed[0] == 0)
    throw Error(Err::VanishesAtZero,
                "p(0) = 0 gives one of the listed maximal ideals, not a new prime");

  auto dec = decompose_maximal_paths(p);
  std::vector<int> infinite_indices;
  for (std::size_t i = 0; i < dec.paths.size(); ++i)
    if (dec.paths[i].infinite) infinite_indices.push_back(static_cast<int>(i));
  if (cycle_ordinal < 0 || cycle_ordinal >= static_cast<int>(infinite_indices.size()))
    throw Error(Err::NotInfinitePath, "no infinite maximal path with that ordinal");

  PrimeIdeal out = annihilator_ideal(p, dec, infinite_indices[cycle_ordinal], cycle_ordinal);
  out.kind = PrimeKind::PolyFamily;
  out.height_zero = false;
  out.poly = std::move(trimmed);
  out.certification = certify(out.poly);
  return out;
}

}  // namespace gentle
