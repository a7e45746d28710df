#include "gentle/resolutions.hpp"

#include <algorithm>
#include <numeric>

namespace gentle {

namespace {

Path single(ArrowId a) { return Path::word({a}); }

// p_{-j}: the j-th arrow of p counted from the end (p_{-1} is the last).
ArrowId from_end(const Path& p, int j) { return p.arrows()[p.length() - j]; }

}  // namespace

GradedComplex projective_resolution(const GentlePresentation& p, VertexId v, int steps) {
  GradedComplex out;
  out.orientation = GradedComplex::Orientation::Projective;
  out.vertex = v;
  const Quiver& q = p.quiver();
  ForbiddenSets fs = forbidden_sets(p, v, 0);

  int needed = 0;
  bool any_periodic = false;
  int max_terminated = 0;
  long long period = 1;
  for (const auto& t : fs.threads) {
    if (t.periodic) {
      any_periodic = true;
      period = std::lcm(period, static_cast<long long>(t.arrows.size()));
    } else {
      max_terminated = std::max(max_terminated, static_cast<int>(t.arrows.size()));
    }
  }
  needed = any_periodic ? steps : std::min(steps, max_terminated);
  out.complete = !any_periodic && max_terminated <= steps;
  if (any_periodic)
    out.periodicity = std::make_pair(1 + max_terminated, static_cast<int>(period));

  out.terms.push_back({Summand{SummandKind::Projective, v, -1, 0, -1}});
  std::vector<int> prev_pos(fs.threads.size(), 0);  // thread -> index in terms[k-1]
  for (int k = 1; k <= needed; ++k) {
    std::vector<Summand> term;
    std::vector<MapEntry> d;
    std::vector<int> pos(fs.threads.size(), -1);
    for (std::size_t ti = 0; ti < fs.threads.size(); ++ti) {
      auto w = fs.threads[ti].word(k);
      if (!w) continue;
      pos[ti] = static_cast<int>(term.size());
      term.push_back(Summand{SummandKind::Projective, target(q, *w), -1, -k, static_cast<int>(ti)});
      MapEntry e;
      e.from = pos[ti];
      e.to = k == 1 ? 0 : prev_pos[ti];
      e.ops.push_back(MapOp{MapOp::Kind::LeftMult, single(w->last()), -1});
      d.push_back(std::move(e));
    }
    if (term.empty()) break;
    out.terms.push_back(std::move(term));
    out.maps.push_back(std::move(d));
    prev_pos = std::move(pos);
  }
  return out;
}

std::optional<int> proj_dim(const GentlePresentation& p, VertexId v) {
  ForbiddenSets fs = forbidden_sets(p, v, 0);
  int len = 0;
  for (const auto& t : fs.threads) {
    if (t.periodic) return std::nullopt;
    len = std::max(len, static_cast<int>(t.arrows.size()));
  }
  return len;
}

GradedComplex injective_resolution(const GentlePresentation& p, VertexId v) {
  GradedComplex out;
  out.orientation = GradedComplex::Orientation::Injective;
  out.vertex = v;
  const Quiver& q = p.quiver();
  const int outdeg = q.outdeg(v);

  LPrimeLPlus ll = lprime_and_lplus(p);
  const std::vector<LPlusPair>& pairs = ll.lplus[v];

  // Degree-zero term with its augmentation, one summand per out-arrow.
  std::vector<Summand> term0;
  std::vector<int> arrow_pos(q.arrow_count(), -1);
  std::vector<WalkResult> walks;
  if (outdeg == 0) {
    term0.push_back(Summand{SummandKind::InjVertex, v, -1, 0, -1});
    out.iota.push_back(IotaEntry{0, IotaEntry::Kind::Socle, Path::stationary(v)});
  } else {
    for (ArrowId a : q.arrows_from(v)) {
      WalkResult wr = gamma_r(p, a);
      int idx = static_cast<int>(term0.size());
      arrow_pos[a] = idx;
      if (wr.cyclic) {
        term0.push_back(Summand{SummandKind::InjArrow, -1, a, 0, -1});
        out.iota.push_back(IotaEntry{idx, IotaEntry::Kind::Unit, Path::stationary(v)});
      } else {
        term0.push_back(Summand{SummandKind::InjVertex, target(q, wr.path), -1,
                                -wr.path.length(), -1});
        out.iota.push_back(IotaEntry{idx, IotaEntry::Kind::InversePath, wr.path});
      }
      walks.push_back(std::move(wr));
    }
  }
  out.terms.push_back(std::move(term0));

  if (pairs.empty()) {
    if (outdeg == 2) {
      out.m = 1;
    } else if (outdeg == 1) {
      if (walks[0].cyclic)
        throw Error(Err::Internal, "cycle vertex with one out-arrow cannot have empty pair set");
      out.m = 0;
      out.iso_witness = walks[0].path;
    } else {
      if (q.indeg(v) > 0)
        throw Error(Err::Internal, "sink with incoming arrows cannot have empty pair set");
      out.m = 0;
      out.iso_witness = Path::stationary(v);
    }
  } else {
    out.m = 0;
    for (const auto& pr : pairs) out.m = std::max(out.m, pr.p.length());
  }
  if (out.m == 0) return out;

  // rho_a: I(a) -> I(v), by chopping gamma_r(a) or projecting away the
  // positive part of the cycle module.
  auto rho = [&](int arrow_ordinal) {
    const WalkResult& wr = walks[arrow_ordinal];
    if (wr.cyclic) return MapOp{MapOp::Kind::RhoInf, Path(), q.arrows_from(v)[arrow_ordinal]};
    return MapOp{MapOp::Kind::WStar, wr.path, -1};
  };

  std::vector<int> prev_pos(pairs.size(), -1);
  for (int j = 1; j <= out.m; ++j) {
    std::vector<Summand> term;
    std::vector<MapEntry> d;
    if (j == 1 && outdeg == 2) {
      term.push_back(Summand{SummandKind::InjVertex, v, -1, 0, -1});
      for (int s = 0; s < 2; ++s) {
        MapEntry e;
        e.from = s;
        e.to = 0;
        e.sign = s == 0 ? 1 : -1;
        e.ops.push_back(rho(s));
        d.push_back(std::move(e));
      }
    }
    std::vector<int> pos(pairs.size(), -1);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const LPlusPair& pr = pairs[pi];
      if (pr.p.length() < j) continue;
      pos[pi] = static_cast<int>(term.size());
      term.push_back(Summand{SummandKind::InjVertex, q.source(from_end(pr.p, j)), -1,
                             j - pr.w.length(), static_cast<int>(pi)});
      MapEntry e;
      e.to = pos[pi];
      e.sign = 1;
      if (j == 1) {
        if (pr.w_is_unit) {
          if (outdeg == 2)
            throw Error(Err::Internal, "branching vertex cannot carry a stationary pair");
          e.from = 0;
          if (outdeg == 1) e.ops.push_back(rho(0));
        } else {
          e.from = arrow_pos[pr.w_first];
        }
        e.ops.push_back(MapOp{MapOp::Kind::WStar, single(from_end(pr.p, 1)), -1});
      } else {
        e.from = prev_pos[pi];
        e.ops.push_back(MapOp{MapOp::Kind::WStar, single(from_end(pr.p, j)), -1});
      }
      d.push_back(std::move(e));
    }
    out.terms.push_back(std::move(term));
    out.maps.push_back(std::move(d));
    prev_pos = std::move(pos);
  }
  return out;
}

ExtDescriptor ext_simple(const GentlePresentation& p, VertexId v, int i) {
  ExtDescriptor out;
  out.degree = i;
  const Quiver& q = p.quiver();
  if (i < 0) return out;
  if (i == 0) {
    if (q.outdeg(v) == 0) {
      out.kind = ExtDescriptor::Kind::FreeAtVertex;
      out.vertex = v;
      return out;
    }
    if (q.outdeg(v) == 1) {
      ArrowId delta = q.arrows_from(v)[0];
      for (ArrowId a : q.arrows_into(v))
        if (p.in_ideal(a, delta)) {
          out.kind = ExtDescriptor::Kind::ArrowModule;
          out.arrow = a;
          return out;
        }
    }
    return out;  // Zero
  }

  ForbiddenSets fs = forbidden_sets(p, v, 0);
  auto died_at = [&](const ForbiddenThread& t, int len) {
    return !t.periodic && static_cast<int>(t.arrows.size()) == len;
  };

  if (i == 1) {
    bool any_dead = std::any_of(fs.threads.begin(), fs.threads.end(),
                                [&](const auto& t) { return died_at(t, 1); });
    if (q.outdeg(v) == 2) {
      out.kind = any_dead ? ExtDescriptor::Kind::OracleDims : ExtDescriptor::Kind::Simple;
      out.vertex = v;
      return out;
    }
    if (any_dead) {
      ArrowId a = fs.threads[0].first;
      out.kind = ExtDescriptor::Kind::QuotientSum;
      out.quotient_summands.emplace_back(q.target(a), a, 1);
    }
    return out;
  }

  for (const auto& t : fs.threads)
    if (died_at(t, i)) {
      out.kind = ExtDescriptor::Kind::QuotientSum;
      out.quotient_summands.emplace_back(q.target(t.arrows.back()), t.arrows.back(), i);
    }
  return out;
}

bool ext_nonzero(const GentlePresentation& p, VertexId v, int i) {
  const Quiver& q = p.quiver();
  if (i < 0) return false;
  if (i == 0) {
    if (q.arrow_count() == 0) return true;
    auto dec = decompose_maximal_paths(p);
    for (const auto& mp : dec.paths)
      if (!mp.infinite && target(q, mp.path) == v) return true;
    return false;
  }
  if (i == 1 && q.outdeg(v) == 2) return true;
  ForbiddenSets fs = forbidden_sets(p, v, 0);
  for (const auto& t : fs.threads)
    if (!t.periodic && static_cast<int>(t.arrows.size()) == i) return true;
  return false;
}

}  // namespace gentle
