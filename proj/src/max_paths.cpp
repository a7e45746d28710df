#include "gentle/max_paths.hpp"

#include <algorithm>

namespace gentle {

namespace {

// The walks step until they die or revisit the start. A revisit anywhere else
// would force two distinct arrows with the same successor, which the pair
// rules exclude, so the first repeated arrow is always the start.
WalkResult walk_forward(const GentlePresentation& p, ArrowId start, bool forbidden) {
  std::vector<ArrowId> w{start};
  ArrowId cur = start;
  const int na = p.quiver().arrow_count();
  for (int step = 0; step <= na; ++step) {
    ArrowId nxt = forbidden ? p.next_forbidden(cur) : p.next_allowed(cur);
    if (nxt < 0) return {false, Path::word(std::move(w))};
    if (nxt == start) return {true, Path::word(std::move(w))};
    w.push_back(nxt);
    cur = nxt;
  }
  throw Error(Err::Internal, "extension walk failed to terminate");
}

WalkResult walk_backward(const GentlePresentation& p, ArrowId start, bool forbidden) {
  std::vector<ArrowId> w{start};
  ArrowId cur = start;
  const int na = p.quiver().arrow_count();
  for (int step = 0; step <= na; ++step) {
    ArrowId prv = forbidden ? p.prev_forbidden(cur) : p.prev_allowed(cur);
    if (prv < 0) {
      std::reverse(w.begin(), w.end());
      return {false, Path::word(std::move(w))};
    }
    if (prv == start) {
      std::reverse(w.begin(), w.end());
      return {true, Path::word(std::move(w))};
    }
    w.push_back(prv);
    cur = prv;
  }
  throw Error(Err::Internal, "extension walk failed to terminate");
}

Path canonical_rotation(const Path& cycle) {
  const auto& w = cycle.arrows();
  size_t best = 0;
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] < w[best]) best = i;
  std::vector<ArrowId> rot(w.begin() + best, w.end());
  rot.insert(rot.end(), w.begin(), w.begin() + best);
  return Path::word(std::move(rot));
}

}  // namespace

WalkResult gamma_r(const GentlePresentation& p, ArrowId a) { return walk_forward(p, a, false); }

WalkResult gamma_l(const GentlePresentation& p, ArrowId a) { return walk_backward(p, a, false); }

MaximalPathDecomposition decompose_maximal_paths(const GentlePresentation& p) {
  MaximalPathDecomposition d;
  const int na = p.quiver().arrow_count();
  d.arrow_assignment.assign(na, -1);
  for (ArrowId a = 0; a < na; ++a) {
    if (d.arrow_assignment[a] >= 0) continue;
    WalkResult fwd = walk_forward(p, a, false);
    MaximalPath mp;
    if (fwd.cyclic) {
      mp.infinite = true;
      mp.path = canonical_rotation(fwd.path);
    } else {
      WalkResult bwd = walk_backward(p, a, false);
      // bwd ends at a, fwd starts at a; splice without repeating a.
      std::vector<ArrowId> w = bwd.path.arrows();
      w.insert(w.end(), fwd.path.arrows().begin() + 1, fwd.path.arrows().end());
      mp.infinite = false;
      mp.path = Path::word(std::move(w));
    }
    int idx = static_cast<int>(d.paths.size());
    for (ArrowId b : mp.path.arrows()) d.arrow_assignment[b] = idx;
    if (mp.infinite)
      ++d.infinite_count;
    else {
      ++d.finite_count;
      d.max_finite_length = std::max(d.max_finite_length, mp.path.length());
    }
    d.paths.push_back(std::move(mp));
  }
  return d;
}

GentlePresentation koszul_dual(const GentlePresentation& p) {
  const Quiver& q = p.quiver();
  std::vector<std::pair<ArrowId, ArrowId>> comp;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b : q.arrows_from(q.target(a)))
      if (!p.in_ideal(a, b)) comp.emplace_back(a, b);
  // Complementation preserves the pair rules, so this cannot throw.
  std::vector<std::string> vnames;
  for (VertexId v = 0; v < q.vertex_count(); ++v) vnames.push_back(q.vertex_name(v));
  std::vector<ArrowDecl> adecls;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    adecls.push_back({q.arrow_name(a), q.vertex_name(q.source(a)), q.vertex_name(q.target(a))});
  return GentlePresentation::validate(Quiver::build(vnames, adecls), std::move(comp));
}

std::optional<Path> ForbiddenThread::word(int len) const {
  if (len <= 0) return std::nullopt;
  if (!periodic && len > static_cast<int>(arrows.size())) return std::nullopt;
  std::vector<ArrowId> w(len);
  for (int i = 0; i < len; ++i) w[i] = arrows[i % arrows.size()];
  return Path::word(std::move(w));
}

ForbiddenSets forbidden_sets(const GentlePresentation& p, VertexId v, int max_k) {
  ForbiddenSets fs;
  fs.vertex = v;
  fs.max_k = max_k;
  for (ArrowId a : p.quiver().arrows_from(v)) {
    WalkResult wr = walk_forward(p, a, true);
    ForbiddenThread t;
    t.first = a;
    t.arrows = wr.path.arrows();
    t.periodic = wr.cyclic;
    if (!t.periodic) fs.r_prime.push_back(wr.path);
    fs.threads.push_back(std::move(t));
  }
  fs.r_sets.resize(max_k + 1);
  fs.r_sets[0].push_back(Path::stationary(v));
  for (int k = 1; k <= max_k; ++k)
    for (const auto& t : fs.threads)
      if (auto w = t.word(k)) fs.r_sets[k].push_back(*w);
  return fs;
}

LPrimeLPlus lprime_and_lplus(const GentlePresentation& p) {
  LPrimeLPlus out;
  GentlePresentation dual = koszul_dual(p);
  MaximalPathDecomposition dd = decompose_maximal_paths(dual);
  for (const auto& mp : dd.paths)
    if (!mp.infinite) out.lprime.push_back(mp.path);

  const Quiver& q = p.quiver();
  out.lplus.resize(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    // Candidate second components: the stationary path, and right maximal
    // basis paths out of v (one per arrow whose forward walk terminates).
    std::vector<LPlusPair> pairs;
    for (const Path& fp : out.lprime) {
      if (target(q, fp) == v)
        pairs.push_back({fp, Path::stationary(v), true, -1});
    }
    for (ArrowId a : q.arrows_from(v)) {
      WalkResult wr = gamma_r(p, a);
      if (wr.cyclic) continue;  // no right maximal path begins with a cycle arrow
      for (const Path& fp : out.lprime) {
        if (target(q, fp) == target(q, wr.path) && fp.last() != wr.path.last())
          pairs.push_back({fp, wr.path, false, a});
      }
    }
    out.lplus[v] = std::move(pairs);
  }
  return out;
}

}  // namespace gentle
