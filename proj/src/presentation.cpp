#include "gentle/presentation.hpp"

#include <algorithm>

namespace gentle {

namespace {

std::string arrow_list(const Quiver& q, const std::vector<ArrowId>& arrows) {
  std::string s;
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += ", ";
    s += q.arrow_name(arrows[i]);
  }
  return s;
}

}  // namespace

std::optional<Diagnostic> GentlePresentation::check(
    const Quiver& q, const std::vector<std::pair<ArrowId, ArrowId>>& relations) {
  Diagnostic d;

  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (q.indeg(v) > 2 || q.outdeg(v) > 2) {
      d.code = Err::DegreeExceeded;
      d.condition = 1;
      d.vertex = v;
      d.message = "vertex '" + q.vertex_name(v) + "' has in-degree " +
                  std::to_string(q.indeg(v)) + " and out-degree " + std::to_string(q.outdeg(v)) +
                  "; both must be at most 2";
      return d;
    }
  }

  const int na = q.arrow_count();
  std::vector<char> rel(static_cast<size_t>(na) * na, 0);
  for (auto [a, b] : relations) {
    if (q.target(a) != q.source(b)) {
      d.code = Err::RelationNotLength2;
      d.arrows = {a, b};
      d.message = "relation (" + q.arrow_name(a) + " " + q.arrow_name(b) +
                  ") is not a composable length-2 path: target of '" + q.arrow_name(a) +
                  "' is '" + q.vertex_name(q.target(a)) + "' but source of '" + q.arrow_name(b) +
                  "' is '" + q.vertex_name(q.source(b)) + "'";
      return d;
    }
    rel[static_cast<size_t>(a) * na + b] = 1;
  }

  // Pair rules. Both are anchored at the shared middle vertex.
  for (ArrowId a = 0; a < na; ++a) {
    const VertexId v = q.source(a);
    const auto& in = q.arrows_into(v);
    if (in.size() == 2) {
      int cnt = rel[static_cast<size_t>(in[0]) * na + a] + rel[static_cast<size_t>(in[1]) * na + a];
      if (cnt != 1) {
        d.code = Err::ExactlyOneViolated;
        d.condition = 2;
        d.vertex = v;
        d.arrows = {in[0], in[1], a};
        d.message = "at vertex '" + q.vertex_name(v) + "': exactly one of the compositions of {" +
                    arrow_list(q, {in[0], in[1]}) + "} with outgoing arrow '" + q.arrow_name(a) +
                    "' must be a relation, found " + std::to_string(cnt);
        return d;
      }
    }
    const VertexId w = q.target(a);
    const auto& out = q.arrows_from(w);
    if (out.size() == 2) {
      int cnt =
          rel[static_cast<size_t>(a) * na + out[0]] + rel[static_cast<size_t>(a) * na + out[1]];
      if (cnt != 1) {
        d.code = Err::ExactlyOneViolated;
        d.condition = 3;
        d.vertex = w;
        d.arrows = {a, out[0], out[1]};
        d.message = "at vertex '" + q.vertex_name(w) + "': exactly one of the compositions of '" +
                    q.arrow_name(a) + "' with outgoing arrows {" + arrow_list(q, {out[0], out[1]}) +
                    "} must be a relation, found " + std::to_string(cnt);
        return d;
      }
    }
  }
  return std::nullopt;
}

GentlePresentation GentlePresentation::validate(
    Quiver q, std::vector<std::pair<ArrowId, ArrowId>> relations) {
  if (auto d = check(q, relations)) throw Error(d->code, d->message);

  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());

  GentlePresentation p;
  const int na = q.arrow_count();
  p.rel_.assign(static_cast<size_t>(na) * na, 0);
  for (auto [a, b] : relations) p.rel_[static_cast<size_t>(a) * na + b] = 1;
  p.relations_ = std::move(relations);
  p.quiver_ = std::move(q);

  p.next_allowed_.assign(na, -1);
  p.prev_allowed_.assign(na, -1);
  p.next_forbidden_.assign(na, -1);
  p.prev_forbidden_.assign(na, -1);
  for (ArrowId a = 0; a < na; ++a) {
    for (ArrowId b : p.quiver_.arrows_from(p.quiver_.target(a)))
      (p.rel_[static_cast<size_t>(a) * na + b] ? p.next_forbidden_[a] : p.next_allowed_[a]) = b;
    for (ArrowId b : p.quiver_.arrows_into(p.quiver_.source(a)))
      (p.rel_[static_cast<size_t>(b) * na + a] ? p.prev_forbidden_[a] : p.prev_allowed_[a]) = b;
  }

  // Finite-dimensionality: the allowed walk from any arrow either dies or
  // returns to its start; a return is a primitive cycle whose square avoids I.
  p.kind_ = Kind::Gentle;
  for (ArrowId a = 0; a < na && p.kind_ == Kind::Gentle; ++a) {
    ArrowId cur = a;
    for (int step = 0; step <= na; ++step) {
      cur = p.next_allowed_[cur];
      if (cur < 0) break;
      if (cur == a) {
        p.kind_ = Kind::LocallyGentle;
        break;
      }
    }
  }
  return p;
}

bool GentlePresentation::path_in_basis(const Path& p) const {
  if (p.is_stationary()) return true;
  const auto& w = p.arrows();
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (quiver_.target(w[i]) != quiver_.source(w[i + 1])) return false;
    if (in_ideal(w[i], w[i + 1])) return false;
  }
  return true;
}

std::vector<Path> path_basis(const GentlePresentation& p, int n) {
  std::vector<Path> out;
  if (n == 0) {
    for (VertexId v = 0; v < p.quiver().vertex_count(); ++v) out.push_back(Path::stationary(v));
    return out;
  }
  for (ArrowId a = 0; a < p.quiver().arrow_count(); ++a) {
    std::vector<ArrowId> w{a};
    ArrowId cur = a;
    while (static_cast<int>(w.size()) < n) {
      cur = p.next_allowed(cur);
      if (cur < 0) break;
      w.push_back(cur);
    }
    if (static_cast<int>(w.size()) == n) out.push_back(Path::word(std::move(w)));
  }
  return out;
}

}  // namespace gentle
