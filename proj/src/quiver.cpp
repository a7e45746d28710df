#include "gentle/quiver.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace gentle {

Quiver Quiver::build(const std::vector<std::string>& vertices,
                     const std::vector<ArrowDecl>& arrows) {
  if (vertices.empty()) throw Error(Err::EmptyQuiver, "quiver has no vertices");

  Quiver q;
  std::unordered_map<std::string, VertexId> vid;
  for (const auto& name : vertices) {
    if (vid.count(name))
      throw Error(Err::DuplicateName, "duplicate vertex name '" + name + "'");
    vid.emplace(name, static_cast<VertexId>(q.vertex_names_.size()));
    q.vertex_names_.push_back(name);
  }

  std::unordered_set<std::string> aseen;
  for (const auto& d : arrows) {
    if (vid.count(d.name) || !aseen.insert(d.name).second)
      throw Error(Err::DuplicateName, "duplicate name '" + d.name + "'");
    auto s = vid.find(d.src), t = vid.find(d.tgt);
    if (s == vid.end() || t == vid.end())
      throw Error(Err::UnknownEndpoint, "arrow '" + d.name + "' references unknown vertex '" +
                                            (s == vid.end() ? d.src : d.tgt) + "'");
    q.arrow_names_.push_back(d.name);
    q.src_.push_back(s->second);
    q.tgt_.push_back(t->second);
  }

  q.out_.assign(q.vertex_count(), {});
  q.in_.assign(q.vertex_count(), {});
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    q.out_[q.src_[a]].push_back(a);
    q.in_[q.tgt_[a]].push_back(a);
  }

  // Connectedness of the underlying undirected graph.
  std::vector<char> seen(q.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto visit = [&](VertexId w) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    };
    for (ArrowId a : q.out_[v]) visit(q.tgt_[a]);
    for (ArrowId a : q.in_[v]) visit(q.src_[a]);
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (!seen[v])
      throw Error(Err::Disconnected,
                  "underlying graph is disconnected (vertex '" + q.vertex_names_[v] +
                      "' unreachable from '" + q.vertex_names_[0] + "')");
  return q;
}

std::optional<VertexId> Quiver::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (vertex_names_[v] == name) return v;
  return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& name) const {
  for (ArrowId a = 0; a < arrow_count(); ++a)
    if (arrow_names_[a] == name) return a;
  return std::nullopt;
}

Path Path::stationary(VertexId v) {
  Path p;
  p.base_ = v;
  return p;
}

Path Path::word(std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw Error(Err::Internal, "empty arrow word");
  Path p;
  p.arrows_ = std::move(arrows);
  return p;
}

Path Path::prefix(int len) const {
  return Path::word({arrows_.begin(), arrows_.begin() + len});
}

Path Path::suffix(int len) const {
  return Path::word({arrows_.end() - len, arrows_.end()});
}

VertexId source(const Quiver& q, const Path& p) {
  return p.is_stationary() ? p.base() : q.source(p.first());
}

VertexId target(const Quiver& q, const Path& p) {
  return p.is_stationary() ? p.base() : q.target(p.last());
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.is_stationary()) return "e(" + q.vertex_name(p.base()) + ")";
  std::string s;
  for (size_t i = 0; i < p.arrows().size(); ++i) {
    if (i) s += ' ';
    s += q.arrow_name(p.arrows()[i]);
  }
  return s;
}

bool is_subword(const Path& part, const Path& whole) {
  if (part.is_stationary() || part.length() > whole.length()) return false;
  const auto& a = part.arrows();
  const auto& b = whole.arrows();
  return std::search(b.begin(), b.end(), a.begin(), a.end()) != b.end();
}

Path concat(const Path& a, const Path& b) {
  if (a.is_stationary()) return b;
  if (b.is_stationary()) return a;
  std::vector<ArrowId> w = a.arrows();
  w.insert(w.end(), b.arrows().begin(), b.arrows().end());
  return Path::word(std::move(w));
}

}  // namespace gentle
