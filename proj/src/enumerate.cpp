#include "gentle/enumerate.hpp"

#include <array>

namespace gentle {

namespace {

using Rel = std::pair<ArrowId, ArrowId>;

// The two local relation sets at a vertex with in and out arrows.
std::array<std::vector<Rel>, 2> local_options(const Quiver& q, VertexId v) {
  const auto& ins = q.arrows_into(v);
  const auto& outs = q.arrows_from(v);
  std::array<std::vector<Rel>, 2> o;
  if (ins.size() == 1 && outs.size() == 1) {
    o[1] = {{ins[0], outs[0]}};
  } else if (ins.size() == 2 && outs.size() == 1) {
    o[0] = {{ins[0], outs[0]}};
    o[1] = {{ins[1], outs[0]}};
  } else if (ins.size() == 1 && outs.size() == 2) {
    o[0] = {{ins[0], outs[0]}};
    o[1] = {{ins[0], outs[1]}};
  } else {
    o[0] = {{ins[0], outs[0]}, {ins[1], outs[1]}};
    o[1] = {{ins[0], outs[1]}, {ins[1], outs[0]}};
  }
  return o;
}

}  // namespace

std::vector<GentlePresentation> enumerate_presentations(const Quiver& q) {
  std::vector<VertexId> choice;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (q.indeg(v) > 2 || q.outdeg(v) > 2)
      throw Error(Err::DegreeExceeded,
                  "vertex " + q.vertex_name(v) + " has in or out degree above 2");
    if (q.indeg(v) >= 1 && q.outdeg(v) >= 1) choice.push_back(v);
  }
  std::vector<GentlePresentation> out;
  std::vector<int> odo(choice.size(), 0);
  while (true) {
    std::vector<Rel> rels;
    for (size_t i = 0; i < choice.size(); ++i) {
      auto opts = local_options(q, choice[i]);
      for (const Rel& r : opts[odo[i]]) rels.push_back(r);
    }
    out.push_back(GentlePresentation::validate(q, std::move(rels)));
    int i = static_cast<int>(choice.size()) - 1;
    while (i >= 0 && odo[i] == 1) odo[i--] = 0;
    if (i < 0) break;
    odo[i] = 1;
  }
  return out;
}

long long enumeration_count(const Quiver& q) {
  long long n = 1;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (q.indeg(v) >= 1 && q.outdeg(v) >= 1) n *= 2;
  return n;
}

std::vector<Quiver> small_quiver_corpus() {
  std::vector<Quiver> out;
  for (int loops = 0; loops <= 2; ++loops) {
    std::vector<ArrowDecl> arrows;
    for (int i = 0; i < loops; ++i) arrows.push_back({"a" + std::to_string(i + 1), "1", "1"});
    out.push_back(Quiver::build({"1"}, arrows));
  }
  for (int l1 = 0; l1 <= 2; ++l1)
    for (int l2 = 0; l2 <= 2; ++l2)
      for (int f = 0; f <= 2; ++f)
        for (int b = 0; b <= 2; ++b) {
          if (f + b < 1 || l1 + l2 + f + b > 4) continue;
          if (l1 + b > 2 || l1 + f > 2 || l2 + f > 2 || l2 + b > 2) continue;
          std::vector<ArrowDecl> arrows;
          int n = 0;
          auto name = [&n] { return "a" + std::to_string(++n); };
          for (int i = 0; i < l1; ++i) arrows.push_back({name(), "1", "1"});
          for (int i = 0; i < l2; ++i) arrows.push_back({name(), "2", "2"});
          for (int i = 0; i < f; ++i) arrows.push_back({name(), "1", "2"});
          for (int i = 0; i < b; ++i) arrows.push_back({name(), "2", "1"});
          out.push_back(Quiver::build({"1", "2"}, arrows));
        }
  return out;
}

}  // namespace gentle
