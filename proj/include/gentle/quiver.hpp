#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gentle {

using VertexId = int;
using ArrowId = int;

enum class Err {
  DuplicateName,
  UnknownEndpoint,
  Disconnected,
  EmptyQuiver,
  RelationNotLength2,
  DegreeExceeded,
  ExactlyOneViolated,
  NotInfinitePath,
  DegreeZero,
  VanishesAtZero,
  Syntax,
  RelationsPresent,
  UnknownName,
  WindowTooWide,
  Internal,
};

// All recoverable failures surface as Error; code() discriminates.
class Error : public std::runtime_error {
 public:
  Error(Err code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

struct ArrowDecl {
  std::string name;
  std::string src;
  std::string tgt;
};

// Finite quiver with named vertices and arrows. Ids are declaration indices,
// which fixes every deterministic ordering downstream.
class Quiver {
 public:
  // Checks duplicate names, unknown endpoints, nonempty vertex set and
  // connectedness of the underlying graph. Degree bounds are checked at
  // presentation level, not here.
  static Quiver build(const std::vector<std::string>& vertices,
                      const std::vector<ArrowDecl>& arrows);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int arrow_count() const { return static_cast<int>(arrow_names_.size()); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& arrow_name(ArrowId a) const { return arrow_names_[a]; }
  VertexId source(ArrowId a) const { return src_[a]; }
  VertexId target(ArrowId a) const { return tgt_[a]; }

  const std::vector<ArrowId>& arrows_from(VertexId v) const { return out_[v]; }
  const std::vector<ArrowId>& arrows_into(VertexId v) const { return in_[v]; }
  int outdeg(VertexId v) const { return static_cast<int>(out_[v].size()); }
  int indeg(VertexId v) const { return static_cast<int>(in_[v].size()); }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> arrow_names_;
  std::vector<VertexId> src_, tgt_;
  std::vector<std::vector<ArrowId>> out_, in_;
};

// A path is either stationary at a vertex or a composable word of arrows,
// read left to right: (a b) is "a then b".
class Path {
 public:
  Path() = default;
  static Path stationary(VertexId v);
  static Path word(std::vector<ArrowId> arrows);

  bool is_stationary() const { return arrows_.empty(); }
  int length() const { return static_cast<int>(arrows_.size()); }
  VertexId base() const { return base_; }  // stationary paths only
  const std::vector<ArrowId>& arrows() const { return arrows_; }
  ArrowId first() const { return arrows_.front(); }
  ArrowId last() const { return arrows_.back(); }

  Path prefix(int len) const;  // stationary-at-source results need a quiver; len >= 1 here
  Path suffix(int len) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.arrows_ == b.arrows_ && (!a.arrows_.empty() || a.base_ == b.base_);
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  // Lexicographic on arrow words, stationary paths first by vertex.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows_.empty() != b.arrows_.empty()) return a.arrows_.empty();
    if (a.arrows_.empty()) return a.base_ < b.base_;
    return a.arrows_ < b.arrows_;
  }

 private:
  VertexId base_ = -1;
  std::vector<ArrowId> arrows_;
};

VertexId source(const Quiver& q, const Path& p);
VertexId target(const Quiver& q, const Path& p);
// "x y z" for words, "e(v)" for stationary paths.
std::string format_path(const Quiver& q, const Path& p);
// Contiguous subword test on arrow words; stationary never counts as subword.
bool is_subword(const Path& part, const Path& whole);
Path concat(const Path& a, const Path& b);

}  // namespace gentle
