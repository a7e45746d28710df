#pragma once

#include <utility>

#include "gentle/quiver.hpp"

namespace gentle {

enum class Kind { Gentle, LocallyGentle };

// Structured reason a (quiver, relations) pair fails the defining conditions.
// condition: 1 = degree bound, 2 = incoming pair rule, 3 = outgoing pair rule,
// 0 = other (shape of a relation).
struct Diagnostic {
  Err code = Err::Internal;
  int condition = 0;
  VertexId vertex = -1;
  std::vector<ArrowId> arrows;
  std::string message;
};

// A validated presentation kQ/I with quadratic monomial relations subject to:
//   (i)   in/out degree of every vertex at most 2,
//   (ii)  for arrows b != b' into s(a): exactly one of (b a), (b' a) in I,
//   (iii) for arrows b != b' out of t(a): exactly one of (a b), (a b') in I.
// Successive-arrow uniqueness follows: every arrow has at most one allowed and
// at most one forbidden successor (and predecessor), cached below.
class GentlePresentation {
 public:
  static GentlePresentation validate(Quiver q,
                                     std::vector<std::pair<ArrowId, ArrowId>> relations);
  static std::optional<Diagnostic> check(const Quiver& q,
                                         const std::vector<std::pair<ArrowId, ArrowId>>& relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<std::pair<ArrowId, ArrowId>>& relations() const { return relations_; }
  Kind kind() const { return kind_; }
  bool locally_gentle() const { return kind_ == Kind::LocallyGentle; }

  bool in_ideal(ArrowId a, ArrowId b) const { return rel_[a * quiver_.arrow_count() + b]; }

  // Unique successor/predecessor along basis paths (-1 when none).
  ArrowId next_allowed(ArrowId a) const { return next_allowed_[a]; }
  ArrowId prev_allowed(ArrowId a) const { return prev_allowed_[a]; }
  // Unique successor/predecessor along forbidden words (-1 when none).
  ArrowId next_forbidden(ArrowId a) const { return next_forbidden_[a]; }
  ArrowId prev_forbidden(ArrowId a) const { return prev_forbidden_[a]; }

  // True iff the word is composable and avoids every relation.
  bool path_in_basis(const Path& p) const;

 private:
  Quiver quiver_;
  std::vector<std::pair<ArrowId, ArrowId>> relations_;
  std::vector<char> rel_;
  std::vector<ArrowId> next_allowed_, prev_allowed_, next_forbidden_, prev_forbidden_;
  Kind kind_ = Kind::Gentle;
};

// Basis paths of degree n in declaration order: stationary paths by vertex for
// n = 0; for n >= 1 each surviving path is the unique allowed walk from its
// first arrow, so the list is keyed by first arrow.
std::vector<Path> path_basis(const GentlePresentation& p, int n);

}  // namespace gentle
