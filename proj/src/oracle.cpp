#include "gentle/oracle.hpp"

#include <algorithm>
#include <string>

namespace gentle {

namespace {

std::string itos(int n) { return std::to_string(n); }

// Unique allowed walk of `len` arrows starting with `a`, nullopt if it dies.
std::optional<Path> forward_walk(const GentlePresentation& p, ArrowId a, int len) {
  std::vector<ArrowId> w{a};
  while (static_cast<int>(w.size()) < len) {
    ArrowId nx = p.next_allowed(w.back());
    if (nx < 0) return std::nullopt;
    w.push_back(nx);
  }
  return Path::word(std::move(w));
}

// Unique allowed walk of `len` arrows ending with `a`.
std::optional<Path> backward_walk(const GentlePresentation& p, ArrowId a, int len) {
  std::vector<ArrowId> w{a};
  while (static_cast<int>(w.size()) < len) {
    ArrowId pr = p.prev_allowed(w.front());
    if (pr < 0) return std::nullopt;
    w.insert(w.begin(), pr);
  }
  return Path::word(std::move(w));
}

}  // namespace

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

int QMatrix::rank() const {
  std::vector<Rational> m = a_;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (m[i * cols_ + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) std::swap(m[piv * cols_ + j], m[r * cols_ + j]);
    for (int i = r + 1; i < rows_; ++i) {
      if (m[i * cols_ + c] == 0) continue;
      Rational f = m[i * cols_ + c] / m[r * cols_ + c];
      for (int j = c; j < cols_; ++j) m[i * cols_ + j] -= f * m[r * cols_ + j];
    }
    ++r;
  }
  return r;
}

QMatrix QMatrix::mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Err::Internal, "matrix shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

TruncatedAlgebra::TruncatedAlgebra(const GentlePresentation& p, int bound)
    : pres_(&p), bound_(bound) {
  if (bound < 0) throw Error(Err::Internal, "negative truncation bound");
  basis_.resize(bound + 1);
  index_by_first_.assign(bound + 1, std::vector<int>(p.quiver().arrow_count(), -1));
  for (int n = 0; n <= bound; ++n) {
    basis_[n] = path_basis(p, n);
    if (n >= 1)
      for (int i = 0; i < static_cast<int>(basis_[n].size()); ++i)
        index_by_first_[n][basis_[n][i].first()] = i;
  }
}

int TruncatedAlgebra::dim(int n) const {
  if (n < 0 || n > bound_) return 0;
  return static_cast<int>(basis_[n].size());
}

const std::vector<Path>& TruncatedAlgebra::basis(int n) const {
  if (n < 0 || n > bound_) throw Error(Err::WindowTooWide, "degree " + itos(n) + " outside truncation");
  return basis_[n];
}

int TruncatedAlgebra::index_of(const Path& path) const {
  int n = path.length();
  if (n > bound_) return -1;
  if (path.is_stationary()) return path.base();
  if (!pres_->path_in_basis(path)) return -1;
  return index_by_first_[n][path.first()];
}

std::optional<std::pair<int, int>> TruncatedAlgebra::product(int dp, int ip, int dq, int iq) const {
  const Quiver& q = pres_->quiver();
  const Path& a = basis_[dp][ip];
  const Path& b = basis_[dq][iq];
  if (a.is_stationary()) return source(q, b) == a.base() ? std::optional(std::pair{dq, iq}) : std::nullopt;
  if (b.is_stationary()) return target(q, a) == b.base() ? std::optional(std::pair{dp, ip}) : std::nullopt;
  if (dp + dq > bound_)
    throw Error(Err::WindowTooWide, "product of degree " + itos(dp + dq) + " outside truncation");
  if (q.target(a.last()) != q.source(b.first())) return std::nullopt;
  if (pres_->in_ideal(a.last(), b.first())) return std::nullopt;
  int idx = index_by_first_[dp + dq][a.first()];
  if (idx < 0) throw Error(Err::Internal, "allowed concatenation missing from basis");
  return std::pair{dp + dq, idx};
}

QMatrix TruncatedAlgebra::right_mult(const Path& by, int n) const {
  int l = by.length();
  if (n + l > bound_) throw Error(Err::WindowTooWide, "right multiplication leaves truncation");
  int ib = index_of(by);
  if (ib < 0) throw Error(Err::Internal, "multiplier is not a basis path");
  QMatrix m(dim(n + l), dim(n));
  for (int i = 0; i < dim(n); ++i)
    if (auto pr = product(n, i, l, ib)) m.at(pr->second, i) = 1;
  return m;
}

QMatrix TruncatedAlgebra::left_mult(const Path& by, int n) const {
  int l = by.length();
  if (n + l > bound_) throw Error(Err::WindowTooWide, "left multiplication leaves truncation");
  int ib = index_of(by);
  if (ib < 0) throw Error(Err::Internal, "multiplier is not a basis path");
  QMatrix m(dim(n + l), dim(n));
  for (int i = 0; i < dim(n); ++i)
    if (auto pr = product(l, ib, n, i)) m.at(pr->second, i) = 1;
  return m;
}

std::vector<Path> paths_into(const GentlePresentation& p, VertexId v, int len) {
  if (len == 0) return {Path::stationary(v)};
  std::vector<Path> out;
  for (ArrowId b : p.quiver().arrows_into(v))
    if (auto w = backward_walk(p, b, len)) out.push_back(*w);
  return out;
}

CheckReport verify_center(const GentlePresentation& p, const CenterDescription& c, int bound) {
  CheckReport rep;
  TruncatedAlgebra alg(p, bound);
  const Quiver& q = p.quiver();

  struct Gen {
    std::string label;
    int degree = 0;
    std::vector<std::pair<int, Rational>> coords;  // (index, coefficient)
    int period = -1;                               // cycle generators only
  };
  std::vector<Gen> gens;
  for (const Path& cp : c.cyclic_finite) {
    int idx = alg.index_of(cp);
    if (idx < 0) throw Error(Err::Internal, "cyclic path missing from basis");
    gens.push_back({format_path(q, cp), cp.length(), {{idx, 1}}, -1});
  }
  for (size_t g = 0; g < c.cycle_generators.size(); ++g) {
    const auto& cg = c.cycle_generators[g];
    Gen gen;
    gen.label = "cycle generator " + itos(static_cast<int>(g));
    gen.degree = cg.summands.front().length();
    gen.period = gen.degree;
    for (const Path& s : cg.summands) {
      int idx = alg.index_of(s);
      if (idx < 0) throw Error(Err::Internal, "rotation missing from basis");
      gen.coords.push_back({idx, 1});
    }
    gens.push_back(std::move(gen));
  }

  // Centrality by exhaustive products against the whole degreewise basis.
  for (const Gen& g : gens) {
    bool failed = false;
    for (int n = 0; !failed && n + g.degree <= bound; ++n) {
      for (int i = 0; !failed && i < alg.dim(n); ++i) {
        std::vector<Rational> diff(alg.dim(n + g.degree));
        for (const auto& [j, coeff] : g.coords) {
          if (auto pr = alg.product(g.degree, j, n, i)) diff[pr->second] += coeff;
          if (auto pr = alg.product(n, i, g.degree, j)) diff[pr->second] -= coeff;
        }
        if (std::any_of(diff.begin(), diff.end(), [](const Rational& x) { return x != 0; })) {
          rep.add(CheckItem::Kind::CentralityFailed,
                  g.label + " does not commute with " + format_path(q, alg.basis(n)[i]));
          failed = true;
        }
      }
    }
  }

  // Degreewise centralizer dimension against the description's prediction.
  // Products leave degree bound - 1, so that is the last checkable degree.
  for (int n = 0; n <= bound - 1; ++n) {
    int dn = alg.dim(n);
    int rows = q.arrow_count() * alg.dim(n + 1) + dn;
    QMatrix con(rows, dn);
    int r0 = 0;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      Path pa = Path::word({a});
      QMatrix mr = alg.right_mult(pa, n);
      QMatrix ml = alg.left_mult(pa, n);
      for (int i = 0; i < mr.rows(); ++i)
        for (int j = 0; j < dn; ++j) con.at(r0 + i, j) = mr.at(i, j) - ml.at(i, j);
      r0 += mr.rows();
    }
    for (int i = 0; i < dn; ++i) {
      const Path& b = alg.basis(n)[i];
      if (source(q, b) != target(q, b)) con.at(r0 + i, i) = 1;
    }
    long long computed = dn - con.rank();
    long long predicted = (n == 0) ? 1 : 0;
    for (const Path& cp : c.cyclic_finite)
      if (cp.length() == n) ++predicted;
    if (n >= 1)
      for (const Gen& g : gens)
        if (g.period > 0 && n % g.period == 0) ++predicted;
    if (computed != predicted)
      rep.add(CheckItem::Kind::DimensionMismatch, "degree " + itos(n) + ": centralizer has dimension " +
                                                      std::to_string(computed) + ", description predicts " +
                                                      std::to_string(predicted));
  }
  return rep;
}

namespace {

// A basis token of a materialized summand slice, or an intermediate value
// while ops are applied. InvPath carries q for the element q^{-1}; CycleIdx
// carries the walk position n of I(alpha).
struct Elem {
  enum class Tag { Zero, ProjPath, InvPath, CycleIdx } tag = Tag::Zero;
  Path path;
  int n = 0;
};

std::vector<Elem> summand_slice(const GentlePresentation& p, const Summand& s, int d, int bound) {
  const Quiver& q = p.quiver();
  int inner = d + s.shift;
  std::vector<Elem> out;
  switch (s.kind) {
    case SummandKind::Projective: {
      if (inner < 0) break;
      if (inner > bound)
        throw Error(Err::WindowTooWide, "slice at degree " + itos(d) + " needs paths of length " + itos(inner));
      if (inner == 0) {
        out.push_back({Elem::Tag::ProjPath, Path::stationary(s.vertex), 0});
        break;
      }
      for (ArrowId a : q.arrows_from(s.vertex))
        if (auto w = forward_walk(p, a, inner)) out.push_back({Elem::Tag::ProjPath, *w, 0});
      break;
    }
    case SummandKind::InjVertex: {
      int len = -inner;
      if (len < 0) break;
      if (len > bound)
        throw Error(Err::WindowTooWide, "slice at degree " + itos(d) + " needs paths of length " + itos(len));
      for (auto& w : paths_into(p, s.vertex, len)) out.push_back({Elem::Tag::InvPath, w, 0});
      break;
    }
    case SummandKind::InjArrow: {
      if (inner > bound || inner < -bound)
        throw Error(Err::WindowTooWide, "walk position " + itos(inner) + " outside truncation");
      out.push_back({Elem::Tag::CycleIdx, Path(), inner});
      break;
    }
  }
  return out;
}

Elem apply_op(const GentlePresentation& p, const MapOp& op, Elem e) {
  const Quiver& q = p.quiver();
  if (e.tag == Elem::Tag::Zero) return e;
  switch (op.kind) {
    case MapOp::Kind::LeftMult: {
      if (e.tag != Elem::Tag::ProjPath) throw Error(Err::Internal, "left multiplication off a projective");
      const Path& m = op.path;
      VertexId sx = source(q, e.path);
      if (q.target(m.last()) != sx) return {};
      if (!e.path.is_stationary() && p.in_ideal(m.last(), e.path.first())) return {};
      return {Elem::Tag::ProjPath, concat(m, e.path), 0};
    }
    case MapOp::Kind::WStar: {
      if (e.tag != Elem::Tag::InvPath) throw Error(Err::Internal, "suffix chop off a non inverse path");
      const Path& w = op.path;
      int lq = e.path.length(), lw = w.length();
      if (lq < lw) return {};
      if (lq == lw) {
        if (e.path != w) return {};
        return {Elem::Tag::InvPath, Path::stationary(source(q, w)), 0};
      }
      if (e.path.suffix(lw) != w) return {};
      return {Elem::Tag::InvPath, e.path.prefix(lq - lw), 0};
    }
    case MapOp::Kind::RhoInf: {
      if (e.tag != Elem::Tag::CycleIdx) throw Error(Err::Internal, "positive-part kill off a walk module");
      if (e.n > 0) return {};
      int len = -e.n;
      if (len == 0) return {Elem::Tag::InvPath, Path::stationary(q.source(op.arrow)), 0};
      std::vector<ArrowId> w(len);
      ArrowId cur = op.arrow;
      for (int i = len - 1; i >= 0; --i) {
        cur = p.prev_allowed(cur);
        if (cur < 0) throw Error(Err::Internal, "cycle walk ended");
        w[i] = cur;
      }
      return {Elem::Tag::InvPath, Path::word(std::move(w)), 0};
    }
  }
  return {};
}

Elem apply_iota(const GentlePresentation& p, const IotaEntry& ent, const Summand& tgt, const Path& x) {
  switch (ent.kind) {
    case IotaEntry::Kind::Socle:
      if (x.is_stationary()) return {Elem::Tag::InvPath, x, 0};
      return {};
    case IotaEntry::Kind::Unit:
      if (x.is_stationary()) return {Elem::Tag::CycleIdx, Path(), 0};
      if (x.first() == tgt.arrow) return {Elem::Tag::CycleIdx, Path(), x.length()};
      return {};
    case IotaEntry::Kind::InversePath: {
      const Path& g = ent.path;
      if (x.is_stationary()) return {Elem::Tag::InvPath, g, 0};
      if (x.length() > g.length()) return {};
      if (g.prefix(x.length()) != x) return {};
      if (x.length() == g.length())
        return {Elem::Tag::InvPath, Path::stationary(target(p.quiver(), g)), 0};
      return {Elem::Tag::InvPath, g.suffix(g.length() - x.length()), 0};
    }
  }
  return {};
}

int find_token(const std::vector<Elem>& slice, const Elem& e) {
  for (int i = 0; i < static_cast<int>(slice.size()); ++i) {
    if (slice[i].tag != e.tag) continue;
    if (e.tag == Elem::Tag::CycleIdx ? slice[i].n == e.n : slice[i].path == e.path) return i;
  }
  return -1;
}

struct TermSlice {
  std::vector<std::vector<Elem>> by_summand;
  std::vector<int> offset;
  int dim = 0;
};

TermSlice term_slice(const GentlePresentation& p, const std::vector<Summand>& term, int d, int bound) {
  TermSlice t;
  for (const Summand& s : term) {
    t.offset.push_back(t.dim);
    t.by_summand.push_back(summand_slice(p, s, d, bound));
    t.dim += static_cast<int>(t.by_summand.back().size());
  }
  return t;
}

QMatrix map_matrix(const GentlePresentation& p, const TermSlice& src, const TermSlice& tgt,
                   const std::vector<MapEntry>& entries) {
  QMatrix m(tgt.dim, src.dim);
  for (const MapEntry& e : entries) {
    for (int i = 0; i < static_cast<int>(src.by_summand[e.from].size()); ++i) {
      Elem cur = src.by_summand[e.from][i];
      for (const MapOp& op : e.ops) {
        cur = apply_op(p, op, cur);
        if (cur.tag == Elem::Tag::Zero) break;
      }
      if (cur.tag == Elem::Tag::Zero) continue;
      int j = find_token(tgt.by_summand[e.to], cur);
      if (j < 0) throw Error(Err::Internal, "map image missing from target slice");
      m.at(tgt.offset[e.to] + j, src.offset[e.from] + i) += e.sign;
    }
  }
  return m;
}

}  // namespace

CheckReport verify_complex(const GentlePresentation& p, const GradedComplex& c, int bound,
                           DegreeWindow w) {
  CheckReport rep;
  bool inj = c.orientation == GradedComplex::Orientation::Injective;
  int terms = static_cast<int>(c.terms.size());
  for (int d = w.lo; d <= w.hi; ++d) {
    std::vector<TermSlice> slices;
    slices.reserve(terms);
    for (int k = 0; k < terms; ++k) slices.push_back(term_slice(p, c.terms[k], d, bound));

    std::vector<QMatrix> mats;
    std::vector<int> ranks;
    for (size_t k = 0; k < c.maps.size(); ++k) {
      const TermSlice& src = inj ? slices[k] : slices[k + 1];
      const TermSlice& tgt = inj ? slices[k + 1] : slices[k];
      mats.push_back(map_matrix(p, src, tgt, c.maps[k]));
      ranks.push_back(mats.back().rank());
    }
    for (size_t k = 0; k + 1 < mats.size(); ++k) {
      QMatrix comp = inj ? QMatrix::mul(mats[k + 1], mats[k]) : QMatrix::mul(mats[k], mats[k + 1]);
      if (!comp.is_zero())
        rep.add(CheckItem::Kind::NotAComplex,
                "degree " + itos(d) + ": composite through term " + itos(static_cast<int>(k) + 1) +
                    " does not vanish");
    }

    if (inj) {
      Summand mod{SummandKind::Projective, c.vertex, -1, 0, -1};
      std::vector<Elem> msrc = summand_slice(p, mod, d, bound);
      QMatrix emb(slices[0].dim, static_cast<int>(msrc.size()));
      for (const IotaEntry& ent : c.iota)
        for (int i = 0; i < static_cast<int>(msrc.size()); ++i) {
          Elem r = apply_iota(p, ent, c.terms[0][ent.to_summand], msrc[i].path);
          if (r.tag == Elem::Tag::Zero) continue;
          int j = find_token(slices[0].by_summand[ent.to_summand], r);
          if (j < 0) throw Error(Err::Internal, "augmentation image missing from target slice");
          emb.at(slices[0].offset[ent.to_summand] + j, i) += 1;
        }
      int remb = emb.rank();
      if (remb != static_cast<int>(msrc.size()))
        rep.add(CheckItem::Kind::ExactnessFailed, "degree " + itos(d) + ": augmentation not injective");
      if (mats.empty()) {
        if (remb != slices[0].dim)
          rep.add(CheckItem::Kind::ExactnessFailed,
                  "degree " + itos(d) + ": augmentation of the length-zero resolution not surjective");
      } else {
        if (!QMatrix::mul(mats[0], emb).is_zero())
          rep.add(CheckItem::Kind::NotAComplex,
                  "degree " + itos(d) + ": first differential does not kill the augmentation");
        if (ranks[0] + remb != slices[0].dim)
          rep.add(CheckItem::Kind::ExactnessFailed, "degree " + itos(d) + ": not exact at term 0");
        for (int k = 1; k + 1 < terms; ++k)
          if (ranks[k] + ranks[k - 1] != slices[k].dim)
            rep.add(CheckItem::Kind::ExactnessFailed,
                    "degree " + itos(d) + ": not exact at term " + itos(k));
        if (ranks[terms - 2] != slices[terms - 1].dim)
          rep.add(CheckItem::Kind::ExactnessFailed,
                  "degree " + itos(d) + ": final term not covered");
      }
    } else {
      int want0 = slices[0].dim - (d == 0 ? 1 : 0);
      int r0 = mats.empty() ? 0 : ranks[0];
      if (r0 != want0)
        rep.add(CheckItem::Kind::ExactnessFailed, "degree " + itos(d) + ": not exact at term 0");
      for (int k = 1; k + 1 < terms; ++k)
        if (ranks[k] + ranks[k - 1] != slices[k].dim)
          rep.add(CheckItem::Kind::ExactnessFailed,
                  "degree " + itos(d) + ": not exact at term " + itos(k));
      if (terms >= 2 && c.complete && ranks[terms - 2] != slices[terms - 1].dim)
        rep.add(CheckItem::Kind::ExactnessFailed,
                "degree " + itos(d) + ": final term not covered");
    }
  }
  return rep;
}

std::map<int, long long> ext_dims_bruteforce(const GentlePresentation& p, VertexId v, int i,
                                             int bound) {
  if (i < 0) throw Error(Err::Internal, "negative ext degree");
  const Quiver& q = p.quiver();
  ForbiddenSets fs = forbidden_sets(p, v, i + 1);

  // Dual complex blocks at level k: one per thread word alive at k, at the
  // word's target; level 0 is the single block at v.
  auto blocks = [&](int k) {
    std::vector<VertexId> t;
    if (k == 0) {
      t.push_back(v);
      return t;
    }
    for (const auto& th : fs.threads)
      if (auto wd = th.word(k)) t.push_back(target(q, *wd));
    return t;
  };
  // Map level k -> k + 1: each alive-(k+1) word contributes right
  // multiplication by its last arrow out of its parent block.
  auto level_map = [&](int k, int d) {
    std::vector<VertexId> src = blocks(k), tgt = blocks(k + 1);
    std::vector<std::vector<Path>> sb, tb;
    int sdim = 0, tdim = 0;
    std::vector<int> soff, toff;
    for (VertexId w : src) {
      soff.push_back(sdim);
      sb.push_back(d + k >= 0 ? paths_into(p, w, d + k) : std::vector<Path>{});
      sdim += static_cast<int>(sb.back().size());
    }
    for (VertexId w : tgt) {
      toff.push_back(tdim);
      tb.push_back(d + k + 1 >= 0 ? paths_into(p, w, d + k + 1) : std::vector<Path>{});
      tdim += static_cast<int>(tb.back().size());
    }
    QMatrix m(tdim, sdim);
    int row_block = 0;
    int alive_k = 0;  // parent position among threads alive at level k
    for (const auto& th : fs.threads) {
      bool at_k = k == 0 || th.word(k).has_value();
      if (auto wk1 = th.word(k + 1)) {
        int parent = k == 0 ? 0 : alive_k;
        ArrowId label = wk1->last();
        for (int ci = 0; ci < static_cast<int>(sb[parent].size()); ++ci) {
          const Path& x = sb[parent][ci];
          Path y;
          if (x.is_stationary())
            y = Path::word({label});
          else if (p.in_ideal(x.last(), label))
            continue;
          else
            y = concat(x, Path::word({label}));
          int ri = -1;
          for (int t2 = 0; t2 < static_cast<int>(tb[row_block].size()); ++t2)
            if (tb[row_block][t2] == y) ri = t2;
          if (ri < 0) throw Error(Err::Internal, "dual image missing from block");
          m.at(toff[row_block] + ri, soff[parent] + ci) = 1;
        }
        ++row_block;
      }
      if (k > 0 && at_k) ++alive_k;
    }
    return m;
  };

  std::map<int, long long> dims;
  for (int d = -i; d <= bound - i - 1; ++d) {
    long long dim_i = 0;
    for (VertexId w : blocks(i)) dim_i += d + i >= 0 ? static_cast<long long>(paths_into(p, w, d + i).size()) : 0;
    long long r_out = level_map(i, d).rank();
    long long r_in = i == 0 ? 0 : level_map(i - 1, d).rank();
    long long dd = dim_i - r_out - r_in;
    if (dd < 0) throw Error(Err::Internal, "negative cohomology dimension");
    if (dd > 0) dims[d] = dd;
  }
  return dims;
}

std::map<int, long long> descriptor_dims(const GentlePresentation& p, const ExtDescriptor& e,
                                         int lo, int hi) {
  std::map<int, long long> dims;
  auto put = [&](int d, long long c) {
    if (c > 0 && d >= lo && d <= hi) dims[d] += c;
  };
  switch (e.kind) {
    case ExtDescriptor::Kind::Zero:
      break;
    case ExtDescriptor::Kind::FreeAtVertex:
      for (int d = std::max(lo, 0); d <= hi; ++d)
        put(d, static_cast<long long>(paths_into(p, e.vertex, d).size()));
      break;
    case ExtDescriptor::Kind::ArrowModule:
      for (int d = std::max(lo, 1); d <= hi; ++d)
        put(d, backward_walk(p, e.arrow, d) ? 1 : 0);
      break;
    case ExtDescriptor::Kind::Simple:
      put(0, 1);
      break;
    case ExtDescriptor::Kind::QuotientSum:
      for (const auto& [w, a, k] : e.quotient_summands)
        for (int d = lo; d <= hi; ++d) {
          int n = d + k;
          if (n < 0) continue;
          long long all = static_cast<long long>(paths_into(p, w, n).size());
          long long cut = n >= 1 && backward_walk(p, a, n) ? 1 : 0;
          put(d, all - cut);
        }
      break;
    case ExtDescriptor::Kind::OracleDims:
      if (e.dims.empty()) throw Error(Err::Internal, "oracle dims not filled");
      for (const auto& [d, c] : e.dims) put(d, c);
      break;
  }
  return dims;
}

bool in_monomial_ideal(const GentlePresentation& p, const Path& q,
                       const std::vector<VertexId>& idempotents, const std::vector<Path>& paths) {
  const Quiver& qu = p.quiver();
  auto listed = [&](VertexId v) {
    return std::find(idempotents.begin(), idempotents.end(), v) != idempotents.end();
  };
  if (q.is_stationary()) return listed(q.base());
  if (listed(source(qu, q))) return true;
  for (ArrowId a : q.arrows())
    if (listed(qu.target(a))) return true;
  for (const Path& g : paths)
    if (g == q || is_subword(g, q)) return true;
  return false;
}

std::vector<long long> ideal_dims(const GentlePresentation& p,
                                  const std::vector<VertexId>& idempotents,
                                  const std::vector<Path>& paths, int bound) {
  std::vector<long long> dims(bound + 1, 0);
  for (int n = 0; n <= bound; ++n)
    for (const Path& q : path_basis(p, n))
      if (in_monomial_ideal(p, q, idempotents, paths)) ++dims[n];
  return dims;
}

CheckReport verify_free_module(const GentlePresentation& p, const std::vector<Path>& basis,
                               const std::vector<Path>& x_summands, int bound) {
  CheckReport rep;
  TruncatedAlgebra alg(p, bound);
  if (x_summands.empty()) throw Error(Err::Internal, "empty parameter element");
  int dx = x_summands.front().length();
  std::vector<int> xidx;
  for (const Path& s : x_summands) {
    if (s.length() != dx) throw Error(Err::Internal, "parameter element not homogeneous");
    int idx = alg.index_of(s);
    if (idx < 0) throw Error(Err::Internal, "parameter summand missing from basis");
    xidx.push_back(idx);
  }
  if (dx <= 0) throw Error(Err::Internal, "parameter element of degree zero");

  // Columns of the degree-n comparison: b x^k with l(b) + k dx = n.
  std::vector<std::vector<std::vector<Rational>>> columns(bound + 1);
  for (const Path& b : basis) {
    int l = b.length();
    if (l > bound) continue;
    int ib = alg.index_of(b);
    if (ib < 0) throw Error(Err::Internal, "claimed basis element missing from algebra basis");
    std::vector<Rational> cur(alg.dim(l));
    cur[ib] = 1;
    int deg = l;
    columns[deg].push_back(cur);
    while (deg + dx <= bound) {
      std::vector<Rational> next(alg.dim(deg + dx));
      for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
        if (cur[i] == 0) continue;
        for (int ix : xidx)
          if (auto pr = alg.product(deg, i, dx, ix)) next[pr->second] += cur[i];
      }
      deg += dx;
      cur = std::move(next);
      columns[deg].push_back(cur);
    }
  }
  for (int n = 0; n <= bound; ++n) {
    QMatrix m(alg.dim(n), static_cast<int>(columns[n].size()));
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i) m.at(i, j) = columns[n][j][i];
    int r = m.rank();
    if (r < m.cols())
      rep.add(CheckItem::Kind::NotFree,
              "degree " + itos(n) + ": relations among the claimed basis multiples");
    if (r < alg.dim(n))
      rep.add(CheckItem::Kind::NotFree, "degree " + itos(n) + ": claimed basis spans " + itos(r) +
                                            " of " + itos(alg.dim(n)));
  }
  return rep;
}

}  // namespace gentle
