#include "weilrep/relations.hpp"

#include <algorithm>
#include <string>

namespace weilrep {

namespace {

// Embeds the rows of m (width w) into width `total`, starting at column `offset`.
FpMatrix embed(const FpMatrix& m, int offset, int total) {
  FpMatrix out(m.p(), m.rows(), total);
  if (m.rows() > 0 && m.cols() > 0) out.set_block(0, offset, m);
  return out;
}

Subspace embed(const Subspace& s, int offset, int total) {
  if (s.dim() == 0) return Subspace::zero(s.p(), total);
  return Subspace::span(embed(s.basis(), offset, total));
}

std::vector<int> range(int first, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

}  // namespace

LinearRelation::LinearRelation(SymplecticSpace source, SymplecticSpace target, Subspace subspace)
    : source_(source), target_(target), subspace_(std::move(subspace)) {
  if (source_.p() != target_.p()) throw ValidationError("relation: source and target moduli differ");
  if (subspace_.ambient() != source_.dim() + target_.dim())
    throw DimensionError("relation: subspace must live in a space of dimension 2m + 2n = " +
                         std::to_string(source_.dim() + target_.dim()));
  if (subspace_.dim() > 0 && subspace_.p() != source_.p()) throw ValidationError("relation: subspace modulus differs");
}

bool LinearRelation::contains(const FpVector& v, const FpVector& w) const {
  if (static_cast<int>(v.size()) != source_.dim() || static_cast<int>(w.size()) != target_.dim())
    throw DimensionError("relation membership: vector lengths do not match");
  FpVector joined(v);
  joined.insert(joined.end(), w.begin(), w.end());
  return subspace_.contains(joined);
}

LinearRelation graph_of_map(const FpMatrix& a, const SymplecticSpace& source, const SymplecticSpace& target) {
  if (a.rows() != source.dim() || a.cols() != target.dim())
    throw DimensionError("graph: map must be 2m x 2n");
  const FpMatrix rows = FpMatrix::hstack(FpMatrix::identity(source.p(), source.dim()), a);
  return {source, target, source.dim() ? Subspace::span(rows) : Subspace::zero(source.p(), target.dim())};
}

LinearRelation graph(const SymplecticElement& g) { return graph_of_map(g.matrix(), g.space(), g.space()); }

LinearRelation identity_relation(const SymplecticSpace& space) {
  return graph(SymplecticElement::identity(space));
}

LinearRelation direct_sum(const Subspace& l1, const SymplecticSpace& source, const Subspace& l2,
                          const SymplecticSpace& target) {
  if (l1.ambient() != source.dim() || l2.ambient() != target.dim())
    throw DimensionError("direct_sum: subspaces do not match the spaces");
  const int total = source.dim() + target.dim();
  return {source, target, embed(l1, 0, total) + embed(l2, source.dim(), total)};
}

LinearRelation compose(const LinearRelation& s, const LinearRelation& t) {
  if (!(t.target() == s.source())) throw DimensionError("compose: t.target must equal s.source");
  const int p = t.p();
  const int dx = t.source().dim(), dy = t.target().dim(), dz = s.target().dim();
  const int total = dx + dy + dz;
  // (T + Z) cap (X + S) inside X + Y + Z
  const Subspace tz = embed(t.subspace(), 0, total) + Subspace::coordinate(p, total, range(dx + dy, dz));
  const Subspace xs = Subspace::coordinate(p, total, range(0, dx)) + embed(s.subspace(), dx, total);
  const Subspace both = intersect(tz, xs);
  std::vector<FpVector> rows;
  for (int i = 0; i < both.dim(); ++i) {
    const FpVector r = both.basis().row(i);
    FpVector xz(r.begin(), r.begin() + dx);
    xz.insert(xz.end(), r.begin() + dx + dy, r.end());
    rows.push_back(std::move(xz));
  }
  return {t.source(), s.target(), Subspace::span(p, dx + dz, rows)};
}

RelationStructure structure(const LinearRelation& t) {
  const int p = t.p(), dx = t.source().dim(), dy = t.target().dim();
  const Subspace& s = t.subspace();
  return {
      project(intersect(s, Subspace::coordinate(p, dx + dy, range(0, dx))), 0, dx),
      project(s, 0, dx),
      project(s, dx, dy),
      project(intersect(s, Subspace::coordinate(p, dx + dy, range(dx, dy))), dx, dy),
  };
}

LinearRelation pseudo_inverse(const LinearRelation& t) {
  const int dx = t.source().dim(), dy = t.target().dim();
  std::vector<FpVector> rows;
  for (int i = 0; i < t.subspace().dim(); ++i) {
    const FpVector r = t.subspace().basis().row(i);
    FpVector swapped(r.begin() + dx, r.end());
    swapped.insert(swapped.end(), r.begin(), r.begin() + dx);
    rows.push_back(std::move(swapped));
  }
  return {t.target(), t.source(), Subspace::span(t.p(), dx + dy, rows)};
}

Subspace apply_to_subspace(const LinearRelation& t, const Subspace& u) {
  const int dx = t.source().dim(), dy = t.target().dim();
  if (u.ambient() != dx) throw DimensionError("apply_to_subspace: U must live in the source");
  const Subspace uy = embed(u, 0, dx + dy) + Subspace::coordinate(t.p(), dx + dy, range(dx, dy));
  return project(intersect(t.subspace(), uy), dx, dy);
}

bool is_perfect_lagrangian(const LinearRelation& t) {
  if (t.subspace().dim() != t.m() + t.n()) return false;
  if (t.subspace().dim() == 0) return true;
  const FpMatrix& b = t.subspace().basis();
  return (b * difference_form_gram(t.source(), t.target()) * b.transpose()).is_zero();
}

LinearRelation coordinate_relation(const SymplecticSpace& source, const SymplecticSpace& target, int rank) {
  const int m = source.n(), n = target.n(), p = source.p();
  if (source.p() != target.p()) throw ValidationError("coordinate relation: moduli differ");
  if (rank < 0 || rank > std::min(m, n))
    throw ValidationError("coordinate relation: rank must lie in [0, min(m, n)], so dim ker <= m and dim indef <= n");
  const int total = 2 * m + 2 * n;
  std::vector<FpVector> rows;
  for (int i = 0; i < rank; ++i) {
    FpVector d(total, 0), c(total, 0);
    d[i] = d[2 * m + i] = 1;
    c[m + i] = c[2 * m + n + i] = 1;
    rows.push_back(d);
    rows.push_back(c);
  }
  for (int i = rank; i < m; ++i) {
    FpVector c(total, 0);
    c[m + i] = 1;
    rows.push_back(c);
  }
  for (int j = rank; j < n; ++j) {
    FpVector c(total, 0);
    c[2 * m + n + j] = 1;
    rows.push_back(c);
  }
  return {source, target, Subspace::span(p, total, rows)};
}

LinearRelation random_perfect_lagrangian(const SymplecticSpace& source, const SymplecticSpace& target,
                                         int rank, Rng& rng) {
  const LinearRelation seed = coordinate_relation(source, target, rank);
  const auto g = random_element(source, rng);
  const auto h = random_element(target, rng);
  return compose(graph(h), compose(seed, graph(g)));
}

LinearRelation random_perfect_lagrangian(const SymplecticSpace& source, const SymplecticSpace& target,
                                         Rng& rng) {
  const int rank = rng.uniform_int(0, std::min(source.n(), target.n()));
  return random_perfect_lagrangian(source, target, rank, rng);
}

SymplecticElement relation_to_map(const LinearRelation& t) {
  if (!is_perfect_lagrangian(t)) throw ValidationError("relation_to_map: relation is not perfect Lagrangian");
  const auto st = structure(t);
  if (st.ker.dim() != 0 || st.indef.dim() != 0)
    throw ValidationError("relation_to_map: ker and indef must both vanish");
  if (t.m() != t.n()) throw ValidationError("relation_to_map: source and target dimensions differ");
  // the RREF basis of a graph is (I | A)
  const int d = t.source().dim();
  return SymplecticElement(t.subspace().basis().block(0, d, d, d), t.source());
}

}  // namespace weilrep
