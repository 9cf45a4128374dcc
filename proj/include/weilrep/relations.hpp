#pragma once

#include "weilrep/linalg.hpp"
#include "weilrep/random.hpp"
#include "weilrep/symplectic.hpp"

namespace weilrep {

/// A linear relation T: V_{2m} => V_{2n}, stored as a subspace of
/// V_{2m} + V_{2n} with coordinates ordered (source | target).
class LinearRelation {
 public:
  /// Throws DimensionError unless the ambient dimension is 2m + 2n and all
  /// moduli agree.
  LinearRelation(SymplecticSpace source, SymplecticSpace target, Subspace subspace);

  const SymplecticSpace& source() const noexcept { return source_; }
  const SymplecticSpace& target() const noexcept { return target_; }
  const Subspace& subspace() const noexcept { return subspace_; }
  int p() const noexcept { return source_.p(); }
  int m() const noexcept { return source_.n(); }
  int n() const noexcept { return target_.n(); }
  bool contains(const FpVector& v, const FpVector& w) const;

  friend bool operator==(const LinearRelation& a, const LinearRelation& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.subspace_ == b.subspace_;
  }

 private:
  SymplecticSpace source_;
  SymplecticSpace target_;
  Subspace subspace_;
};

/// {(v, vA)} for a 2m x 2n matrix A.
LinearRelation graph_of_map(const FpMatrix& a, const SymplecticSpace& source, const SymplecticSpace& target);
LinearRelation graph(const SymplecticElement& g);
LinearRelation identity_relation(const SymplecticSpace& space);

/// L1 + L2 as a relation V_{2m} => V_{2n}.
LinearRelation direct_sum(const Subspace& l1, const SymplecticSpace& source, const Subspace& l2,
                          const SymplecticSpace& target);

/// ST: first T, then S. Requires t.target() == s.source().
LinearRelation compose(const LinearRelation& s, const LinearRelation& t);

struct RelationStructure {
  Subspace ker;    ///< T cap (X + 0), in X
  Subspace dom;    ///< projection of T to X
  Subspace im;     ///< projection of T to Y
  Subspace indef;  ///< T cap (0 + Y), in Y
};
RelationStructure structure(const LinearRelation& t);

/// T^box: Y => X, the image of T under swapping the summands.
LinearRelation pseudo_inverse(const LinearRelation& t);

/// TU = {y : (u, y) in T for some u in U}.
Subspace apply_to_subspace(const LinearRelation& t, const Subspace& u);

/// T is maximal isotropic for {(v,w),(v',w')} = {v,v'} - {w,w'}.
bool is_perfect_lagrangian(const LinearRelation& t);

/// The identity on the first `rank` coordinate pairs, together with
/// (e_i^c, 0) for i > rank and (0, e_j^c) for j > rank. Perfect Lagrangian
/// with dim ker = m - rank and dim indef = n - rank.
LinearRelation coordinate_relation(const SymplecticSpace& source, const SymplecticSpace& target, int rank);

/// Perfect Lagrangian relation with ker of dimension m - rank and indef of
/// dimension n - rank: graph(h) T0 graph(g) for random symplectic g, h and
/// T0 = coordinate_relation(source, target, rank). Throws ValidationError
/// unless 0 <= rank <= min(m, n).
LinearRelation random_perfect_lagrangian(const SymplecticSpace& source, const SymplecticSpace& target,
                                         int rank, Rng& rng);
/// Same with the rank drawn uniformly from [0, min(m, n)].
LinearRelation random_perfect_lagrangian(const SymplecticSpace& source, const SymplecticSpace& target,
                                         Rng& rng);

/// A perfect Lagrangian relation with ker T = indef T = 0 is the graph of a
/// symplectic element; returns it. Throws ValidationError otherwise.
SymplecticElement relation_to_map(const LinearRelation& t);

}  // namespace weilrep
