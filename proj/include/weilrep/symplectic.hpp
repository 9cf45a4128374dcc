#pragma once

#include <variant>
#include <vector>

#include "weilrep/field.hpp"
#include "weilrep/linalg.hpp"
#include "weilrep/random.hpp"

namespace weilrep {

/// V_{2n} = V_n^d + V_n^c with coordinates (x_1..x_n, y_1..y_n) and the form
/// {(x,y),(x',y')} = sum_j (x_j y'_j - y_j x'_j).
class SymplecticSpace {
 public:
  SymplecticSpace(int p, int n);

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  int dim() const noexcept { return 2 * n_; }

  int form(const FpVector& u, const FpVector& v) const;
  /// Omega = (0 I; -I 0), so {u, v} = u Omega v^T.
  FpMatrix gram() const;

  /// The x-coordinate subspace V^d and the y-coordinate subspace V^c.
  Subspace d_part() const;
  Subspace c_part() const;

  friend bool operator==(const SymplecticSpace& a, const SymplecticSpace& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  int p_;
  int n_;
};

/// Gram matrix of {(v,w),(v',w')} = {v,v'} - {w,w'} on V_{2m} + V_{2n}.
FpMatrix difference_form_gram(const SymplecticSpace& source, const SymplecticSpace& target);

/// R^lozenge, the orthocomplement for the symplectic form.
Subspace lozenge(const Subspace& r, const SymplecticSpace& space);

enum class SubspaceKind { lagrangian, isotropic, coisotropic, symplectic, none };
const char* to_string(SubspaceKind kind);

/// Most specific class first: Lagrangian beats isotropic/coisotropic. The zero
/// subspace (and the full space) are classified with the usual degenerate
/// conventions, e.g. {0} is isotropic and symplectic; isotropic wins.
SubspaceKind classify_subspace(const Subspace& r, const SymplecticSpace& space);
bool is_isotropic(const Subspace& r, const SymplecticSpace& space);

bool is_symplectic(const FpMatrix& m, const SymplecticSpace& space);

/// Block identities that every element of Sp(2n) satisfies in the row
/// convention: a^t c = c^t a, a b^t = b a^t, c d^t = d c^t and a d^t - b c^t = 1.
bool block_identities_hold(const FpMatrix& m, int n);

/// An element g of Sp(V_{2n}) acting on row vectors, v -> v g.
class SymplecticElement {
 public:
  /// Throws ValidationError unless m is 2n x 2n and preserves the form.
  SymplecticElement(FpMatrix m, SymplecticSpace space);

  static SymplecticElement identity(const SymplecticSpace& space);

  const FpMatrix& matrix() const noexcept { return m_; }
  const SymplecticSpace& space() const noexcept { return space_; }
  FpMatrix a() const { return m_.block(0, 0, space_.n(), space_.n()); }
  FpMatrix b() const { return m_.block(0, space_.n(), space_.n(), space_.n()); }
  FpMatrix c() const { return m_.block(space_.n(), 0, space_.n(), space_.n()); }
  FpMatrix d() const { return m_.block(space_.n(), space_.n(), space_.n(), space_.n()); }

  FpVector act(const FpVector& v) const { return m_.apply(v); }
  SymplecticElement inverse() const;

  friend SymplecticElement operator*(const SymplecticElement& g, const SymplecticElement& h);
  friend bool operator==(const SymplecticElement& g, const SymplecticElement& h) {
    return g.space_ == h.space_ && g.m_ == h.m_;
  }

 private:
  struct Trusted {};
  SymplecticElement(FpMatrix m, SymplecticSpace space, Trusted)
      : m_(std::move(m)), space_(space) {}

  FpMatrix m_;
  SymplecticSpace space_;
};

/// (a 0; 0 a^{t-1}) for invertible a.
struct HLetter {
  FpMatrix a;
};
/// (1 b; 0 1) for symmetric b.
struct NplusLetter {
  FpMatrix b;
};
/// J_k, 1-based k: e_k^d -> e_k^c, e_k^c -> -e_k^d, other basis vectors fixed.
struct JLetter {
  int k;
};
using GeneratorLetter = std::variant<HLetter, NplusLetter, JLetter>;

struct GeneratorWord {
  std::vector<GeneratorLetter> letters;
};

/// Throws ValidationError for a singular a, a non-symmetric b, or k outside [1, n].
SymplecticElement make_generator(const GeneratorLetter& letter, const SymplecticSpace& space);

/// Left-to-right product of the letters; the empty word is the identity.
SymplecticElement evaluate(const GeneratorWord& word, const SymplecticSpace& space);

/// Writes g as a word in H, N_+ and J_k letters.
///
/// Follows the generation argument: bring the a-block to (0 0; 0 I_r) with
/// H elements, clear the lower-right corner of c with an N_- element, swap
/// the degenerate coordinates with J_1..J_l so that c vanishes, and finish
/// with an H and an N_+ element. N_- letters are expanded into
/// J_1..J_n N_+ (J_1..J_n)^{-1}. Identity letters are dropped, so the
/// identity decomposes to the empty word and an N_+ element to one letter.
GeneratorWord decompose(const SymplecticElement& g);

/// Uniformly random letter: H with a random invertible matrix, N_+ with a
/// random symmetric matrix, or J_k with random k.
GeneratorLetter random_letter(const SymplecticSpace& space, Rng& rng);
GeneratorWord random_word(const SymplecticSpace& space, Rng& rng, int min_letters = 10,
                          int max_letters = 30);
SymplecticElement random_element(const SymplecticSpace& space, Rng& rng);

struct IsotropicCanonicalForm {
  SymplecticElement g;
  std::vector<int> index_set;  ///< 1-based coordinates alpha with M g = span{e_alpha^c}
};

/// For isotropic M returns g in Sp with M g a coordinate subspace of V^c.
/// Built by extending the RREF basis of M (placed in the c-slots) to a
/// symplectic basis; index_set is {1, ..., dim M}.
IsotropicCanonicalForm canonicalize_isotropic(const Subspace& m, const SymplecticSpace& space);

/// A symplectic basis of V_{2n} as rows (u_1..u_n, w_1..w_n) with
/// {u_i, w_j} = delta_ij, whose first w's are the given isotropic vectors.
FpMatrix extend_to_symplectic_basis(const Subspace& isotropic, const SymplecticSpace& space);

/// X / X^lozenge for a coisotropic X, represented by an RREF-canonical
/// complement of X^lozenge inside X. The induced form is recomputed from
/// the ambient one.
class ReducedSpace {
 public:
  ReducedSpace(const Subspace& coisotropic, const SymplecticSpace& space);

  int dim() const noexcept { return complement_.rows(); }
  const FpMatrix& complement() const noexcept { return complement_; }
  /// Induced (nondegenerate) Gram matrix on the complement coordinates.
  const FpMatrix& gram() const noexcept { return gram_; }
  /// Image in the quotient of a subspace of X, in complement coordinates.
  Subspace image(const Subspace& s) const;
  Subspace orthocomplement(const Subspace& s) const;

 private:
  Subspace x_;
  Subspace radical_;
  FpMatrix complement_;
  FpMatrix gram_;
};

}  // namespace weilrep
