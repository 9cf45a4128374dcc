#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "weilrep/errors.hpp"

namespace weilrep {

/// Row vector over F_p. Entries are kept in [0, p).
using FpVector = std::vector<int>;

/// Dense row-major matrix over F_p. Vectors act on the left (v -> vM).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, int rows, int cols);
  /// Entries are reduced mod p.
  FpMatrix(int p, int rows, int cols, std::vector<std::int64_t> entries);

  static FpMatrix identity(int p, int n);
  static FpMatrix from_rows(int p, const std::vector<FpVector>& rows, int cols = -1);
  static FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);
  static FpMatrix hstack(const FpMatrix& left, const FpMatrix& right);
  /// diag(a, b)
  static FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b);

  int p() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set(int i, int j, std::int64_t v);
  FpVector row(int i) const;
  const std::vector<int>& data() const noexcept { return data_; }

  FpMatrix transpose() const;
  FpMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const FpMatrix& m);
  FpMatrix scaled(int s) const;
  FpMatrix operator-() const { return scaled(-1); }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  int rank() const;
  std::optional<FpMatrix> inverse() const;
  /// Throws ValidationError when singular.
  FpMatrix inverse_or_throw() const;

  /// x * M for a row vector x of length rows().
  FpVector apply(const FpVector& x) const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int p_ = 3;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

int mod_reduce(std::int64_t a, int p) noexcept;
int mod_inverse(int a, int p);
FpVector vec_add(const FpVector& a, const FpVector& b, int p);
FpVector vec_sub(const FpVector& a, const FpVector& b, int p);
FpVector vec_scale(const FpVector& a, int s, int p);
int dot(const FpVector& a, const FpVector& b, int p);
bool is_zero(const FpVector& v);

struct Rref {
  FpMatrix reduced;         ///< same shape as the input; zero rows at the bottom
  int rank = 0;
  std::vector<int> pivots;  ///< pivot column of each nonzero row, increasing
};

/// Strict reduced row echelon form: pivots equal 1, pivot columns are zero
/// outside their pivot row.
Rref rref(const FpMatrix& m);

/// rref together with an invertible E such that E * m == reduced.
std::pair<Rref, FpMatrix> rref_with_transform(const FpMatrix& m);

/// Rows spanning {x : a * x^T = 0}, returned in RREF.
FpMatrix right_nullspace(const FpMatrix& a);

/// Some x with a * x^T = b, free variables set to zero; nullopt when inconsistent.
std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b);

/// P invertible and d with P s P^T = diag(d), for symmetric s and odd p.
struct Congruence {
  FpMatrix transform;
  FpVector diagonal;
};
Congruence diagonalize_symmetric(const FpMatrix& s);

/// A subspace of F_p^ambient in canonical form: the basis is the nonzero part
/// of its RREF, so equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const FpMatrix& rows);
  static Subspace span(int p, int ambient, const std::vector<FpVector>& vectors);
  static Subspace zero(int p, int ambient);
  static Subspace full(int p, int ambient);
  /// span of the standard basis vectors e_i, i in indices (0-based).
  static Subspace coordinate(int p, int ambient, const std::vector<int>& indices);

  int p() const noexcept { return basis_.p(); }
  int ambient() const noexcept { return ambient_; }
  int dim() const noexcept { return basis_.rows(); }
  const FpMatrix& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  bool contains(const FpVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the stored basis, if v is a member.
  std::optional<FpVector> coordinates(const FpVector& v) const;
  /// The vector with the given coefficients in the stored basis.
  FpVector combine(const FpVector& coefficients) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(int ambient, FpMatrix basis, std::vector<int> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  int ambient_ = 0;
  FpMatrix basis_;
  std::vector<int> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
/// Intersection via the left kernel of the stacked bases [A; -B].
Subspace intersect(const Subspace& a, const Subspace& b);

struct KernelImage {
  Subspace kernel;  ///< {x : x m = 0}, inside F_p^rows
  Subspace image;   ///< row space of m, inside F_p^cols
};
KernelImage kernel_image(const FpMatrix& m);

/// L° = {y : sum_j x_j y_j = 0 for all x in L}.
Subspace annihilator(const Subspace& l);

/// {v : r G v^T = 0 for all r in R} for a bilinear form with Gram matrix G.
Subspace orthocomplement(const Subspace& r, const FpMatrix& gram);

/// Image of the subspace under v -> v m.
Subspace image_under(const Subspace& s, const FpMatrix& m);

/// Keeps coordinates [first, first + count) of every vector.
Subspace project(const Subspace& s, int first, int count);

/// Q(x) = sum_{i <= j} c_ij x_i x_j with upper-triangular storage.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(int p, int dim);
  /// Accepts any square matrix; entries below the diagonal are folded into
  /// their upper partners, which leaves Q(x) = sum_ij m_ij x_i x_j unchanged.
  explicit QuadraticForm(const FpMatrix& coeffs);

  /// Q(x) = 1/2 x b x^T for symmetric b.
  static QuadraticForm from_symmetric_half(const FpMatrix& b);
  /// Q(x, y) = first(x) + x cross y^T + second(y).
  static QuadraticForm join(const QuadraticForm& first, const FpMatrix& cross,
                            const QuadraticForm& second);

  int p() const noexcept { return coeffs_.p(); }
  int dim() const noexcept { return coeffs_.rows(); }
  const FpMatrix& coeffs() const noexcept { return coeffs_; }
  int coeff(int i, int j) const { return coeffs_(i, j); }

  int eval(const FpVector& x) const;
  /// Gram matrix of B(x,y) = Q(x+y) - Q(x) - Q(y).
  FpMatrix bilinear() const;
  /// t -> Q(t l) for l of shape k x dim.
  QuadraticForm pullback(const FpMatrix& l) const;
  /// Q on the coordinates of the stored RREF basis of s.
  QuadraticForm restrict(const Subspace& s) const;

  /// Q(x, y) = Q(x, 0) + sum_j x_j l_j(y) + Q(0, y) for x the first dim_first coordinates.
  struct Split;
  Split split(int dim_first) const;

  bool is_zero() const { return coeffs_.is_zero(); }
  friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b);
  QuadraticForm scaled(int s) const;
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  FpMatrix coeffs_;
};

struct QuadraticForm::Split {
  QuadraticForm first;   ///< Q(x, 0)
  FpMatrix cross;        ///< dim_first x (dim - dim_first); row j holds l_j
  QuadraticForm second;  ///< Q(0, y)
};

}  // namespace weilrep
