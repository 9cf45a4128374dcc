#include "weilrep/linalg.hpp"

#include <algorithm>
#include <string>

namespace weilrep {

int mod_reduce(std::int64_t a, int p) noexcept {
  std::int64_t r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int mod_inverse(int a, int p) {
  a = mod_reduce(a, p);
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
  std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return mod_reduce(t0, p);
}

FpVector vec_add(const FpVector& a, const FpVector& b, int p) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(std::int64_t{a[i]} + b[i], p);
  return r;
}

FpVector vec_sub(const FpVector& a, const FpVector& b, int p) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(std::int64_t{a[i]} - b[i], p);
  return r;
}

FpVector vec_scale(const FpVector& a, int s, int p) {
  FpVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(std::int64_t{a[i]} * s, p);
  return r;
}

int dot(const FpVector& a, const FpVector& b, int p) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::int64_t{a[i]} * b[i];
  return mod_reduce(acc, p);
}

bool is_zero(const FpVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// --- FpMatrix -------------------------------------------------------------

FpMatrix::FpMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

FpMatrix::FpMatrix(int p, int rows, int cols, std::vector<std::int64_t> entries)
    : FpMatrix(p, rows, cols) {
  if (entries.size() != data_.size())
    throw DimensionError("entry count does not match " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = mod_reduce(entries[i], p);
}

FpMatrix FpMatrix::identity(int p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(int p, const std::vector<FpVector>& rows, int cols) {
  if (cols < 0) {
    if (rows.empty()) throw DimensionError("cannot infer column count of an empty row list");
    cols = static_cast<int>(rows.front().size());
  }
  FpMatrix m(p, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw DimensionError("ragged row list");
    for (int j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

FpMatrix FpMatrix::vstack(const FpMatrix& top, const FpMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionError("vstack: column mismatch");
  FpMatrix m(top.p_, top.rows_ + bottom.rows_, top.cols_);
  m.set_block(0, 0, top);
  m.set_block(top.rows_, 0, bottom);
  return m;
}

FpMatrix FpMatrix::hstack(const FpMatrix& left, const FpMatrix& right) {
  if (left.rows_ != right.rows_) throw DimensionError("hstack: row mismatch");
  FpMatrix m(left.p_, left.rows_, left.cols_ + right.cols_);
  m.set_block(0, 0, left);
  m.set_block(0, left.cols_, right);
  return m;
}

FpMatrix FpMatrix::block_diag(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix m(a.p_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

void FpMatrix::set(int i, int j, std::int64_t v) {
  data_[static_cast<std::size_t>(i) * cols_ + j] = mod_reduce(v, p_);
}

FpVector FpMatrix::row(int i) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_;
  return FpVector(first, first + cols_);
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.data_[static_cast<std::size_t>(j) * rows_ + i] = (*this)(i, j);
  return t;
}

FpMatrix FpMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw DimensionError("block out of range");
  FpMatrix b(p_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b.data_[static_cast<std::size_t>(i) * nc + j] = (*this)(r0 + i, c0 + j);
  return b;
}

void FpMatrix::set_block(int r0, int c0, const FpMatrix& m) {
  if (r0 < 0 || c0 < 0 || r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
    throw DimensionError("set_block out of range");
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) data_[static_cast<std::size_t>(r0 + i) * cols_ + c0 + j] = m(i, j);
}

FpMatrix FpMatrix::scaled(int s) const {
  FpMatrix r(*this);
  for (auto& x : r.data_) x = mod_reduce(std::int64_t{x} * s, p_);
  return r;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

bool FpMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

int FpMatrix::rank() const { return rref(*this).rank; }

std::optional<FpMatrix> FpMatrix::inverse() const {
  if (!is_square()) return std::nullopt;
  auto [r, e] = rref_with_transform(*this);
  if (r.rank != rows_) return std::nullopt;
  return e;
}

FpMatrix FpMatrix::inverse_or_throw() const {
  auto inv = inverse();
  if (!inv) throw ValidationError("matrix is not invertible");
  return *inv;
}

FpVector FpMatrix::apply(const FpVector& x) const {
  if (static_cast<int>(x.size()) != rows_) throw DimensionError("vector-matrix length mismatch");
  std::vector<std::int64_t> acc(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < cols_; ++j) acc[j] += std::int64_t{x[i]} * (*this)(i, j);
  }
  FpVector r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = mod_reduce(acc[j], p_);
  return r;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimension mismatch");
  if (a.p_ != b.p_) throw ValidationError("matrix product: moduli differ");
  FpMatrix c(a.p_, a.rows_, b.cols_);
  std::vector<std::int64_t> acc(b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < a.cols_; ++k) {
      const int aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) acc[j] += std::int64_t{aik} * b(k, j);
    }
    for (int j = 0; j < b.cols_; ++j) c.set(i, j, acc[j]);
  }
  return c;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
  FpMatrix c(a);
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = mod_reduce(std::int64_t{a.data_[i]} + b.data_[i], a.p_);
  return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) { return a + (-b); }

// --- elimination -----------------------------------------------------------

namespace {

// Gauss-Jordan on m, mirroring every row operation on `shadow` when given.
Rref eliminate(FpMatrix m, FpMatrix* shadow) {
  const int p = m.p();
  Rref out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    auto swap_rows = [](FpMatrix& a, int r1, int r2) {
      if (r1 == r2) return;
      for (int j = 0; j < a.cols(); ++j) {
        int t = a(r1, j);
        a.set(r1, j, a(r2, j));
        a.set(r2, j, t);
      }
    };
    auto scale_row = [](FpMatrix& a, int r, int s) {
      for (int j = 0; j < a.cols(); ++j) a.set(r, j, std::int64_t{a(r, j)} * s);
    };
    // row r -= f * row src
    auto axpy_row = [](FpMatrix& a, int r, int src, int f) {
      for (int j = 0; j < a.cols(); ++j) a.set(r, j, a(r, j) - std::int64_t{f} * a(src, j));
    };
    swap_rows(m, row, pivot);
    if (shadow) swap_rows(*shadow, row, pivot);
    const int s = mod_inverse(m(row, col), p);
    scale_row(m, row, s);
    if (shadow) scale_row(*shadow, row, s);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const int f = m(i, col);
      axpy_row(m, i, row, f);
      if (shadow) axpy_row(*shadow, i, row, f);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

}  // namespace

Rref rref(const FpMatrix& m) { return eliminate(m, nullptr); }

std::pair<Rref, FpMatrix> rref_with_transform(const FpMatrix& m) {
  FpMatrix e = FpMatrix::identity(m.p(), m.rows());
  Rref r = eliminate(m, &e);
  return {std::move(r), std::move(e)};
}

FpMatrix right_nullspace(const FpMatrix& a) {
  const int p = a.p();
  const Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<FpVector> vectors;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector x(a.cols(), 0);
    x[f] = 1;
    for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = mod_reduce(-std::int64_t{r.reduced(i, f)}, p);
    vectors.push_back(std::move(x));
  }
  if (vectors.empty()) return FpMatrix(p, 0, a.cols());
  return rref(FpMatrix::from_rows(p, vectors, a.cols())).reduced;
}

std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionError("solve: right-hand side length");
  const int p = a.p();
  FpMatrix aug(p, a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (int i = 0; i < a.rows(); ++i) aug.set(i, a.cols(), b[i]);
  const Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  FpVector x(a.cols(), 0);
  for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

Congruence diagonalize_symmetric(const FpMatrix& s) {
  if (!s.is_square() || !s.is_symmetric()) throw ValidationError("diagonalize_symmetric: matrix must be symmetric");
  const int n = s.rows(), p = s.p();
  FpMatrix a = s;
  FpMatrix t = FpMatrix::identity(p, n);
  // row i += f row j together with column i += f column j
  const auto add = [&](int i, int j, int f) {
    for (int c = 0; c < n; ++c) {
      a.set(i, c, std::int64_t{a(i, c)} + std::int64_t{f} * a(j, c));
      t.set(i, c, std::int64_t{t(i, c)} + std::int64_t{f} * t(j, c));
    }
    for (int r = 0; r < n; ++r) a.set(r, i, std::int64_t{a(r, i)} + std::int64_t{f} * a(r, j));
  };
  const auto swap = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) {
      const int ai = a(i, c), ti = t(i, c);
      a.set(i, c, a(j, c));
      a.set(j, c, ai);
      t.set(i, c, t(j, c));
      t.set(j, c, ti);
    }
    for (int r = 0; r < n; ++r) {
      const int ai = a(r, i);
      a.set(r, i, a(r, j));
      a.set(r, j, ai);
    }
  };
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n && pivot < 0; ++i)
      if (a(i, i) != 0) pivot = i;
    if (pivot < 0) {
      for (int i = k; i < n && pivot < 0; ++i)
        for (int j = k; j < n && pivot < 0; ++j)
          if (i != j && a(i, j) != 0) {
            add(i, j, 1);  // new diagonal entry 2 a_ij
            pivot = i;
          }
    }
    if (pivot < 0) break;
    swap(k, pivot);
    const int inv = mod_inverse(a(k, k), p);
    for (int l = k + 1; l < n; ++l)
      if (a(l, k) != 0) add(l, k, mod_reduce(-std::int64_t{a(l, k)} * inv, p));
  }
  FpVector d(n);
  for (int i = 0; i < n; ++i) d[i] = a(i, i);
  return {t, d};
}

// --- Subspace --------------------------------------------------------------

Subspace Subspace::span(const FpMatrix& rows) {
  Rref r = rref(rows);
  FpMatrix basis = r.reduced.block(0, 0, r.rank, rows.cols());
  return Subspace(rows.cols(), std::move(basis), std::move(r.pivots));
}

Subspace Subspace::span(int p, int ambient, const std::vector<FpVector>& vectors) {
  if (vectors.empty()) return zero(p, ambient);
  return span(FpMatrix::from_rows(p, vectors, ambient));
}

Subspace Subspace::zero(int p, int ambient) { return Subspace(ambient, FpMatrix(p, 0, ambient), {}); }

Subspace Subspace::full(int p, int ambient) { return span(FpMatrix::identity(p, ambient)); }

Subspace Subspace::coordinate(int p, int ambient, const std::vector<int>& indices) {
  FpMatrix m(p, static_cast<int>(indices.size()), ambient);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 0 || indices[k] >= ambient) throw DimensionError("coordinate index out of range");
    m.set(static_cast<int>(k), indices[k], 1);
  }
  return span(m);
}

std::optional<FpVector> Subspace::coordinates(const FpVector& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DimensionError("member: ambient dimension mismatch");
  FpVector coeffs(dim());
  for (int i = 0; i < dim(); ++i) coeffs[i] = v[pivots_[i]];
  if (combine(coeffs) != v) return std::nullopt;
  return coeffs;
}

FpVector Subspace::combine(const FpVector& coefficients) const {
  if (static_cast<int>(coefficients.size()) != dim()) throw DimensionError("combine: coefficient count");
  if (dim() == 0) return FpVector(ambient_, 0);
  return basis_.apply(coefficients);
}

bool Subspace::contains(const FpVector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("contains: ambient dimension mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("sum: ambient dimension mismatch");
  return Subspace::span(FpMatrix::vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("intersect: ambient dimension mismatch");
  const int p = a.p();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(p, a.ambient());
  // (alpha, beta) with alpha A = beta B  <=>  (alpha, beta) [A; -B] = 0
  const FpMatrix stacked = FpMatrix::vstack(a.basis(), -b.basis());
  const FpMatrix left_kernel = right_nullspace(stacked.transpose());
  if (left_kernel.rows() == 0) return Subspace::zero(p, a.ambient());
  const FpMatrix alphas = left_kernel.block(0, 0, left_kernel.rows(), a.dim());
  return Subspace::span(alphas * a.basis());
}

KernelImage kernel_image(const FpMatrix& m) {
  const FpMatrix ker = right_nullspace(m.transpose());
  return {Subspace::span(ker), Subspace::span(m)};
}

Subspace annihilator(const Subspace& l) {
  if (l.dim() == 0) return Subspace::full(l.p(), l.ambient());
  return Subspace::span(right_nullspace(l.basis()));
}

Subspace orthocomplement(const Subspace& r, const FpMatrix& gram) {
  if (gram.rows() != r.ambient() || gram.cols() != r.ambient())
    throw DimensionError("orthocomplement: Gram matrix shape");
  if (r.dim() == 0) return Subspace::full(r.p(), r.ambient());
  return Subspace::span(right_nullspace(r.basis() * gram));
}

Subspace image_under(const Subspace& s, const FpMatrix& m) {
  if (m.rows() != s.ambient()) throw DimensionError("image_under: shape mismatch");
  if (s.dim() == 0) return Subspace::zero(m.p(), m.cols());
  return Subspace::span(s.basis() * m);
}

Subspace project(const Subspace& s, int first, int count) {
  if (s.dim() == 0) return Subspace::zero(s.p(), count);
  return Subspace::span(s.basis().block(0, first, s.dim(), count));
}

// --- QuadraticForm ---------------------------------------------------------

QuadraticForm::QuadraticForm(int p, int dim) : coeffs_(p, dim, dim) {}

QuadraticForm::QuadraticForm(const FpMatrix& coeffs) : coeffs_(coeffs) {
  if (!coeffs.is_square()) throw DimensionError("quadratic form coefficients must be square");
  for (int i = 0; i < coeffs.rows(); ++i)
    for (int j = 0; j < i; ++j) {
      coeffs_.set(j, i, std::int64_t{coeffs_(j, i)} + coeffs_(i, j));
      coeffs_.set(i, j, 0);
    }
}

QuadraticForm QuadraticForm::from_symmetric_half(const FpMatrix& b) {
  if (!b.is_symmetric()) throw ValidationError("from_symmetric_half: matrix is not symmetric");
  const int p = b.p();
  const int half = (p + 1) / 2;
  FpMatrix c(p, b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i) {
    c.set(i, i, std::int64_t{b(i, i)} * half);
    for (int j = i + 1; j < b.cols(); ++j) c.set(i, j, b(i, j));
  }
  return QuadraticForm(c);
}

QuadraticForm QuadraticForm::join(const QuadraticForm& first, const FpMatrix& cross,
                                  const QuadraticForm& second) {
  const int a = first.dim(), b = second.dim();
  if (cross.rows() != a || cross.cols() != b) throw DimensionError("join: cross block shape");
  FpMatrix c(first.p(), a + b, a + b);
  c.set_block(0, 0, first.coeffs_);
  c.set_block(0, a, cross);
  c.set_block(a, a, second.coeffs_);
  return QuadraticForm(c);
}

int QuadraticForm::eval(const FpVector& x) const {
  if (static_cast<int>(x.size()) != dim()) throw DimensionError("quadratic form: argument length");
  std::int64_t acc = 0;
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = i; j < dim(); ++j) row += std::int64_t{coeffs_(i, j)} * x[j];
    acc += (row % p()) * x[i];
  }
  return mod_reduce(acc, p());
}

FpMatrix QuadraticForm::bilinear() const { return coeffs_ + coeffs_.transpose(); }

QuadraticForm QuadraticForm::pullback(const FpMatrix& l) const {
  if (l.cols() != dim()) throw DimensionError("pullback: map shape");
  return QuadraticForm(l * coeffs_ * l.transpose());
}

QuadraticForm QuadraticForm::restrict(const Subspace& s) const {
  if (s.ambient() != dim()) throw DimensionError("restrict: ambient dimension mismatch");
  if (s.dim() == 0) return QuadraticForm(p(), 0);
  return pullback(s.basis());
}

QuadraticForm::Split QuadraticForm::split(int dim_first) const {
  if (dim_first < 0 || dim_first > dim()) throw DimensionError("split: bad partition");
  const int b = dim() - dim_first;
  return {QuadraticForm(coeffs_.block(0, 0, dim_first, dim_first)),
          coeffs_.block(0, dim_first, dim_first, b),
          QuadraticForm(coeffs_.block(dim_first, dim_first, b, b))};
}

QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
  return QuadraticForm(a.coeffs_ + b.coeffs_);
}

QuadraticForm QuadraticForm::scaled(int s) const { return QuadraticForm(coeffs_.scaled(s)); }

}  // namespace weilrep
