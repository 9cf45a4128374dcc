#include "weilrep/operator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

namespace weilrep {

std::int64_t point_count(int p, int n, std::int64_t max_points) {
  if (n < 0) throw DimensionError("negative dimension");
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= p;
    if (total > max_points)
      throw ValidationError("operator size p^n exceeds the cap of " + std::to_string(max_points));
  }
  return total;
}

std::int64_t point_index(const FpVector& x, int p) {
  std::int64_t idx = 0;
  for (int v : x) idx = idx * p + v;
  return idx;
}

FpVector point_at(std::int64_t index, int p, int n) {
  FpVector x(n);
  for (int i = n - 1; i >= 0; --i) {
    x[i] = static_cast<int>(index % p);
    index /= p;
  }
  return x;
}

ComplexOperator::ComplexOperator(int p, int n_out, int n_in)
    : p_(p),
      n_out_(n_out),
      n_in_(n_in),
      m_(Eigen::MatrixXcd::Zero(point_count(p, n_out), point_count(p, n_in))) {}

ComplexOperator::ComplexOperator(int p, int n_out, int n_in, Eigen::MatrixXcd entries)
    : p_(p), n_out_(n_out), n_in_(n_in), m_(std::move(entries)) {
  if (m_.rows() != point_count(p, n_out) || m_.cols() != point_count(p, n_in))
    throw DimensionError("operator entries do not match p^n_out x p^n_in");
  if (!m_.allFinite()) throw ValidationError("operator has non-finite entries");
}

ComplexOperator ComplexOperator::identity(int p, int n) {
  const auto size = point_count(p, n);
  return {p, n, n, Eigen::MatrixXcd::Identity(size, size)};
}

ComplexOperator ComplexOperator::adjoint() const { return {p_, n_in_, n_out_, m_.adjoint()}; }

double ComplexOperator::spectral_norm() const {
  if (m_.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m_);
  return svd.singularValues()(0);
}

ComplexOperator operator*(const ComplexOperator& a, const ComplexOperator& b) {
  if (a.p_ != b.p_ || a.n_in_ != b.n_out_) throw DimensionError("operator product: shapes do not chain");
  return {a.p_, a.n_out_, b.n_in_, a.m_ * b.m_};
}

ComplexOperator operator*(std::complex<double> s, const ComplexOperator& a) {
  return {a.p_, a.n_out_, a.n_in_, s * a.m_};
}

ComplexOperator operator-(const ComplexOperator& a, const ComplexOperator& b) {
  if (a.p_ != b.p_ || a.n_in_ != b.n_in_ || a.n_out_ != b.n_out_)
    throw DimensionError("operator difference: shapes differ");
  return {a.p_, a.n_out_, a.n_in_, a.m_ - b.m_};
}

std::int64_t first_significant_entry(const ComplexOperator& a, double rel_floor) {
  const Eigen::MatrixXcd& m = a.matrix();
  double largest = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) largest = std::max(largest, std::abs(m(i, j)));
  if (largest == 0.0) return -1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > rel_floor * largest) return i * m.cols() + j;
  return -1;
}

ComplexOperator normalize(const ComplexOperator& a) {
  const std::int64_t first = first_significant_entry(a);
  if (first < 0) throw ZeroOperatorError("cannot normalize the zero operator");
  const auto cols = a.matrix().cols();
  const std::complex<double> e = a.matrix()(first / cols, first % cols);
  const std::complex<double> phase = std::conj(e) / std::abs(e);
  return (phase / a.spectral_norm()) * a;
}

namespace {

std::complex<double> optimal_ratio(const ComplexOperator& a, const ComplexOperator& b) {
  if (a.p() != b.p() || a.n_in() != b.n_in() || a.n_out() != b.n_out())
    throw DimensionError("scalar_ratio: shapes differ");
  const double bb = b.matrix().squaredNorm();
  if (bb == 0.0) throw ZeroOperatorError("scalar_ratio: reference operator is zero");
  // <B, A> / <B, B> with the Frobenius inner product
  return (b.matrix().adjoint() * a.matrix()).trace() / bb;
}

}  // namespace

double proportionality_residual(const ComplexOperator& a, const ComplexOperator& b) {
  const auto c = optimal_ratio(a, b);
  const double na = a.frobenius_norm();
  if (na == 0.0) return 0.0;
  return (a.matrix() - c * b.matrix()).norm() / na;
}

std::complex<double> scalar_ratio(const ComplexOperator& a, const ComplexOperator& b, double tol) {
  const auto c = optimal_ratio(a, b);
  const double na = a.frobenius_norm();
  const double residual = (a.matrix() - c * b.matrix()).norm();
  if (residual > tol * na)
    throw NotProportionalError("operators are not proportional: relative residual " +
                               std::to_string(residual / na));
  return c;
}

namespace {

struct Monomial {
  std::vector<Eigen::Index> target;  // row i has its nonzero in column target[i]
  std::vector<std::complex<double>> value;
};

bool as_monomial(const Eigen::MatrixXcd& m, Monomial& out) {
  const Eigen::Index n = m.rows();
  out.target.assign(n, -1);
  out.value.assign(n, 0.0);
  std::vector<char> used(n, 0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m(i, j) == 0.0) continue;
      if (out.target[i] >= 0 || used[j]) return false;
      out.target[i] = j;
      out.value[i] = m(i, j);
      used[j] = 1;
    }
  for (Eigen::Index i = 0; i < n; ++i)
    if (out.target[i] < 0) return false;
  return true;
}

// XA = AX for A = (row i -> column s(i), value d_i) reads
// X[s(i)][s(j)] = (d_j / d_i) X[i][j]; the commutant dimension is the number
// of orbits of matrix units on which these multipliers are consistent.
int monomial_commutant(const std::vector<Monomial>& gens, Eigen::Index n) {
  const Eigen::Index total = n * n;
  std::vector<std::complex<double>> value(total);
  std::vector<char> seen(total, 0);
  std::vector<Eigen::Index> stack;
  int dimension = 0;
  for (Eigen::Index root = 0; root < total; ++root) {
    if (seen[root]) continue;
    bool consistent = true;
    seen[root] = 1;
    value[root] = 1.0;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Eigen::Index cur = stack.back();
      stack.pop_back();
      const Eigen::Index i = cur / n, j = cur % n;
      for (const auto& g : gens) {
        const Eigen::Index next = g.target[i] * n + g.target[j];
        const std::complex<double> v = value[cur] * g.value[j] / g.value[i];
        if (!seen[next]) {
          seen[next] = 1;
          value[next] = v;
          stack.push_back(next);
        } else if (std::abs(value[next] - v) > 1e-9 * std::abs(v)) {
          consistent = false;
        }
      }
    }
    if (consistent) ++dimension;
  }
  return dimension;
}

void check_square_family(const std::vector<ComplexOperator>& ops) {
  for (const auto& a : ops) {
    if (a.matrix().rows() != a.matrix().cols())
      throw DimensionError("commutant: operators must be square");
    if (a.matrix().rows() != ops.front().matrix().rows())
      throw DimensionError("commutant: operators must share one shape");
  }
}

}  // namespace

int commutant_dimension_dense(const std::vector<ComplexOperator>& ops) {
  if (ops.empty()) throw ValidationError("commutant: empty operator family");
  check_square_family(ops);
  const Eigen::Index n = ops.front().matrix().rows();
  const Eigen::Index unknowns = n * n;
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(unknowns * static_cast<Eigen::Index>(ops.size()), unknowns);
  // unknown X(i, j) sits at column j n + i; equation (i, j) is (XA - AX)(i, j) = 0
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const Eigen::MatrixXcd& a = ops[k].matrix();
    const Eigen::Index r0 = static_cast<Eigen::Index>(k) * unknowns;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index l = 0; l < n; ++l) {
          system(r0 + j * n + i, l * n + i) += a(l, j);
          system(r0 + j * n + i, j * n + l) -= a(i, l);
        }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(system);
  const auto& s = svd.singularValues();
  const double largest = s.size() ? s(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-10 * largest && largest > 0.0) ++rank;
  return static_cast<int>(unknowns - rank);
}

int commutant_dimension(const std::vector<ComplexOperator>& ops) {
  if (ops.empty()) throw ValidationError("commutant: empty operator family");
  check_square_family(ops);
  std::vector<Monomial> gens(ops.size());
  bool monomial = true;
  for (std::size_t k = 0; k < ops.size() && monomial; ++k) monomial = as_monomial(ops[k].matrix(), gens[k]);
  if (monomial) return monomial_commutant(gens, ops.front().matrix().rows());
  return commutant_dimension_dense(ops);
}

}  // namespace weilrep
