#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "weilrep/errors.hpp"
#include "weilrep/linalg.hpp"

namespace weilrep {

inline constexpr double kDefaultOperatorTolerance = 1e-8;

/// Number of points of F_p^n. Throws ValidationError past max_points.
std::int64_t point_count(int p, int n, std::int64_t max_points = 1'000'000);

/// Lexicographic index of x in F_p^n, x_1 most significant.
std::int64_t point_index(const FpVector& x, int p);
FpVector point_at(std::int64_t index, int p, int n);

/// A linear map l^2(F_p^n_in) -> l^2(F_p^n_out) as a dense p^n_out x p^n_in
/// matrix. Row x, column y holds the coefficient of f(y) in (Af)(x).
class ComplexOperator {
 public:
  ComplexOperator() = default;
  ComplexOperator(int p, int n_out, int n_in);
  ComplexOperator(int p, int n_out, int n_in, Eigen::MatrixXcd entries);

  static ComplexOperator identity(int p, int n);

  int p() const noexcept { return p_; }
  int n_out() const noexcept { return n_out_; }
  int n_in() const noexcept { return n_in_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  Eigen::MatrixXcd& matrix() noexcept { return m_; }

  std::complex<double> operator()(std::int64_t row, std::int64_t col) const { return m_(row, col); }

  ComplexOperator adjoint() const;
  double frobenius_norm() const { return m_.norm(); }
  double spectral_norm() const;

  friend ComplexOperator operator*(const ComplexOperator& a, const ComplexOperator& b);
  friend ComplexOperator operator*(std::complex<double> s, const ComplexOperator& a);
  friend ComplexOperator operator-(const ComplexOperator& a, const ComplexOperator& b);

 private:
  int p_ = 3;
  int n_out_ = 0;
  int n_in_ = 0;
  Eigen::MatrixXcd m_;
};

/// Index of the first entry (row-major) whose modulus exceeds rel_floor
/// times the largest modulus; -1 for the zero operator.
std::int64_t first_significant_entry(const ComplexOperator& a, double rel_floor = 1e-6);

/// Canonical representative of the ray through a: spectral norm 1 and the
/// first significant entry real positive. Throws ZeroOperatorError for 0.
ComplexOperator normalize(const ComplexOperator& a);

/// The c minimizing |A - cB|_F. Throws ZeroOperatorError when B = 0 and
/// NotProportionalError when the residual exceeds tol |A|_F.
std::complex<double> scalar_ratio(const ComplexOperator& a, const ComplexOperator& b,
                                  double tol = kDefaultOperatorTolerance);

/// Relative residual |A - cB|_F / |A|_F at the optimal c (0 when A = 0).
double proportionality_residual(const ComplexOperator& a, const ComplexOperator& b);

/// dim {X : X a = a X for all a in ops}.
///
/// Monomial operators (one nonzero per row and column) are handled exactly
/// by following orbits of matrix units; anything else goes through the
/// singular values of the stacked Kronecker system.
int commutant_dimension(const std::vector<ComplexOperator>& ops);

/// The dense path of commutant_dimension, exposed for cross-checking.
int commutant_dimension_dense(const std::vector<ComplexOperator>& ops);

}  // namespace weilrep
