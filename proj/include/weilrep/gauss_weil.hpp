#pragma once

#include <complex>
#include <limits>

#include "weilrep/linalg.hpp"
#include "weilrep/operator.hpp"
#include "weilrep/random.hpp"
#include "weilrep/relations.hpp"

namespace weilrep {

/// Symbolic data of a Gaussian operator l^2(F_p^mu) -> l^2(F_p^nu):
///
///   (G f)(x) = scale * sum_{y : (y, x) in H} Exp(Q(y, x)) f(y).
///
/// H and Q live on F_p^mu + F_p^nu with coordinates ordered (input y | output x).
/// Only the values of Q on H matter.
struct GaussianData {
  int p = 3;
  int mu = 0;
  int nu = 0;
  Subspace h;
  QuadraticForm q;
  std::complex<double> scale{1.0, 0.0};

  /// Throws DimensionError on inconsistent dimensions or moduli.
  void validate() const;
};

/// i^i_power * p^(sqrt_p_power / 2).
struct ExactScalar {
  int i_power = 0;
  int sqrt_p_power = 0;
  std::complex<double> value(int p) const;
};

/// F(y) = sum_x Exp(Q(x, y)) equals c Exp(R(y)) on Z and vanishes off Z.
struct GaussSumResult {
  Subspace z;
  ExactScalar c;
  QuadraticForm r;
  std::complex<double> c_value(int p) const { return c.value(p); }
  /// F(y) from the closed form.
  std::complex<double> evaluate(const FpVector& y) const;
};

ComplexOperator gaussian_matrix(const GaussianData& g);

/// Closed form of F(y) = sum_{x in F_p^dim_x} Exp(Q(x, y)) for Q on
/// F_p^dim_x + F_p^dim_y. The pure-x part is diagonalized by congruence;
/// nonzero diagonal entries contribute one-dimensional Gauss sums after
/// completing the square, zero entries turn their linear terms into the
/// equations cutting out Z.
GaussSumResult gauss_sum_closed_form(const QuadraticForm& q, int dim_x);

/// Data whose matrix is gaussian_matrix(a) * gaussian_matrix(b) (b applied first).
GaussianData gaussian_compose(const GaussianData& a, const GaussianData& b);

/// Random well-formed data: H a random subspace, Q random, scale 1.
GaussianData random_gaussian(int p, int mu, int nu, Rng& rng);

struct IntertwiningSolution {
  ComplexOperator op;       ///< canonically normalized
  int nullity = 0;          ///< singular values below 1e-10 * largest
  double largest = 0.0;     ///< largest singular value of the system
  double smallest = 0.0;    ///< the null singular value
  double next = 0.0;        ///< the next singular value up
  double gap() const {
    return smallest > 0.0 ? next / smallest : std::numeric_limits<double>::infinity();
  }
};

/// Solves a(w) X = X a(v) over a basis of T and reports the spectrum of the
/// system. Throws ValidationError unless T is perfect Lagrangian and
/// NullityError unless the solution space is exactly one-dimensional with
/// the next singular value at least 1e-6 * largest.
IntertwiningSolution solve_intertwining(const LinearRelation& t);

/// W(T) in the canonical gauge.
ComplexOperator weil_of_relation(const LinearRelation& t);

/// c with W(S) W(T) = c W(ST).
std::complex<double> relation_cocycle(const LinearRelation& s, const LinearRelation& t,
                                      double tol = kDefaultOperatorTolerance);

/// W(T)* proportional to W(T^box).
bool adjoint_law_check(const LinearRelation& t, double tol = kDefaultOperatorTolerance);

/// The perfect Lagrangian T with a(w) G = G a(v) for (v, w) in T.
LinearRelation relation_from_gaussian(const GaussianData& g);

/// Reads (H, Q, scale) off an operator whose nonzero entries have constant
/// modulus, are supported on a subspace and have phases in the p-th roots of
/// unity relative to the (0, 0) entry. Throws NotGaussianError otherwise.
GaussianData gaussian_from_operator(const ComplexOperator& w);

}  // namespace weilrep
