#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "weilrep/field.hpp"
#include "weilrep/operator.hpp"
#include "weilrep/symplectic.hpp"

namespace weilrep {

/// (v; s) in the Heisenberg group of V_{2n}.
struct HeisenbergElement {
  FpVector v;
  int s = 0;
};

/// (v;s) * (w;t) = (v + w; s + t + 1/2 {v, w}).
HeisenbergElement heisenberg_multiply(const HeisenbergElement& a, const HeisenbergElement& b,
                                      const SymplecticSpace& space);

/// a(v) f(x) = f(x + v^d) Exp(x . v^c + 1/2 v^d . v^c).
ComplexOperator heisenberg_op(const FpVector& v, const SymplecticSpace& space);

/// The scalar c with a(v) a(w) = c a(v + w), read off the matrices.
std::complex<double> heisenberg_product_check(const FpVector& v, const FpVector& w,
                                              const SymplecticSpace& space,
                                              double tol = kDefaultOperatorTolerance);

/// H(a): f(x) -> f(xa). N_+(b): multiplication by Exp(1/2 x b x^T).
/// J_k: (Ff)(x) = p^{-1/2} sum_t Exp(x_k t) f(x with x_k = t).
ComplexOperator weil_generator(const GeneratorLetter& letter, const SymplecticSpace& space);

/// Product of weil_generator over the letters, left to right. Not normalized.
ComplexOperator weil_of_word(const GeneratorWord& word, const SymplecticSpace& space);

/// max over basis vectors v of |W a(vg) - a(v) W|_F. For unitary W this equals
/// the residual of a(vg) = W^{-1} a(v) W.
double intertwining_residual(const ComplexOperator& w, const SymplecticElement& g);

/// W(g), canonically normalized, with a(vg) = W^{-1} a(v) W. Throws
/// ResidualError when the intertwining residual exceeds tol.
ComplexOperator weil_of_group(const SymplecticElement& g, double tol = 1e-9);

/// c with W(g1) W(g2) = c W(g1 g2) in the canonical gauge.
std::complex<double> group_cocycle(const SymplecticElement& g1, const SymplecticElement& g2,
                                   double tol = kDefaultOperatorTolerance);

/// sigma_B phi(x) = phi(xB) and sigma*_B psi(y) = psi(B^{-1} y) on im B, else 0,
/// for injective B of shape mu x nu.
std::pair<ComplexOperator, ComplexOperator> sigma_ops(const FpMatrix& b);

/// a(v) for every vector of the standard basis of V_{2n}.
std::vector<ComplexOperator> heisenberg_basis_ops(const SymplecticSpace& space);

}  // namespace weilrep
