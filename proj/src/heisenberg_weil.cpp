#include "weilrep/heisenberg_weil.hpp"

#include <cmath>
#include <string>

namespace weilrep {

namespace {

void check_vector(const FpVector& v, const SymplecticSpace& space) {
  if (static_cast<int>(v.size()) != space.dim())
    throw DimensionError("vector length must be 2n = " + std::to_string(space.dim()));
}

FpVector unit(int dim, int i) {
  FpVector e(dim, 0);
  e[i] = 1;
  return e;
}

}  // namespace

HeisenbergElement heisenberg_multiply(const HeisenbergElement& a, const HeisenbergElement& b,
                                      const SymplecticSpace& space) {
  check_vector(a.v, space);
  check_vector(b.v, space);
  const PrimeField f(space.p());
  const int central = f.add(f.add(a.s, b.s), f.mul(f.half(), space.form(a.v, b.v)));
  return {vec_add(a.v, b.v, space.p()), central};
}

ComplexOperator heisenberg_op(const FpVector& v, const SymplecticSpace& space) {
  check_vector(v, space);
  const int p = space.p(), n = space.n();
  const PrimeField f(p);
  const FpVector vd(v.begin(), v.begin() + n), vc(v.begin() + n, v.end());
  const int constant = f.mul(f.half(), dot(vd, vc, p));
  ComplexOperator a(p, n, n);
  const auto size = point_count(p, n);
  for (std::int64_t row = 0; row < size; ++row) {
    const FpVector x = point_at(row, p, n);
    const auto col = point_index(vec_add(x, vd, p), p);
    a.matrix()(row, col) = f.character(f.add(dot(x, vc, p), constant));
  }
  return a;
}

std::complex<double> heisenberg_product_check(const FpVector& v, const FpVector& w,
                                              const SymplecticSpace& space, double tol) {
  return scalar_ratio(heisenberg_op(v, space) * heisenberg_op(w, space),
                      heisenberg_op(vec_add(v, w, space.p()), space), tol);
}

ComplexOperator weil_generator(const GeneratorLetter& letter, const SymplecticSpace& space) {
  make_generator(letter, space);  // validates the payload
  const int p = space.p(), n = space.n();
  const PrimeField f(p);
  const auto size = point_count(p, n);
  ComplexOperator w(p, n, n);
  if (const auto* h = std::get_if<HLetter>(&letter)) {
    for (std::int64_t row = 0; row < size; ++row)
      w.matrix()(row, point_index(h->a.apply(point_at(row, p, n)), p)) = 1.0;
  } else if (const auto* np = std::get_if<NplusLetter>(&letter)) {
    for (std::int64_t row = 0; row < size; ++row) {
      const FpVector x = point_at(row, p, n);
      w.matrix()(row, row) = f.character(f.mul(f.half(), dot(x, np->b.apply(x), p)));
    }
  } else {
    const int k = std::get<JLetter>(letter).k - 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::int64_t row = 0; row < size; ++row) {
      FpVector x = point_at(row, p, n);
      const int xk = x[k];
      for (int t = 0; t < p; ++t) {
        x[k] = t;
        w.matrix()(row, point_index(x, p)) = scale * f.character(f.mul(xk, t));
      }
    }
  }
  return w;
}

ComplexOperator weil_of_word(const GeneratorWord& word, const SymplecticSpace& space) {
  ComplexOperator w = ComplexOperator::identity(space.p(), space.n());
  for (const auto& letter : word.letters) w = w * weil_generator(letter, space);
  return w;
}

double intertwining_residual(const ComplexOperator& w, const SymplecticElement& g) {
  const SymplecticSpace& space = g.space();
  double worst = 0.0;
  for (int i = 0; i < space.dim(); ++i) {
    const FpVector v = unit(space.dim(), i);
    const ComplexOperator lhs = w * heisenberg_op(g.act(v), space);
    const ComplexOperator rhs = heisenberg_op(v, space) * w;
    worst = std::max(worst, (lhs - rhs).frobenius_norm());
  }
  return worst;
}

ComplexOperator weil_of_group(const SymplecticElement& g, double tol) {
  const ComplexOperator w = normalize(weil_of_word(decompose(g), g.space()));
  const double residual = intertwining_residual(w, g);
  if (residual > tol)
    throw ResidualError("W(g) fails the intertwining relation: residual " + std::to_string(residual));
  return w;
}

std::complex<double> group_cocycle(const SymplecticElement& g1, const SymplecticElement& g2,
                                   double tol) {
  if (!(g1.space() == g2.space())) throw DimensionError("group_cocycle: elements act on different spaces");
  return scalar_ratio(weil_of_group(g1) * weil_of_group(g2), weil_of_group(g1 * g2), tol);
}

std::pair<ComplexOperator, ComplexOperator> sigma_ops(const FpMatrix& b) {
  const int p = b.p(), mu = b.rows(), nu = b.cols();
  if (b.rank() != mu) throw ValidationError("sigma_ops: B must be injective (rank mu)");
  ComplexOperator sigma(p, mu, nu), sigma_star(p, nu, mu);
  const auto size = point_count(p, mu);
  for (std::int64_t i = 0; i < size; ++i) {
    const auto j = point_index(b.apply(point_at(i, p, mu)), p);
    sigma.matrix()(i, j) = 1.0;
    sigma_star.matrix()(j, i) = 1.0;
  }
  return {sigma, sigma_star};
}

std::vector<ComplexOperator> heisenberg_basis_ops(const SymplecticSpace& space) {
  std::vector<ComplexOperator> ops;
  for (int i = 0; i < space.dim(); ++i) ops.push_back(heisenberg_op(unit(space.dim(), i), space));
  return ops;
}

}  // namespace weilrep
