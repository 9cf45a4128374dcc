#include "weilrep/gauss_weil.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/SVD>

#include "weilrep/field.hpp"
#include "weilrep/heisenberg_weil.hpp"

namespace weilrep {

namespace {

constexpr std::int64_t kMaxIntertwiningUnknowns = 4096;

// total x count matrix picking coordinates [first, first + count).
FpMatrix selection(int p, int total, int first, int count) {
  FpMatrix s(p, total, count);
  for (int i = 0; i < count; ++i) s.set(first + i, i, 1);
  return s;
}

FpMatrix embed_rows(const FpMatrix& m, int offset, int total) {
  FpMatrix out(m.p(), m.rows(), total);
  if (m.rows() > 0 && m.cols() > 0) out.set_block(0, offset, m);
  return out;
}

Subspace embed(const Subspace& s, int offset, int total) {
  if (s.dim() == 0) return Subspace::zero(s.p(), total);
  return Subspace::span(embed_rows(s.basis(), offset, total));
}

std::vector<int> range(int first, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

// (I  b; 0  I) as a symplectic element of V_{2n}.
SymplecticElement nplus(const FpMatrix& b, const SymplecticSpace& space) {
  const int n = space.n();
  FpMatrix m = FpMatrix::identity(space.p(), 2 * n);
  if (n > 0) m.set_block(0, n, b);
  return SymplecticElement(m, space);
}

// Every point of s, in the order of their coefficient vectors.
template <typename F>
void for_each_point(const Subspace& s, F&& f) {
  const auto count = point_count(s.p(), s.dim());
  for (std::int64_t i = 0; i < count; ++i) f(s.combine(point_at(i, s.p(), s.dim())));
}

}  // namespace

void GaussianData::validate() const {
  const PrimeField field(p);
  if (mu < 0 || nu < 0) throw DimensionError("gaussian: negative dimension");
  if (h.ambient() != mu + nu) throw DimensionError("gaussian: H must live in F_p^(mu + nu)");
  if (q.dim() != mu + nu) throw DimensionError("gaussian: Q must be a form on F_p^(mu + nu)");
  if (h.p() != p || q.p() != p) throw ValidationError("gaussian: moduli differ");
  if (!std::isfinite(scale.real()) || !std::isfinite(scale.imag())) throw ValidationError("gaussian: scale not finite");
}

std::complex<double> ExactScalar::value(int p) const {
  static constexpr std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[((i_power % 4) + 4) % 4] * std::pow(std::sqrt(static_cast<double>(p)), sqrt_p_power);
}

std::complex<double> GaussSumResult::evaluate(const FpVector& y) const {
  if (!z.contains(y)) return 0.0;
  return c.value(z.p()) * PrimeField(z.p()).character(r.eval(y));
}

ComplexOperator gaussian_matrix(const GaussianData& g) {
  g.validate();
  const PrimeField f(g.p);
  ComplexOperator m(g.p, g.nu, g.mu);
  for_each_point(g.h, [&](const FpVector& yx) {
    const FpVector y(yx.begin(), yx.begin() + g.mu), x(yx.begin() + g.mu, yx.end());
    m.matrix()(point_index(x, g.p), point_index(y, g.p)) = g.scale * f.character(g.q.eval(yx));
  });
  return m;
}

GaussSumResult gauss_sum_closed_form(const QuadraticForm& q, int dim_x) {
  const int p = q.p(), dim_y = q.dim() - dim_x;
  if (dim_x < 0 || dim_y < 0) throw DimensionError("gauss sum: bad split");
  const PrimeField f(p);
  const auto parts = q.split(dim_x);
  if (dim_x == 0) return {Subspace::full(p, dim_y), {}, parts.second};

  // A(x) = 1/2 x S x^T; with x = tP, A = sum_i d_i t_i^2 and the linear part is sum_i t_i m_i(y)
  const Congruence cg = diagonalize_symmetric(parts.first.bilinear());
  const FpMatrix lin = cg.transform * parts.cross;
  ExactScalar c;
  QuadraticForm r = parts.second;
  std::vector<FpVector> constraints;
  const int root_phase = p % 4 == 3 ? 1 : 0;  // sum_t Exp(t^2) = i^root_phase sqrt(p)
  for (int i = 0; i < dim_x; ++i) {
    const int d = f.mul(f.half(), cg.diagonal[i]);
    const FpVector m = lin.row(i);
    if (d == 0) {
      c.sqrt_p_power += 2;
      if (!is_zero(m)) constraints.push_back(m);
      continue;
    }
    c.sqrt_p_power += 1;
    c.i_power += root_phase + (f.legendre(d) < 0 ? 2 : 0);
    // d t^2 + m t = d (t + m / 2d)^2 - m^2 / 4d
    FpMatrix outer(p, dim_y, dim_y);
    for (int a = 0; a < dim_y; ++a)
      for (int b = 0; b < dim_y; ++b) outer.set(a, b, std::int64_t{m[a]} * m[b]);
    r = r + QuadraticForm(outer).scaled(f.neg(f.inv(f.mul(4, d))));
  }
  c.i_power %= 4;
  const Subspace z = constraints.empty()
                         ? Subspace::full(p, dim_y)
                         : Subspace::span(right_nullspace(FpMatrix::from_rows(p, constraints, dim_y)));
  return {z, c, r};
}

GaussianData gaussian_compose(const GaussianData& a, const GaussianData& b) {
  a.validate();
  b.validate();
  if (a.p != b.p || a.mu != b.nu) throw DimensionError("gaussian_compose: inner spaces do not match");
  const int p = a.p, du = b.mu, dv = b.nu, dw = a.nu, total = du + dv + dw;

  // compatible triples (u, v, w): (u, v) in H_b and (v, w) in H_a
  const Subspace triples = intersect(embed(b.h, 0, total) + Subspace::coordinate(p, total, range(du + dv, dw)),
                                     Subspace::coordinate(p, total, range(0, du)) + embed(a.h, du, total));
  const QuadraticForm phase =
      b.q.pullback(selection(p, total, 0, du + dv)) + a.q.pullback(selection(p, total, du, dv + dw));

  // summation directions (0, v, 0) first, then a complement inside the triples
  const Subspace inner = intersect(triples, Subspace::coordinate(p, total, range(du, dv)));
  std::vector<FpVector> rows;
  for (int i = 0; i < inner.dim(); ++i) rows.push_back(inner.basis().row(i));
  Subspace spanned = inner;
  std::vector<FpVector> outer_rows;
  for (int i = 0; i < triples.dim(); ++i) {
    const FpVector t = triples.basis().row(i);
    if (spanned.contains(t)) continue;
    outer_rows.push_back(t);
    spanned = spanned + Subspace::span(p, total, {t});
  }
  rows.insert(rows.end(), outer_rows.begin(), outer_rows.end());
  const int s = inner.dim(), k = static_cast<int>(outer_rows.size());
  const FpMatrix param = FpMatrix::from_rows(p, rows, total);
  const GaussSumResult sum = gauss_sum_closed_form(phase.pullback(param), s);

  // (u, w) coordinates of the complement and a right inverse on its pivot columns
  FpMatrix proj(p, k, du + dw);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < du; ++j) proj.set(i, j, outer_rows[i][j]);
    for (int j = 0; j < dw; ++j) proj.set(i, du + j, outer_rows[i][du + dv + j]);
  }
  FpMatrix lift(p, du + dw, k);
  if (k > 0) {
    const Rref rr = rref(proj);
    FpMatrix square(p, k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) square.set(i, j, proj(i, rr.pivots[j]));
    const FpMatrix inv = square.inverse_or_throw();
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < k; ++c) lift.set(rr.pivots[j], c, inv(j, c));
  }

  GaussianData out;
  out.p = p;
  out.mu = du;
  out.nu = dw;
  out.h = image_under(sum.z, proj);
  out.q = sum.r.pullback(lift);
  out.scale = a.scale * b.scale * sum.c.value(p);
  return out;
}

GaussianData random_gaussian(int p, int mu, int nu, Rng& rng) {
  GaussianData g;
  g.p = p;
  g.mu = mu;
  g.nu = nu;
  const int d = mu + nu;
  std::vector<FpVector> gens(rng.uniform_int(0, d));
  for (auto& v : gens) {
    v.resize(d);
    for (auto& x : v) x = static_cast<int>(rng.uniform(p));
  }
  g.h = Subspace::span(p, d, gens);
  FpMatrix c(p, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) c.set(i, j, static_cast<int>(rng.uniform(p)));
  g.q = QuadraticForm(c);
  return g;
}

IntertwiningSolution solve_intertwining(const LinearRelation& t) {
  if (!is_perfect_lagrangian(t)) throw ValidationError("weil_of_relation: relation is not perfect Lagrangian");
  const int p = t.p(), mu = t.m(), nu = t.n();
  const std::int64_t n_in = point_count(p, mu), n_out = point_count(p, nu);
  const std::int64_t unknowns = n_in * n_out;
  if (unknowns > kMaxIntertwiningUnknowns)
    throw ValidationError("weil_of_relation: p^(m+n) exceeds " + std::to_string(kMaxIntertwiningUnknowns));

  IntertwiningSolution sol;
  if (t.subspace().dim() == 0) {  // V_0 => V_0: every scalar intertwines
    sol.op = ComplexOperator::identity(p, 0);
    sol.nullity = 1;
    sol.next = std::numeric_limits<double>::infinity();
    return sol;
  }

  // X(i, j) sits at column j n_out + i; rows hold (a(w) X - X a(v))(i, j)
  const int dim = t.subspace().dim();
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(dim * unknowns, unknowns);
  const SymplecticSpace& src = t.source();
  const SymplecticSpace& dst = t.target();
  for (int b = 0; b < dim; ++b) {
    const FpVector row = t.subspace().basis().row(b);
    const ComplexOperator av = heisenberg_op(FpVector(row.begin(), row.begin() + src.dim()), src);
    const ComplexOperator aw = heisenberg_op(FpVector(row.begin() + src.dim(), row.end()), dst);
    const Eigen::Index r0 = b * unknowns;
    for (Eigen::Index i = 0; i < n_out; ++i)
      for (Eigen::Index l = 0; l < n_out; ++l) {
        const auto e = aw.matrix()(i, l);
        if (e == 0.0) continue;
        for (Eigen::Index j = 0; j < n_in; ++j) system(r0 + j * n_out + i, j * n_out + l) += e;
      }
    for (Eigen::Index l = 0; l < n_in; ++l)
      for (Eigen::Index j = 0; j < n_in; ++j) {
        const auto e = av.matrix()(l, j);
        if (e == 0.0) continue;
        for (Eigen::Index i = 0; i < n_out; ++i) system(r0 + j * n_out + i, l * n_out + i) -= e;
      }
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  sol.largest = s(0);
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) < 1e-10 * sol.largest) ++sol.nullity;
  sol.smallest = s(s.size() - 1);
  sol.next = s.size() >= 2 ? s(s.size() - 2) : std::numeric_limits<double>::infinity();
  if (sol.nullity != 1 || sol.next < 1e-6 * sol.largest)
    throw NullityError("weil_of_relation: intertwining system has nullity " + std::to_string(sol.nullity) +
                           " (expected exactly 1 with a clear spectral gap)",
                       sol.nullity);
  const Eigen::VectorXcd x = svd.matrixV().col(unknowns - 1);
  Eigen::MatrixXcd m(n_out, n_in);
  for (Eigen::Index j = 0; j < n_in; ++j)
    for (Eigen::Index i = 0; i < n_out; ++i) m(i, j) = x(j * n_out + i);
  sol.op = normalize(ComplexOperator(p, nu, mu, std::move(m)));
  return sol;
}

ComplexOperator weil_of_relation(const LinearRelation& t) { return solve_intertwining(t).op; }

std::complex<double> relation_cocycle(const LinearRelation& s, const LinearRelation& t, double tol) {
  const ComplexOperator product = weil_of_relation(s) * weil_of_relation(t);
  if (product.frobenius_norm() < 1e-12) throw ResidualError("relation_cocycle: W(S) W(T) vanishes");
  return scalar_ratio(product, weil_of_relation(compose(s, t)), tol);
}

bool adjoint_law_check(const LinearRelation& t, double tol) {
  try {
    scalar_ratio(weil_of_relation(t).adjoint(), weil_of_relation(pseudo_inverse(t)), tol);
    return true;
  } catch (const NotProportionalError&) {
    return false;
  }
}

LinearRelation relation_from_gaussian(const GaussianData& g) {
  g.validate();
  const int p = g.p, mu = g.mu, nu = g.nu;
  const SymplecticSpace src(p, mu), dst(p, nu);
  // Q(y, x) = A(y) + y S x^T + C(x)
  const auto parts = g.q.split(mu);
  const FpMatrix& s = parts.cross;
  const int total = 2 * mu + 2 * nu;
  std::vector<FpVector> rows;
  // ((p, q S^T); (q, -p S)) for (p, q) in H
  for (int i = 0; i < g.h.dim(); ++i) {
    const FpVector pq = g.h.basis().row(i);
    const FpVector pp(pq.begin(), pq.begin() + mu), qq(pq.begin() + mu, pq.end());
    FpVector row(total, 0);
    const FpVector qst = s.transpose().apply(qq), ps = s.apply(pp);
    for (int j = 0; j < mu; ++j) {
      row[j] = pp[j];
      row[mu + j] = qst[j];
    }
    for (int j = 0; j < nu; ++j) {
      row[2 * mu + j] = qq[j];
      row[2 * mu + nu + j] = mod_reduce(-std::int64_t{ps[j]}, p);
    }
    rows.push_back(row);
  }
  // ((0, xi); (0, eta)) for (xi, -eta) in the annihilator of H
  const Subspace ann = annihilator(g.h);
  for (int i = 0; i < ann.dim(); ++i) {
    const FpVector xe = ann.basis().row(i);
    FpVector row(total, 0);
    for (int j = 0; j < mu; ++j) row[mu + j] = xe[j];
    for (int j = 0; j < nu; ++j) row[2 * mu + nu + j] = mod_reduce(-std::int64_t{xe[mu + j]}, p);
    rows.push_back(row);
  }
  const LinearRelation core(src, dst, Subspace::span(p, total, rows));
  // multiplication by Exp(1/2 y b y^T) is W(N_+(b)), whose relation is graph(N_+(-b))
  const LinearRelation pre = graph(nplus(-parts.first.bilinear(), src));
  const LinearRelation post = graph(nplus(-parts.second.bilinear(), dst));
  LinearRelation t = compose(post, compose(core, pre));
  if (!is_perfect_lagrangian(t)) throw ResidualError("relation_from_gaussian: result is not perfect Lagrangian");
  return t;
}

GaussianData gaussian_from_operator(const ComplexOperator& w) {
  const int p = w.p(), mu = w.n_in(), nu = w.n_out();
  const Eigen::MatrixXcd& m = w.matrix();
  const double largest = m.cwiseAbs().maxCoeff();
  if (!(largest > 0.0)) throw NotGaussianError("not Gaussian: zero operator");
  const double floor = 1e-6 * largest;
  const std::complex<double> ref = m(0, 0);
  if (std::abs(ref) <= floor) throw NotGaussianError("not Gaussian: support does not contain the origin");

  const auto joined = [&](Eigen::Index x, Eigen::Index y) {
    FpVector yx = point_at(y, p, mu);
    const FpVector xs = point_at(x, p, nu);
    yx.insert(yx.end(), xs.begin(), xs.end());
    return yx;
  };
  std::vector<FpVector> support;
  for (Eigen::Index x = 0; x < m.rows(); ++x)
    for (Eigen::Index y = 0; y < m.cols(); ++y) {
      const double a = std::abs(m(x, y));
      if (a <= floor) continue;
      if (std::abs(a - std::abs(ref)) > 1e-6 * largest) throw NotGaussianError("not Gaussian: nonconstant modulus");
      support.push_back(joined(x, y));
    }
  GaussianData g;
  g.p = p;
  g.mu = mu;
  g.nu = nu;
  g.h = Subspace::span(p, mu + nu, support);
  if (static_cast<std::int64_t>(support.size()) != point_count(p, g.h.dim()))
    throw NotGaussianError("not Gaussian: support is not a subspace");
  g.scale = ref;

  // Exp(Q(y, x)) = entry / ref, read as an exponent in F_p
  const double step = 2.0 * std::numbers::pi / p;
  const auto phase = [&](const FpVector& yx) {
    const FpVector y(yx.begin(), yx.begin() + mu), x(yx.begin() + mu, yx.end());
    const double angle = std::arg(m(point_index(x, p), point_index(y, p)) / ref);
    const double k = std::round(angle / step);
    if (std::abs(angle - k * step) > 1e-6) throw NotGaussianError("not Gaussian: phase is not a p-th root of unity");
    return mod_reduce(static_cast<std::int64_t>(k), p);
  };

  const int d = g.h.dim();
  const FpMatrix& basis = g.h.basis();
  FpMatrix coeffs(p, d, d);
  for (int i = 0; i < d; ++i) {
    const int qi = phase(basis.row(i));
    coeffs.set(i, i, qi);
    for (int j = i + 1; j < d; ++j)
      coeffs.set(i, j, std::int64_t{phase(vec_add(basis.row(i), basis.row(j), p))} - qi - phase(basis.row(j)));
  }
  const QuadraticForm on_h(coeffs);
  for (const auto& pt : support) {
    FpVector t(d);
    for (int i = 0; i < d; ++i) t[i] = pt[g.h.pivots()[i]];
    if (on_h.eval(t) != phase(pt)) throw NotGaussianError("not Gaussian: phases are not quadratic on the support");
  }
  FpMatrix pick(p, mu + nu, d);
  for (int i = 0; i < d; ++i) pick.set(g.h.pivots()[i], i, 1);
  g.q = on_h.pullback(pick);
  return g;
}

}  // namespace weilrep
