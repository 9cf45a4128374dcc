#include "weilrep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <string>

#include "weilrep/gauss_weil.hpp"
#include "weilrep/heisenberg_weil.hpp"

namespace weilrep {

namespace {

constexpr std::int64_t kSolverUnknowns = 4096;

class Property {
 public:
  Property(VerifyReport& report, std::string suite, std::string name, double threshold)
      : report_(report), slot_(report.properties.size()) {
    report_.properties.emplace_back();
    r_.suite = std::move(suite);
    r_.name = std::move(name);
    r_.threshold = threshold;
  }
  Property(const Property&) = delete;
  ~Property() { report_.properties[slot_] = std::move(r_); }

  // residual must stay strictly below the threshold
  void observe(double residual, int trial) {
    ++r_.trials;
    if (!std::isfinite(residual)) residual = std::numeric_limits<double>::infinity();
    r_.max_residual = std::max(r_.max_residual, residual);
    if (!(residual < r_.threshold)) fail(trial, "residual " + std::to_string(residual));
  }
  void check(bool ok, int trial, const std::string& what = "predicate false") {
    ++r_.trials;
    if (!ok) fail(trial, what);
  }
  void fail(int trial, const std::string& what) {
    if (r_.passed) r_.detail = "trial " + std::to_string(trial) + ": " + what;
    r_.passed = false;
  }
  // runs body(trial, rng) for every trial, turning exceptions into failures
  void each(const VerifyConfig& c, int count, const std::function<void(int, Rng&)>& body) {
    for (int i = 0; i < count; ++i) {
      Rng rng = Rng::stream(c.seed, static_cast<std::uint64_t>(i));
      try {
        body(i, rng);
      } catch (const std::exception& e) {
        ++r_.trials;
        fail(i, e.what());
      }
    }
  }

 private:
  VerifyReport& report_;
  std::size_t slot_;
  PropertyResult r_;
};

// largest half-dimension d <= n with p^(2d) solver unknowns in budget
int solver_dim(const VerifyConfig& c) {
  int d = 0;
  while (d < c.n && point_count(c.p, 2 * (d + 1), std::numeric_limits<std::int64_t>::max()) <= kSolverUnknowns) ++d;
  return d;
}

FpVector random_vector(int p, int len, Rng& rng) {
  FpVector v(len);
  for (auto& x : v) x = static_cast<int>(rng.uniform(p));
  return v;
}

void heisenberg_suite(const VerifyConfig& c, VerifyReport& report) {
  const SymplecticSpace space(c.p, c.n);
  const PrimeField f(c.p);
  const auto count = point_count(c.p, space.dim());
  const bool exhaustive = count * count <= 10000;
  const auto law = [&](const FpVector& v, const FpVector& w) {
    const auto lhs = heisenberg_op(v, space) * heisenberg_op(w, space);
    const auto rhs = f.character(f.mul(f.half(), space.form(v, w))) * heisenberg_op(vec_add(v, w, c.p), space);
    return (lhs - rhs).frobenius_norm();
  };
  {
    Property prop(report, "heisenberg", exhaustive ? "product_law_exhaustive" : "product_law_sampled", 1e-10);
    if (exhaustive) {
      for (std::int64_t i = 0; i < count; ++i)
        for (std::int64_t j = 0; j < count; ++j)
          prop.observe(law(point_at(i, c.p, space.dim()), point_at(j, c.p, space.dim())), static_cast<int>(i));
    } else {
      prop.each(c, 20 * c.trials, [&](int i, Rng& rng) {
        prop.observe(law(random_vector(c.p, space.dim(), rng), random_vector(c.p, space.dim(), rng)), i);
      });
    }
  }
  {
    Property prop(report, "heisenberg", "unitarity", c.exact_tolerance);
    const auto id = ComplexOperator::identity(c.p, c.n);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto a = heisenberg_op(random_vector(c.p, space.dim(), rng), space);
      prop.observe((a * a.adjoint() - id).frobenius_norm(), i);
    });
  }
  {
    Property prop(report, "heisenberg", "commutant_dimension_one", 0.5);
    const int dim = commutant_dimension(heisenberg_basis_ops(space));
    prop.observe(std::abs(dim - 1), 0);
  }
}

void group_suite(const VerifyConfig& c, VerifyReport& report) {
  const SymplecticSpace space(c.p, c.n);
  {
    Property prop(report, "group", "decomposition_exact", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto g = random_element(space, rng);
      prop.check(evaluate(decompose(g), space) == g, i, "word product differs from the input");
    });
  }
  {
    Property prop(report, "group", "intertwining", c.exact_tolerance);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto g = random_element(space, rng);
      prop.observe(intertwining_residual(normalize(weil_of_word(decompose(g), space)), g), i);
    });
  }
  {
    Property prop(report, "group", "cocycle_unit_modulus", c.exact_tolerance);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto g1 = random_element(space, rng), g2 = random_element(space, rng);
      prop.observe(std::abs(std::abs(group_cocycle(g1, g2, c.tolerance)) - 1.0), i);
    });
  }
  {
    Property prop(report, "group", "weil_unitarity", c.exact_tolerance);
    const auto id = ComplexOperator::identity(c.p, c.n);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto w = weil_of_group(random_element(space, rng), c.exact_tolerance);
      prop.observe((w * w.adjoint() - id).frobenius_norm(), i);
    });
  }
}

void relations_suite(const VerifyConfig& c, VerifyReport& report) {
  const auto space = [&](Rng& rng) { return SymplecticSpace(c.p, rng.uniform_int(0, c.n)); };
  {
    Property prop(report, "relations", "composition_closure", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto x = space(rng), y = space(rng), z = space(rng);
      const auto t = random_perfect_lagrangian(x, y, rng);
      const auto s = random_perfect_lagrangian(y, z, rng);
      prop.check(is_perfect_lagrangian(compose(s, t)), i, "composite is not perfect Lagrangian");
    });
  }
  {
    Property prop(report, "relations", "structure_dualities", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto x = space(rng), y = space(rng);
      const auto st = structure(random_perfect_lagrangian(x, y, rng));
      prop.check(lozenge(st.dom, x) == st.ker && lozenge(st.ker, x) == st.dom && lozenge(st.im, y) == st.indef &&
                     lozenge(st.indef, y) == st.im,
                 i, "ker/dom/im/indef dualities fail");
    });
  }
  {
    Property prop(report, "relations", "associativity", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto x = space(rng), y = space(rng), z = space(rng), w = space(rng);
      const auto t = random_perfect_lagrangian(x, y, rng);
      const auto s = random_perfect_lagrangian(y, z, rng);
      const auto r = random_perfect_lagrangian(z, w, rng);
      prop.check(compose(compose(r, s), t) == compose(r, compose(s, t)), i, "composition not associative");
    });
  }
  {
    Property prop(report, "relations", "pseudo_inverse_antihomomorphism", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto x = space(rng), y = space(rng), z = space(rng);
      const auto t = random_perfect_lagrangian(x, y, rng);
      const auto s = random_perfect_lagrangian(y, z, rng);
      prop.check(pseudo_inverse(compose(s, t)) == compose(pseudo_inverse(t), pseudo_inverse(s)), i);
    });
  }
  {
    Property prop(report, "relations", "graph_functoriality", 0.5);
    const SymplecticSpace s(c.p, c.n);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto g = random_element(s, rng), h = random_element(s, rng);
      prop.check(compose(graph(h), graph(g)) == graph(g * h), i, "graph(h) graph(g) != graph(gh)");
    });
  }
}

void functor_suite(const VerifyConfig& c, VerifyReport& report) {
  const int d = solver_dim(c);
  const auto space = [&](Rng& rng) { return SymplecticSpace(c.p, rng.uniform_int(0, d)); };
  {
    Property prop(report, "functor", "nullity_one", 0.5);
    Property gap(report, "functor", "spectral_gap_at_least_1e4", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto x = space(rng), y = space(rng);
      const auto sol = solve_intertwining(random_perfect_lagrangian(x, y, rng));
      prop.check(sol.nullity == 1, i, "nullity " + std::to_string(sol.nullity));
      gap.check(sol.gap() >= 1e4, i, "gap " + std::to_string(sol.gap()));
    });
  }
  {
    Property prop(report, "functor", "composition_proportional", c.tolerance);
    Property nonzero(report, "functor", "cocycle_nonzero", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto x = space(rng), y = space(rng), z = space(rng);
      const auto t = random_perfect_lagrangian(x, y, rng);
      const auto s = random_perfect_lagrangian(y, z, rng);
      const auto product = weil_of_relation(s) * weil_of_relation(t);
      const auto st = weil_of_relation(compose(s, t));
      prop.observe(proportionality_residual(product, st), i);
      nonzero.check(product.frobenius_norm() > 1e-12 && std::abs(relation_cocycle(s, t, c.tolerance)) > 1e-12, i,
                    "W(S) W(T) vanishes");
    });
  }
  {
    Property prop(report, "functor", "adjoint_law", c.tolerance);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto x = space(rng), y = space(rng);
      const auto t = random_perfect_lagrangian(x, y, rng);
      prop.observe(proportionality_residual(weil_of_relation(t).adjoint(), weil_of_relation(pseudo_inverse(t))), i);
    });
  }
  {
    Property prop(report, "functor", "graph_cocycle_matches_group", c.tolerance);
    prop.each(c, d > 0 ? c.trials : 0, [&](int i, Rng& rng) {
      const SymplecticSpace s(c.p, d);
      const auto g = random_element(s, rng), h = random_element(s, rng);
      const auto rel = relation_cocycle(graph(h), graph(g), c.tolerance);
      prop.observe(std::abs(rel - group_cocycle(h.inverse(), g.inverse(), c.tolerance)), i);
    });
  }
}

std::complex<double> direct_gauss_sum(const QuadraticForm& q, int dim_x, const FpVector& y) {
  const PrimeField f(q.p());
  std::complex<double> total = 0.0;
  for (std::int64_t i = 0; i < point_count(q.p(), dim_x); ++i) {
    FpVector z = point_at(i, q.p(), dim_x);
    z.insert(z.end(), y.begin(), y.end());
    total += f.character(q.eval(z));
  }
  return total;
}

void gaussian_suite(const VerifyConfig& c, VerifyReport& report) {
  const int d = solver_dim(c);
  {
    Property prop(report, "gaussian", "gauss_sum_matches_direct_sum", 1e-10);
    Property codim(report, "gaussian", "codim_z_at_most_dim_x", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const int dim_x = rng.uniform_int(0, 3), dim_y = rng.uniform_int(0, 3);
      FpMatrix coeffs(c.p, dim_x + dim_y, dim_x + dim_y);
      for (int a = 0; a < dim_x + dim_y; ++a)
        for (int b = a; b < dim_x + dim_y; ++b) coeffs.set(a, b, static_cast<int>(rng.uniform(c.p)));
      const QuadraticForm q(coeffs);
      const auto r = gauss_sum_closed_form(q, dim_x);
      codim.check(dim_y - r.z.dim() <= dim_x, i);
      double worst = 0.0;
      for (std::int64_t k = 0; k < point_count(c.p, dim_y); ++k) {
        const auto y = point_at(k, c.p, dim_y);
        worst = std::max(worst, std::abs(r.evaluate(y) - direct_gauss_sum(q, dim_x, y)));
      }
      prop.observe(worst, i);
    });
  }
  {
    Property prop(report, "gaussian", "composition_matches_dense_product", c.exact_tolerance);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const int u = rng.uniform_int(0, d), v = rng.uniform_int(0, d), w = rng.uniform_int(0, d);
      const auto b = random_gaussian(c.p, u, v, rng);
      const auto a = random_gaussian(c.p, v, w, rng);
      const Eigen::MatrixXcd dense = gaussian_matrix(a).matrix() * gaussian_matrix(b).matrix();
      prop.observe((gaussian_matrix(gaussian_compose(a, b)).matrix() - dense).norm(), i);
    });
  }
  {
    Property prop(report, "gaussian", "weil_operator_is_gaussian", c.exact_tolerance);
    Property back(report, "gaussian", "relation_recovered_exactly", 0.5);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const SymplecticSpace x(c.p, rng.uniform_int(0, d)), y(c.p, rng.uniform_int(0, d));
      const auto t = random_perfect_lagrangian(x, y, rng);
      const auto w = weil_of_relation(t);
      const auto g = gaussian_from_operator(w);
      prop.observe(proportionality_residual(gaussian_matrix(g), w), i);
      back.check(relation_from_gaussian(g) == t, i, "relation_from_gaussian does not return T");
    });
  }
  {
    Property prop(report, "gaussian", "gaussian_is_weil_operator", c.exact_tolerance);
    prop.each(c, c.trials, [&](int i, Rng& rng) {
      const auto g = random_gaussian(c.p, rng.uniform_int(0, d), rng.uniform_int(0, d), rng);
      prop.observe(proportionality_residual(gaussian_matrix(g), weil_of_relation(relation_from_gaussian(g))), i);
    });
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& r) { return r.passed; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"heisenberg", "group", "relations", "functor", "gaussian"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyConfig& config) {
  PrimeField{config.p};
  if (config.n < 0) throw ValidationError("verify: n must be nonnegative");
  if (config.trials < 0) throw ValidationError("verify: trials must be nonnegative");
  if (!(config.tolerance > 0) || !(config.exact_tolerance > 0)) throw ValidationError("verify: tolerances must be positive");
  point_count(config.p, config.n, 10000);

  VerifyReport report;
  report.config = config;
  const auto run = [&](const std::string& name) {
    if (name == "heisenberg") heisenberg_suite(config, report);
    else if (name == "group") group_suite(config, report);
    else if (name == "relations") relations_suite(config, report);
    else if (name == "functor") functor_suite(config, report);
    else if (name == "gaussian") gaussian_suite(config, report);
    else throw ValidationError("verify: unknown suite \"" + name + "\"");
  };
  if (suite == "all")
    for (const auto& name : verify_suites()) run(name);
  else
    run(suite);
  return report;
}

}  // namespace weilrep
