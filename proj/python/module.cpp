#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weilrep/gauss_weil.hpp"
#include "weilrep/heisenberg_weil.hpp"
#include "weilrep/serialize.hpp"
#include "weilrep/verify.hpp"

namespace py = pybind11;
using namespace weilrep;
using json_io::Json;

namespace {

std::string dump(const Json& j) { return j.dump(); }
Json parse(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::parse_error& e) {
    throw ValidationError(e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_weilrep, m) {
  m.doc() = "Weil representation engine (JSON strings in, JSON strings or numpy arrays out)";

  py::register_exception<ResidualError>(m, "ResidualError", PyExc_RuntimeError);

  m.def("random_element", [](int p, int n, std::uint64_t seed) {
    Rng rng(seed);
    return dump(json_io::element_to_json(random_element(SymplecticSpace(p, n), rng)));
  }, py::arg("p"), py::arg("n"), py::arg("seed") = 0);

  m.def("decompose", [](const std::string& element) {
    const auto g = json_io::element_from_json(parse(element));
    return dump(json_io::word_to_json(decompose(g), g.space()));
  });

  m.def("evaluate_word", [](const std::string& word) {
    const auto [w, space] = json_io::word_from_json(parse(word));
    return dump(json_io::element_to_json(evaluate(w, space)));
  });

  m.def("heisenberg_op", [](int p, int n, const std::vector<int>& v) {
    return heisenberg_op(v, SymplecticSpace(p, n)).matrix();
  });

  m.def("weil_group", [](const std::string& element, double tol) {
    return weil_of_group(json_io::element_from_json(parse(element)), tol).matrix();
  }, py::arg("element"), py::arg("tol") = 1e-9);

  m.def("group_cocycle", [](const std::string& g1, const std::string& g2, double tol) {
    return group_cocycle(json_io::element_from_json(parse(g1)), json_io::element_from_json(parse(g2)), tol);
  }, py::arg("g1"), py::arg("g2"), py::arg("tol") = kDefaultOperatorTolerance);

  m.def("random_relation", [](int p, int m_, int n, std::uint64_t seed, int rank) {
    Rng rng(seed);
    const SymplecticSpace x(p, m_), y(p, n);
    return dump(json_io::relation_to_json(rank < 0 ? random_perfect_lagrangian(x, y, rng)
                                                   : random_perfect_lagrangian(x, y, rank, rng)));
  }, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("seed") = 0, py::arg("rank") = -1);

  m.def("compose_relations", [](const std::string& s, const std::string& t) {
    return dump(json_io::relation_to_json(
        compose(json_io::relation_from_json(parse(s)), json_io::relation_from_json(parse(t)))));
  });

  m.def("is_perfect_lagrangian", [](const std::string& t) {
    return is_perfect_lagrangian(json_io::relation_from_json(parse(t)));
  });

  m.def("weil_relation", [](const std::string& t) {
    return weil_of_relation(json_io::relation_from_json(parse(t))).matrix();
  });

  m.def("relation_cocycle", [](const std::string& s, const std::string& t, double tol) {
    return relation_cocycle(json_io::relation_from_json(parse(s)), json_io::relation_from_json(parse(t)), tol);
  }, py::arg("s"), py::arg("t"), py::arg("tol") = kDefaultOperatorTolerance);

  m.def("gaussian_matrix", [](const std::string& g) {
    return gaussian_matrix(json_io::gaussian_from_json(parse(g))).matrix();
  });

  m.def("gaussian_from_relation", [](const std::string& t) {
    return dump(json_io::gaussian_to_json(
        gaussian_from_operator(weil_of_relation(json_io::relation_from_json(parse(t))))));
  });

  m.def("relation_from_gaussian", [](const std::string& g) {
    return dump(json_io::relation_to_json(relation_from_gaussian(json_io::gaussian_from_json(parse(g)))));
  });

  m.def("gauss_sum", [](int p, int dim_x, const std::string& q) {
    const Json j = parse(q);
    if (!j.is_array()) throw ValidationError("Q must be a square array");
    const auto form = json_io::form_from_json(j, p, static_cast<int>(j.size()));
    if (dim_x < 0 || dim_x > form.dim()) throw ValidationError("dim_x must lie in [0, dim Q]");
    return dump(json_io::gauss_sum_to_json(gauss_sum_closed_form(form, dim_x), p));
  });

  m.def("verify", [](const std::string& suite, int p, int n, std::uint64_t seed, int trials, double tolerance,
                     double exact_tolerance) {
    VerifyConfig c;
    c.p = p;
    c.n = n;
    c.seed = seed;
    c.trials = trials;
    c.tolerance = tolerance;
    c.exact_tolerance = exact_tolerance;
    return dump(json_io::report_to_json(run_verify(suite, c)));
  }, py::arg("suite") = "all", py::arg("p") = 3, py::arg("n") = 1, py::arg("seed") = 0, py::arg("trials") = 20,
     py::arg("tolerance") = 1e-8, py::arg("exact_tolerance") = 1e-9);
}
