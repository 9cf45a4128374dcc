#include "weilrep/serialize.hpp"

#include <cmath>
#include <string>

namespace weilrep::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ValidationError("json: expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("json: missing key \"") + key + "\"");
  return *it;
}

int integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ValidationError(std::string("json: \"") + key + "\" must be an integer");
  return v.get<int>();
}

int modulus(const Json& j) {
  const int p = integer(j, "p");
  PrimeField{p};
  return p;
}

int nonnegative(const Json& j, const char* key) {
  const int v = integer(j, key);
  if (v < 0) throw ValidationError(std::string("json: \"") + key + "\" must be nonnegative");
  return v;
}

FpVector row_from_json(const Json& j, int p, int len) {
  if (!j.is_array() || static_cast<int>(j.size()) != len)
    throw ValidationError("json: expected a row of length " + std::to_string(len));
  FpVector v(len);
  for (int i = 0; i < len; ++i) {
    if (!j[i].is_number_integer()) throw ValidationError("json: field elements must be integers");
    const auto x = j[i].get<std::int64_t>();
    if (x < 0 || x >= p) throw ValidationError("json: field element " + std::to_string(x) + " outside [0, p)");
    v[i] = static_cast<int>(x);
  }
  return v;
}

}  // namespace

Json matrix_to_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

FpMatrix matrix_from_json(const Json& j, int p, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ValidationError("json: expected a matrix with " + std::to_string(rows) + " rows");
  FpMatrix m(p, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const FpVector r = row_from_json(j[i], p, cols);
    for (int c = 0; c < cols; ++c) m.set(i, c, r[c]);
  }
  return m;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient", s.ambient()}, {"basis", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j, int p) {
  const int ambient = nonnegative(j, "ambient");
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) throw ValidationError("json: \"basis\" must be an array");
  std::vector<FpVector> rows;
  for (const auto& r : basis) rows.push_back(row_from_json(r, p, ambient));
  return Subspace::span(p, ambient, rows);
}

Json form_to_json(const QuadraticForm& q) { return matrix_to_json(q.coeffs()); }

QuadraticForm form_from_json(const Json& j, int p, int dim) {
  if (dim == 0 && j.is_array() && j.empty()) return QuadraticForm(p, 0);
  return QuadraticForm(matrix_from_json(j, p, dim, dim));
}

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError("json: complex numbers are [re, im]");
  const std::complex<double> z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError("json: complex value not finite");
  return z;
}

Json element_to_json(const SymplecticElement& g) {
  return Json{{"p", g.space().p()}, {"n", g.space().n()}, {"matrix", matrix_to_json(g.matrix())}};
}

SymplecticElement element_from_json(const Json& j) {
  const int p = modulus(j), n = nonnegative(j, "n");
  const SymplecticSpace space(p, n);
  return SymplecticElement(matrix_from_json(field(j, "matrix"), p, 2 * n, 2 * n), space);
}

Json word_to_json(const GeneratorWord& w, const SymplecticSpace& space) {
  Json letters = Json::array();
  for (const auto& letter : w.letters) {
    std::visit(
        [&](const auto& l) {
          using L = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<L, HLetter>) letters.push_back(Json{{"H", matrix_to_json(l.a)}});
          else if constexpr (std::is_same_v<L, NplusLetter>) letters.push_back(Json{{"Nplus", matrix_to_json(l.b)}});
          else letters.push_back(Json{{"J", l.k}});
        },
        letter);
  }
  return Json{{"p", space.p()}, {"n", space.n()}, {"letters", letters}};
}

std::pair<GeneratorWord, SymplecticSpace> word_from_json(const Json& j) {
  const int p = modulus(j), n = nonnegative(j, "n");
  const SymplecticSpace space(p, n);
  const Json& letters = field(j, "letters");
  if (!letters.is_array()) throw ValidationError("json: \"letters\" must be an array");
  GeneratorWord w;
  for (const auto& l : letters) {
    if (!l.is_object() || l.size() != 1) throw ValidationError("json: each letter is a one-key object");
    GeneratorLetter letter;
    if (l.contains("H")) letter = HLetter{matrix_from_json(l["H"], p, n, n)};
    else if (l.contains("Nplus")) letter = NplusLetter{matrix_from_json(l["Nplus"], p, n, n)};
    else if (l.contains("J")) letter = JLetter{integer(l, "J")};
    else throw ValidationError("json: letter tag must be H, Nplus or J");
    make_generator(letter, space);
    w.letters.push_back(std::move(letter));
  }
  return {std::move(w), space};
}

Json operator_to_json(const ComplexOperator& a) {
  Json entries = Json::array();
  const auto& m = a.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
  return Json{{"p", a.p()}, {"n_in", a.n_in()}, {"n_out", a.n_out()}, {"indexing", "lex"}, {"entries", entries}};
}

ComplexOperator operator_from_json(const Json& j) {
  const int p = modulus(j), n_in = nonnegative(j, "n_in"), n_out = nonnegative(j, "n_out");
  const Json& idx = field(j, "indexing");
  if (!idx.is_string() || idx.get<std::string>() != "lex") throw ValidationError("json: indexing must be \"lex\"");
  const auto rows = point_count(p, n_out), cols = point_count(p, n_in);
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<std::int64_t>(entries.size()) != rows * cols)
    throw ValidationError("json: expected p^n_out * p^n_in entries");
  Eigen::MatrixXcd m(rows, cols);
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(entries[r * cols + c]);
  return ComplexOperator(p, n_out, n_in, std::move(m));
}

Json relation_to_json(const LinearRelation& t) {
  return Json{{"p", t.p()},
              {"m", t.m()},
              {"n", t.n()},
              {"coordinates", "source|target"},
              {"basis", matrix_to_json(t.subspace().basis())}};
}

LinearRelation relation_from_json(const Json& j) {
  const int p = modulus(j), m = nonnegative(j, "m"), n = nonnegative(j, "n");
  if (j.contains("coordinates") && j["coordinates"] != "source|target")
    throw ValidationError("json: relation coordinates must be \"source|target\"");
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) throw ValidationError("json: \"basis\" must be an array");
  std::vector<FpVector> rows;
  for (const auto& r : basis) rows.push_back(row_from_json(r, p, 2 * m + 2 * n));
  return {SymplecticSpace(p, m), SymplecticSpace(p, n), Subspace::span(p, 2 * m + 2 * n, rows)};
}

Json gaussian_to_json(const GaussianData& g) {
  return Json{{"p", g.p},
              {"mu", g.mu},
              {"nu", g.nu},
              {"H", subspace_to_json(g.h)},
              {"Q", form_to_json(g.q)},
              {"scale", complex_to_json(g.scale)}};
}

GaussianData gaussian_from_json(const Json& j) {
  GaussianData g;
  g.p = modulus(j);
  g.mu = nonnegative(j, "mu");
  g.nu = nonnegative(j, "nu");
  g.h = subspace_from_json(field(j, "H"), g.p);
  g.q = form_from_json(field(j, "Q"), g.p, g.mu + g.nu);
  g.scale = j.contains("scale") ? complex_from_json(j["scale"]) : std::complex<double>(1.0);
  g.validate();
  return g;
}

Json gauss_sum_to_json(const GaussSumResult& r, int p) {
  return Json{{"p", p},
              {"dim_y", r.r.dim()},
              {"Z", subspace_to_json(r.z)},
              {"c",
               {{"i_power", r.c.i_power},
                {"sqrt_p_power", r.c.sqrt_p_power},
                {"value", complex_to_json(r.c_value(p))},
                {"modulus", std::abs(r.c_value(p))}}},
              {"R", form_to_json(r.r)}};
}

Json report_to_json(const VerifyReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties)
    props.push_back(Json{{"suite", p.suite},
                         {"name", p.name},
                         {"passed", p.passed},
                         {"max_residual", p.max_residual},
                         {"threshold", p.threshold},
                         {"trials", p.trials},
                         {"detail", p.detail}});
  const auto& c = r.config;
  return Json{{"passed", r.passed()},
              {"config",
               {{"p", c.p},
                {"n", c.n},
                {"seed", c.seed},
                {"trials", c.trials},
                {"tolerance", c.tolerance},
                {"exact_tolerance", c.exact_tolerance}}},
              {"properties", props}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace weilrep::json_io
