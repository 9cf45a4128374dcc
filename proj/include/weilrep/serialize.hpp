#pragma once

#include <json.hpp>

#include "weilrep/gauss_weil.hpp"
#include "weilrep/relations.hpp"
#include "weilrep/symplectic.hpp"
#include "weilrep/verify.hpp"

namespace weilrep::json_io {

using Json = nlohmann::ordered_json;

/// Field elements are plain integers in [0, p); every loader rejects anything
/// else with ValidationError, as well as missing keys and wrong shapes.
Json matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const Json& j, int p, int rows, int cols);

/// {"ambient": n, "basis": [[...]]}, basis in RREF. The modulus comes from the
/// enclosing document.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, int p);

/// Upper-triangular coefficient rows.
Json form_to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const Json& j, int p, int dim);

Json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const Json& j);

/// {"p", "n", "matrix"}.
Json element_to_json(const SymplecticElement& g);
SymplecticElement element_from_json(const Json& j);

/// {"p", "n", "letters": [{"H": [[..]]}, {"Nplus": [[..]]}, {"J": k}]}.
Json word_to_json(const GeneratorWord& w, const SymplecticSpace& space);
std::pair<GeneratorWord, SymplecticSpace> word_from_json(const Json& j);

/// {"p", "n_in", "n_out", "indexing": "lex", "entries": [[re, im], ...]} row-major.
Json operator_to_json(const ComplexOperator& a);
ComplexOperator operator_from_json(const Json& j);

/// {"p", "m", "n", "coordinates": "source|target", "basis": [[2m + 2n entries]]}.
Json relation_to_json(const LinearRelation& t);
LinearRelation relation_from_json(const Json& j);

/// {"p", "mu", "nu", "H": subspace, "Q": coefficients, "scale": [re, im]}.
Json gaussian_to_json(const GaussianData& g);
GaussianData gaussian_from_json(const Json& j);

/// {"p", "dim_y", "Z": subspace, "c": {"i_power", "sqrt_p_power", "value"}, "R": coefficients}.
Json gauss_sum_to_json(const GaussSumResult& r, int p);

/// {"passed", "config", "properties": [{"suite", "name", "passed", "max_residual", ...}]}.
Json report_to_json(const VerifyReport& r);

/// Pretty printed with a trailing newline; identical input gives identical bytes.
std::string dump(const Json& j);

}  // namespace weilrep::json_io
