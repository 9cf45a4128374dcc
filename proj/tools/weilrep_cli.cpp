// weilrep: JSON front end for the Weil representation engine.
//
// Every subcommand writes one JSON document to stdout (or --output) and logs
// to stderr. Exit codes: 0 ok, 1 verify failure, 2 usage error, 3 invalid input.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "weilrep/gauss_weil.hpp"
#include "weilrep/heisenberg_weil.hpp"
#include "weilrep/serialize.hpp"
#include "weilrep/verify.hpp"

using namespace weilrep;
using json_io::Json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct Options {
  std::string output = "-";
  std::int64_t max_rows = 10000;
  bool quiet = false;
};

Json load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

void emit(const Options& o, const Json& j) {
  const std::string text = json_io::dump(j);
  if (o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw ValidationError("cannot write " + o.output);
  out << text;
}

void log(const Options& o, const std::string& msg) {
  if (!o.quiet) std::cerr << "weilrep: " << msg << '\n';
}

std::string sci(double x) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(2) << x;
  return out.str();
}

void check_rows(const Options& o, int p, int n) {
  point_count(p, n, o.max_rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil representation of finite symplectic groups and perfect Lagrangian relations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("-o,--output", opt.output, "Write JSON here instead of stdout");
  app.add_option("--max-rows", opt.max_rows, "Largest operator side p^n allowed")->check(CLI::PositiveNumber);
  app.add_flag("-q,--quiet", opt.quiet, "No log lines on stderr");

  int p = 3, n = 1, m = 1, rank = -1, dim_x = 1;
  std::uint64_t seed = 0;
  double tol = kDefaultOperatorTolerance;
  std::string input = "-", first, second, q_text;

  auto* gen_sym = app.add_subcommand("gen-symplectic", "Random element of Sp(2n, F_p)");
  gen_sym->add_option("--p", p, "Odd prime")->required();
  gen_sym->add_option("--n", n, "Half dimension")->required();
  gen_sym->add_option("--seed", seed);

  auto* decomp = app.add_subcommand("decompose", "Generator word of a symplectic element");
  decomp->add_option("-i,--input", input, "Element JSON ('-' for stdin)");

  auto* weil_group = app.add_subcommand("weil-group", "W(g) for an element or a generator word");
  weil_group->add_option("-i,--input", input, "Element or word JSON");
  weil_group->add_option("--tol", tol, "Intertwining residual bound");

  auto* coc_group = app.add_subcommand("cocycle-group", "c with W(g1) W(g2) = c W(g1 g2)");
  coc_group->add_option("--g1", first, "Element JSON")->required();
  coc_group->add_option("--g2", second, "Element JSON")->required();
  coc_group->add_option("--tol", tol, "Proportionality tolerance");

  auto* gen_rel = app.add_subcommand("gen-relation", "Random perfect Lagrangian relation V_2m => V_2n");
  gen_rel->add_option("--p", p, "Odd prime")->required();
  gen_rel->add_option("--m", m, "Source half dimension")->required();
  gen_rel->add_option("--n", n, "Target half dimension")->required();
  gen_rel->add_option("--rank", rank, "m - dim ker (default: random)");
  gen_rel->add_option("--seed", seed);

  auto* comp_rel = app.add_subcommand("compose-relations", "ST, first T then S");
  comp_rel->add_option("--s", first, "Relation JSON")->required();
  comp_rel->add_option("--t", second, "Relation JSON")->required();

  auto* check_lag = app.add_subcommand("check-lagrangian", "Perfect Lagrangian predicate and structure");
  check_lag->add_option("-i,--input", input, "Relation JSON");

  auto* weil_rel = app.add_subcommand("weil-relation", "W(T) by solving the intertwining system");
  weil_rel->add_option("-i,--input", input, "Relation JSON");

  auto* coc_rel = app.add_subcommand("cocycle-relation", "c with W(S) W(T) = c W(ST)");
  coc_rel->add_option("--s", first, "Relation JSON")->required();
  coc_rel->add_option("--t", second, "Relation JSON")->required();
  coc_rel->add_option("--tol", tol, "Proportionality tolerance");

  auto* gauss_eval = app.add_subcommand("gaussian-eval", "Matrix of a Gaussian operator");
  gauss_eval->add_option("-i,--input", input, "Gaussian JSON");

  auto* gauss_sum = app.add_subcommand("gauss-sum", "Closed form of sum_x Exp(Q(x, y))");
  gauss_sum->add_option("--p", p, "Odd prime");
  gauss_sum->add_option("--dim-x", dim_x, "Number of summed coordinates");
  gauss_sum->add_option("--q", q_text, "Coefficient matrix as JSON, e.g. [[1]]");
  gauss_sum->add_option("-i,--input", input, "{\"p\", \"dim_x\", \"Q\"} JSON, used when --q is absent");

  VerifyConfig vc;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"heisenberg", "group", "relations", "functor", "gaussian", "all"}));
  verify->add_option("--p", vc.p);
  verify->add_option("--n", vc.n);
  verify->add_option("--seed", vc.seed);
  verify->add_option("--trials", vc.trials);
  verify->add_option("--tolerance", vc.tolerance, "Proportionality residual bound");
  verify->add_option("--exact-tolerance", vc.exact_tolerance, "Bound for exact operator identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_sym) {
      const SymplecticSpace space(p, n);
      Rng rng(seed);
      emit(opt, json_io::element_to_json(random_element(space, rng)));
    } else if (*decomp) {
      const auto g = json_io::element_from_json(load(input));
      const auto word = decompose(g);
      log(opt, std::to_string(word.letters.size()) + " letters");
      emit(opt, json_io::word_to_json(word, g.space()));
    } else if (*weil_group) {
      const Json j = load(input);
      if (j.is_object() && j.contains("letters")) {
        const auto [word, space] = json_io::word_from_json(j);
        check_rows(opt, space.p(), space.n());
        emit(opt, json_io::operator_to_json(normalize(weil_of_word(word, space))));
      } else {
        const auto g = json_io::element_from_json(j);
        check_rows(opt, g.space().p(), g.space().n());
        const auto w = weil_of_group(g, tol);
        log(opt, "intertwining residual " + std::to_string(intertwining_residual(w, g)));
        emit(opt, json_io::operator_to_json(w));
      }
    } else if (*coc_group) {
      const auto g1 = json_io::element_from_json(load(first)), g2 = json_io::element_from_json(load(second));
      check_rows(opt, g1.space().p(), g1.space().n());
      const auto c = group_cocycle(g1, g2, tol);
      emit(opt, Json{{"c", json_io::complex_to_json(c)}, {"modulus", std::abs(c)}});
    } else if (*gen_rel) {
      const SymplecticSpace x(p, m), y(p, n);
      Rng rng(seed);
      emit(opt, json_io::relation_to_json(rank < 0 ? random_perfect_lagrangian(x, y, rng)
                                                   : random_perfect_lagrangian(x, y, rank, rng)));
    } else if (*comp_rel) {
      const auto s = json_io::relation_from_json(load(first)), t = json_io::relation_from_json(load(second));
      emit(opt, json_io::relation_to_json(compose(s, t)));
    } else if (*check_lag) {
      const auto t = json_io::relation_from_json(load(input));
      const auto st = structure(t);
      emit(opt, Json{{"perfect_lagrangian", is_perfect_lagrangian(t)},
                     {"dim", t.subspace().dim()},
                     {"expected_dim", t.m() + t.n()},
                     {"ker", json_io::subspace_to_json(st.ker)},
                     {"dom", json_io::subspace_to_json(st.dom)},
                     {"im", json_io::subspace_to_json(st.im)},
                     {"indef", json_io::subspace_to_json(st.indef)}});
    } else if (*weil_rel) {
      const auto t = json_io::relation_from_json(load(input));
      check_rows(opt, t.p(), std::max(t.m(), t.n()));
      const auto sol = solve_intertwining(t);
      log(opt, "nullity " + std::to_string(sol.nullity) + ", gap " + std::to_string(sol.gap()));
      Json out = json_io::operator_to_json(sol.op);
      out["solver"] = Json{{"nullity", sol.nullity}, {"largest", sol.largest}, {"smallest", sol.smallest},
                           {"next", sol.next}};
      emit(opt, out);
    } else if (*coc_rel) {
      const auto s = json_io::relation_from_json(load(first)), t = json_io::relation_from_json(load(second));
      const auto c = relation_cocycle(s, t, tol);
      emit(opt, Json{{"c", json_io::complex_to_json(c)}, {"modulus", std::abs(c)}});
    } else if (*gauss_eval) {
      const auto g = json_io::gaussian_from_json(load(input));
      check_rows(opt, g.p, std::max(g.mu, g.nu));
      emit(opt, json_io::operator_to_json(gaussian_matrix(g)));
    } else if (*gauss_sum) {
      Json q;
      if (!q_text.empty()) {
        try {
          q = Json::parse(q_text);
        } catch (const Json::parse_error& e) {
          throw ValidationError(std::string("--q is not JSON: ") + e.what());
        }
      } else {
        const Json doc = load(input);
        if (!doc.is_object() || !doc.contains("p") || !doc.contains("dim_x") || !doc.contains("Q"))
          throw ValidationError("gauss-sum input needs \"p\", \"dim_x\" and \"Q\"");
        p = doc["p"].get<int>();
        dim_x = doc["dim_x"].get<int>();
        q = doc["Q"];
      }
      PrimeField{p};
      if (!q.is_array()) throw ValidationError("Q must be a square array");
      const int dim = static_cast<int>(q.size());
      const auto form = json_io::form_from_json(q, p, dim);
      if (dim_x < 0 || dim_x > dim) throw ValidationError("dim_x must lie in [0, dim Q]");
      Json out = json_io::gauss_sum_to_json(gauss_sum_closed_form(form, dim_x), p);
      out["dim_x"] = dim_x;
      emit(opt, out);
    } else if (*verify) {
      const auto report = run_verify(suite, vc);
      for (const auto& r : report.properties)
        log(opt, (r.passed ? "PASS " : "FAIL ") + r.suite + "/" + r.name + " max " + sci(r.max_residual) +
                     (r.detail.empty() ? "" : " (" + r.detail + ")"));
      emit(opt, json_io::report_to_json(report));
      return report.passed() ? 0 : kExitVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {  // ValidationError and its kin
    std::cerr << "weilrep: invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "weilrep: invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "weilrep: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
