#include <doctest.h>

#include "oracles.hpp"
#include "weilrep/symplectic.hpp"

using namespace weilrep;

namespace {

Subspace random_isotropic(const SymplecticSpace& space, Rng& rng) {
  const SymplecticElement g = random_element(space, rng);
  const Subspace lagrangian = image_under(space.c_part(), g.matrix());
  const int k = rng.uniform_int(0, space.n());
  std::vector<FpVector> gens;
  for (int i = 0; i < k; ++i) {
    FpVector coeffs(space.n());
    for (auto& c : coeffs) c = static_cast<int>(rng.uniform(space.p()));
    gens.push_back(lagrangian.combine(coeffs));
  }
  return Subspace::span(space.p(), space.dim(), gens);
}

}  // namespace

TEST_CASE("symplectic form examples") {
  const SymplecticSpace v2(3, 1);
  CHECK(v2.form({1, 0}, {0, 1}) == 1);
  CHECK(v2.form({0, 1}, {1, 0}) == 2);
  CHECK(v2.form({2, 1}, {2, 1}) == 0);
  CHECK_THROWS_AS(v2.form({1, 0, 0}, {0, 1}), DimensionError);

  const SymplecticSpace v4(5, 2);
  Rng rng(1);
  const FpMatrix omega = v4.gram();
  for (int t = 0; t < 200; ++t) {
    FpVector u(4), v(4);
    for (int i = 0; i < 4; ++i) {
      u[i] = static_cast<int>(rng.uniform(5));
      v[i] = static_cast<int>(rng.uniform(5));
    }
    CHECK(v4.form(u, v) == dot(omega.apply(u), v, 5));
    CHECK(v4.form(u, v) == oracle::mod(-std::int64_t{v4.form(v, u)}, 5));
    CHECK(v4.form(u, v) == oracle::symp(u, v, 5));
  }
}

TEST_CASE("lozenge examples") {
  const SymplecticSpace v4(3, 2);
  CHECK(lozenge(v4.d_part(), v4) == v4.d_part());
  CHECK(lozenge(Subspace::zero(3, 4), v4) == Subspace::full(3, 4));
  const Subspace r = Subspace::coordinate(3, 4, {0});
  const Subspace perp = lozenge(r, v4);
  CHECK(perp == Subspace::coordinate(3, 4, {0, 1, 3}));
  int count = 0;
  for (const auto& v : oracle::all_vectors(3, 4))
    if (oracle::symp(v, {1, 0, 0, 0}, 3) == 0) {
      ++count;
      CHECK(perp.contains(v));
    }
  CHECK(count == 27);
}

TEST_CASE("lozenge is a dimension-complementary involution") {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform_int(1, 3);
    const SymplecticSpace space(t % 2 ? 3 : 5, n);
    std::vector<FpVector> gens;
    const int k = rng.uniform_int(0, 2 * n);
    for (int i = 0; i < k; ++i) {
      FpVector v(2 * n);
      for (auto& x : v) x = static_cast<int>(rng.uniform(space.p()));
      gens.push_back(v);
    }
    const Subspace r = Subspace::span(space.p(), 2 * n, gens);
    const Subspace perp = lozenge(r, space);
    CHECK(r.dim() + perp.dim() == 2 * n);
    CHECK(lozenge(perp, space) == r);
  }
}

TEST_CASE("classify subspaces") {
  const SymplecticSpace v4(3, 2);
  CHECK(classify_subspace(v4.d_part(), v4) == SubspaceKind::lagrangian);
  CHECK(classify_subspace(Subspace::coordinate(3, 4, {0, 2}), v4) == SubspaceKind::symplectic);
  CHECK(classify_subspace(Subspace::coordinate(3, 4, {0, 1, 3}), v4) == SubspaceKind::coisotropic);
  CHECK(classify_subspace(Subspace::span(3, 4, {{1, 2, 0, 1}}), v4) == SubspaceKind::isotropic);
  CHECK(classify_subspace(Subspace::span(3, 4, {{1, 0, 0, 0}, {0, 0, 1, 1}}), v4) == SubspaceKind::symplectic);
  // in V_6: x1, y1, x2 spans a space that is neither isotropic, symplectic nor coisotropic
  const SymplecticSpace v6(3, 3);
  CHECK(classify_subspace(Subspace::coordinate(3, 6, {0, 3, 1}), v6) == SubspaceKind::none);
  const SymplecticSpace v2(5, 1);
  CHECK(classify_subspace(Subspace::full(5, 2), v2) == SubspaceKind::symplectic);
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    FpVector v(4);
    for (auto& x : v) x = static_cast<int>(rng.uniform(3));
    if (is_zero(v)) continue;
    CHECK(classify_subspace(Subspace::span(3, 4, {v}), v4) == SubspaceKind::isotropic);
  }
}

TEST_CASE("is_symplectic examples") {
  const SymplecticSpace v2(3, 1);
  CHECK(is_symplectic(FpMatrix::identity(3, 2), v2));
  CHECK(is_symplectic(FpMatrix(3, 2, 2, {0, 1, -1, 0}), v2));
  CHECK_FALSE(is_symplectic(FpMatrix(3, 2, 2, {2, 0, 0, 1}), v2));
  CHECK_THROWS_AS(SymplecticElement(FpMatrix(3, 2, 2, {2, 0, 0, 1}), v2), ValidationError);
}

TEST_CASE("exhaustive form preservation at n=1, p=3") {
  const SymplecticSpace v2(3, 1);
  int group_order = 0;
  for (const auto& entries : oracle::all_vectors(3, 4)) {
    const FpMatrix m(3, 2, 2, {entries[0], entries[1], entries[2], entries[3]});
    bool preserves = true;
    for (const auto& u : oracle::all_vectors(3, 2))
      for (const auto& v : oracle::all_vectors(3, 2))
        preserves = preserves && oracle::symp(m.apply(u), m.apply(v), 3) == oracle::symp(u, v, 3);
    CHECK(is_symplectic(m, v2) == preserves);
    if (preserves) {
      ++group_order;
      CHECK(block_identities_hold(m, 1));
    }
  }
  CHECK(group_order == 24);  // |SL(2,3)|
}

TEST_CASE("random elements preserve the form at n=2") {
  const SymplecticSpace v4(3, 2);
  Rng rng(99);
  for (int t = 0; t < 1000; ++t) {
    const SymplecticElement g = random_element(v4, rng);
    FpVector u(4), v(4);
    for (int i = 0; i < 4; ++i) {
      u[i] = static_cast<int>(rng.uniform(3));
      v[i] = static_cast<int>(rng.uniform(3));
    }
    CHECK(oracle::symp(g.act(u), g.act(v), 3) == oracle::symp(u, v, 3));
    if (t % 10 == 0) CHECK(block_identities_hold(g.matrix(), 2));
  }
}

TEST_CASE("the commuting form c^t a = a c^t is not a group identity for n >= 2") {
  // N_-(c) H(a) has blocks (a, 0; c a, a^{-t}); a^t (c a) is symmetric but
  // a (c a)^t generally differs from (c a)^t a.
  const SymplecticSpace v4(3, 2);
  FpMatrix c(3, 2, 2, {1, 0, 0, 0});
  FpMatrix nminus = FpMatrix::identity(3, 4);
  nminus.set_block(2, 0, c);
  const SymplecticElement g = SymplecticElement(nminus, v4) *
                              make_generator(HLetter{FpMatrix(3, 2, 2, {1, 1, 0, 1})}, v4);
  CHECK(block_identities_hold(g.matrix(), 2));
  CHECK_FALSE(g.c().transpose() * g.a() == g.a() * g.c().transpose());
}

TEST_CASE("generators") {
  const SymplecticSpace v2(3, 1);
  CHECK(make_generator(HLetter{FpMatrix::identity(3, 1)}, v2) == SymplecticElement::identity(v2));
  CHECK(make_generator(NplusLetter{FpMatrix(3, 1, 1)}, v2) == SymplecticElement::identity(v2));
  CHECK(make_generator(JLetter{1}, v2).matrix() == FpMatrix(3, 2, 2, {0, 1, 2, 0}));

  const SymplecticSpace v6(5, 3);
  const auto j2 = make_generator(JLetter{2}, v6);
  CHECK(j2.act({0, 1, 0, 0, 0, 0}) == FpVector{0, 0, 0, 0, 1, 0});
  CHECK(j2.act({0, 0, 0, 0, 1, 0}) == FpVector{0, 4, 0, 0, 0, 0});
  CHECK(j2.act({1, 0, 1, 1, 0, 1}) == FpVector{1, 0, 1, 1, 0, 1});

  CHECK_THROWS_AS(make_generator(HLetter{FpMatrix(3, 1, 1)}, v2), ValidationError);
  CHECK_THROWS_AS(make_generator(NplusLetter{FpMatrix(5, 3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 0})}, v6),
                  ValidationError);
  CHECK_THROWS_AS(make_generator(JLetter{0}, v2), ValidationError);
  CHECK_THROWS_AS(make_generator(JLetter{2}, v2), ValidationError);
}

TEST_CASE("decompose examples") {
  const SymplecticSpace v4(3, 2);
  CHECK(decompose(SymplecticElement::identity(v4)).letters.empty());
  const FpMatrix b(3, 2, 2, {1, 2, 2, 0});
  const auto word = decompose(make_generator(NplusLetter{b}, v4));
  REQUIRE(word.letters.size() == 1);
  REQUIRE(std::holds_alternative<NplusLetter>(word.letters[0]));
  CHECK(std::get<NplusLetter>(word.letters[0]).b == b);
  CHECK(decompose(SymplecticElement::identity(SymplecticSpace(3, 0))).letters.empty());
}

TEST_CASE("decompose then evaluate is the identity on Sp(2n, p)") {
  for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}, {5, 2}, {3, 3}, {7, 2}}) {
    const SymplecticSpace space(p, n);
    Rng rng = Rng::stream(17, static_cast<std::uint64_t>(p * 10 + n));
    for (int t = 0; t < 120; ++t) {
      const SymplecticElement g = random_element(space, rng);
      const GeneratorWord word = decompose(g);
      CHECK(evaluate(word, space) == g);
      for (const auto& letter : word.letters) {
        if (auto* h = std::get_if<HLetter>(&letter)) CHECK(h->a.inverse().has_value());
        if (auto* nb = std::get_if<NplusLetter>(&letter)) CHECK(nb->b.is_symmetric());
        if (auto* j = std::get_if<JLetter>(&letter)) CHECK((j->k >= 1 && j->k <= n));
      }
    }
  }
}

TEST_CASE("group inverse") {
  const SymplecticSpace v4(5, 2);
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_element(v4, rng);
    CHECK(g * g.inverse() == SymplecticElement::identity(v4));
  }
}

TEST_CASE("canonicalize isotropic subspaces") {
  const SymplecticSpace v2(3, 1);
  {
    const auto form = canonicalize_isotropic(v2.d_part(), v2);
    CHECK(form.index_set == std::vector<int>{1});
    CHECK(image_under(v2.d_part(), form.g.matrix()) == v2.c_part());
    // J_1 also does the job
    CHECK(v2.c_part().contains(make_generator(JLetter{1}, v2).act({1, 0})));
  }
  const SymplecticSpace v4(3, 2);
  {
    const Subspace m = Subspace::coordinate(3, 4, {3});
    const auto form = canonicalize_isotropic(m, v4);
    CHECK(image_under(m, form.g.matrix()) == Subspace::coordinate(3, 4, {2}));
  }
  CHECK_THROWS_AS(canonicalize_isotropic(Subspace::coordinate(3, 4, {0, 2}), v4), ValidationError);

  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const SymplecticSpace space(t % 3 ? 3 : 5, rng.uniform_int(1, 3));
    const Subspace m = random_isotropic(space, rng);
    const auto form = canonicalize_isotropic(m, space);
    std::vector<int> coords;
    for (int alpha : form.index_set) coords.push_back(space.n() + alpha - 1);
    CHECK(static_cast<int>(form.index_set.size()) == m.dim());
    CHECK(image_under(m, form.g.matrix()) == Subspace::coordinate(space.p(), space.dim(), coords));
  }
}

TEST_CASE("reduced space of a coisotropic subspace") {
  const SymplecticSpace v4(3, 2);
  const Subspace x = Subspace::coordinate(3, 4, {0, 1, 3});  // (e_1^d)^lozenge
  const ReducedSpace red(x, v4);
  CHECK(red.dim() == 2);
  CHECK(red.gram().rank() == 2);
  CHECK_THROWS_AS(ReducedSpace(Subspace::coordinate(3, 4, {0}), v4), ValidationError);
}
