#include "weilrep/symplectic.hpp"

#include <string>

namespace weilrep {

SymplecticSpace::SymplecticSpace(int p, int n) : p_(p), n_(n) {
  if (n < 0) throw DimensionError("half-dimension must be non-negative");
  if (!is_prime(p) || p == 2) throw ValidationError("modulus must be an odd prime");
}

int SymplecticSpace::form(const FpVector& u, const FpVector& v) const {
  if (static_cast<int>(u.size()) != dim() || static_cast<int>(v.size()) != dim())
    throw DimensionError("symplectic form: vectors must have length 2n = " + std::to_string(dim()));
  std::int64_t acc = 0;
  for (int j = 0; j < n_; ++j) acc += std::int64_t{u[j]} * v[n_ + j] - std::int64_t{u[n_ + j]} * v[j];
  return mod_reduce(acc, p_);
}

FpMatrix SymplecticSpace::gram() const {
  FpMatrix g(p_, dim(), dim());
  for (int j = 0; j < n_; ++j) {
    g.set(j, n_ + j, 1);
    g.set(n_ + j, j, -1);
  }
  return g;
}

Subspace SymplecticSpace::d_part() const {
  std::vector<int> idx;
  for (int j = 0; j < n_; ++j) idx.push_back(j);
  return Subspace::coordinate(p_, dim(), idx);
}

Subspace SymplecticSpace::c_part() const {
  std::vector<int> idx;
  for (int j = 0; j < n_; ++j) idx.push_back(n_ + j);
  return Subspace::coordinate(p_, dim(), idx);
}

FpMatrix difference_form_gram(const SymplecticSpace& source, const SymplecticSpace& target) {
  if (source.p() != target.p()) throw ValidationError("difference form: moduli differ");
  return FpMatrix::block_diag(source.gram(), -target.gram());
}

Subspace lozenge(const Subspace& r, const SymplecticSpace& space) {
  if (r.ambient() != space.dim()) throw DimensionError("lozenge: ambient dimension must be 2n");
  return orthocomplement(r, space.gram());
}

const char* to_string(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::lagrangian: return "lagrangian";
    case SubspaceKind::isotropic: return "isotropic";
    case SubspaceKind::coisotropic: return "coisotropic";
    case SubspaceKind::symplectic: return "symplectic";
    case SubspaceKind::none: return "none";
  }
  return "none";
}

bool is_isotropic(const Subspace& r, const SymplecticSpace& space) {
  if (r.ambient() != space.dim()) throw DimensionError("is_isotropic: ambient dimension must be 2n");
  if (r.dim() == 0) return true;
  return (r.basis() * space.gram() * r.basis().transpose()).is_zero();
}

SubspaceKind classify_subspace(const Subspace& r, const SymplecticSpace& space) {
  const Subspace perp = lozenge(r, space);
  if (r == perp) return SubspaceKind::lagrangian;
  if (perp.contains(r)) return SubspaceKind::isotropic;
  if (intersect(r, perp).dim() == 0) return SubspaceKind::symplectic;
  if (r.contains(perp)) return SubspaceKind::coisotropic;
  return SubspaceKind::none;
}

bool is_symplectic(const FpMatrix& m, const SymplecticSpace& space) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) return false;
  const FpMatrix omega = space.gram();
  return m * omega * m.transpose() == omega;
}

bool block_identities_hold(const FpMatrix& m, int n) {
  const FpMatrix a = m.block(0, 0, n, n), b = m.block(0, n, n, n);
  const FpMatrix c = m.block(n, 0, n, n), d = m.block(n, n, n, n);
  return a.transpose() * c == c.transpose() * a && a * b.transpose() == b * a.transpose() &&
         c * d.transpose() == d * c.transpose() &&
         a * d.transpose() - b * c.transpose() == FpMatrix::identity(m.p(), n);
}

// --- SymplecticElement ------------------------------------------------------

SymplecticElement::SymplecticElement(FpMatrix m, SymplecticSpace space)
    : m_(std::move(m)), space_(space) {
  if (m_.p() != space_.p()) throw ValidationError("symplectic element: modulus mismatch");
  if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
    throw DimensionError("symplectic element must be " + std::to_string(space_.dim()) + "x" +
                         std::to_string(space_.dim()));
  if (!is_symplectic(m_, space_)) throw ValidationError("matrix does not preserve the symplectic form");
}

SymplecticElement SymplecticElement::identity(const SymplecticSpace& space) {
  return {FpMatrix::identity(space.p(), space.dim()), space, Trusted{}};
}

SymplecticElement SymplecticElement::inverse() const {
  // g^{-1} = Omega^{-1} g^t Omega with Omega^{-1} = -Omega
  const FpMatrix omega = space_.gram();
  return {-(omega * m_.transpose() * omega), space_, Trusted{}};
}

SymplecticElement operator*(const SymplecticElement& g, const SymplecticElement& h) {
  if (!(g.space_ == h.space_)) throw ValidationError("product of elements of different groups");
  return {g.m_ * h.m_, g.space_, SymplecticElement::Trusted{}};
}

// --- generators -------------------------------------------------------------

namespace {

FpMatrix h_matrix(const FpMatrix& a) {
  const FpMatrix inv = a.inverse_or_throw();
  return FpMatrix::block_diag(a, inv.transpose());
}

FpMatrix j_matrix(int p, int n, int k) {
  FpMatrix m = FpMatrix::identity(p, 2 * n);
  const int x = k - 1, y = n + k - 1;
  m.set(x, x, 0);
  m.set(y, y, 0);
  m.set(x, y, 1);
  m.set(y, x, -1);
  return m;
}

bool is_identity_letter(const GeneratorLetter& letter) {
  if (auto* h = std::get_if<HLetter>(&letter)) return h->a == FpMatrix::identity(h->a.p(), h->a.rows());
  if (auto* nb = std::get_if<NplusLetter>(&letter)) return nb->b.is_zero();
  return false;
}

// Merges neighbouring H letters and drops identity letters.
GeneratorWord simplify(const std::vector<GeneratorLetter>& letters) {
  GeneratorWord out;
  for (const auto& letter : letters) {
    if (!out.letters.empty()) {
      auto* prev = std::get_if<HLetter>(&out.letters.back());
      auto* cur = std::get_if<HLetter>(&letter);
      if (prev && cur) {
        prev->a = prev->a * cur->a;
        if (is_identity_letter(out.letters.back())) out.letters.pop_back();
        continue;
      }
    }
    if (!is_identity_letter(letter)) out.letters.push_back(letter);
  }
  return out;
}

}  // namespace

SymplecticElement make_generator(const GeneratorLetter& letter, const SymplecticSpace& space) {
  const int p = space.p(), n = space.n();
  if (auto* h = std::get_if<HLetter>(&letter)) {
    if (h->a.rows() != n || h->a.cols() != n) throw DimensionError("H letter must carry an n x n matrix");
    if (!h->a.inverse()) throw ValidationError("H letter matrix is not invertible");
    return SymplecticElement(h_matrix(h->a), space);
  }
  if (auto* nb = std::get_if<NplusLetter>(&letter)) {
    if (nb->b.rows() != n || nb->b.cols() != n) throw DimensionError("Nplus letter must carry an n x n matrix");
    if (!nb->b.is_symmetric()) throw ValidationError("Nplus letter matrix is not symmetric");
    FpMatrix m = FpMatrix::identity(p, 2 * n);
    m.set_block(0, n, nb->b);
    return SymplecticElement(m, space);
  }
  const int k = std::get<JLetter>(letter).k;
  if (k < 1 || k > n) throw ValidationError("J index " + std::to_string(k) + " outside [1, n]");
  return SymplecticElement(j_matrix(p, n, k), space);
}

SymplecticElement evaluate(const GeneratorWord& word, const SymplecticSpace& space) {
  SymplecticElement g = SymplecticElement::identity(space);
  for (const auto& letter : word.letters) g = g * make_generator(letter, space);
  return g;
}

GeneratorWord decompose(const SymplecticElement& g) {
  const SymplecticSpace& space = g.space();
  const int p = space.p(), n = space.n();
  if (n == 0) return {};
  const FpMatrix a = g.a();

  // (i) invertible K, L with K a L = (0 0; 0 I_r)
  FpMatrix k_mat = FpMatrix::identity(p, n);
  FpMatrix l_mat;
  int r = n;
  if (auto a_inv = a.inverse()) {
    l_mat = *a_inv;
  } else {
    auto [red, e] = rref_with_transform(a);
    r = red.rank;
    std::vector<bool> is_pivot(n, false);
    for (int c : red.pivots) is_pivot[c] = true;
    FpMatrix col_ops = FpMatrix::identity(p, n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) col_ops.set(red.pivots[i], j, -std::int64_t{red.reduced(i, j)});
    const int l = n - r;
    FpMatrix col_perm(p, n, n), row_perm(p, n, n);
    int next_free = 0;
    for (int j = 0; j < n; ++j)
      if (!is_pivot[j]) col_perm.set(j, next_free++, 1);
    for (int i = 0; i < r; ++i) col_perm.set(red.pivots[i], l + i, 1);
    for (int i = 0; i < n; ++i) row_perm.set(i < r ? l + i : i - r, i, 1);
    k_mat = row_perm * e;
    l_mat = col_ops * col_perm;
  }
  const int l = n - r;

  const SymplecticElement g1 = SymplecticElement(h_matrix(k_mat), space) * g *
                               SymplecticElement(h_matrix(l_mat), space);

  // (ii) clear the lower-right corner of c with an N_- element
  const FpMatrix c22 = g1.c().block(l, l, r, r);
  FpMatrix corner(p, n, n);
  corner.set_block(l, l, c22);
  FpMatrix s = FpMatrix::identity(p, 2 * n);
  s.set_block(n, 0, -corner);
  const FpMatrix g2 = s * g1.matrix();

  // (iii) J_1..J_l swaps the degenerate coordinates; c vanishes afterwards
  FpMatrix swap = FpMatrix::identity(p, 2 * n);
  for (int k = 1; k <= l; ++k) swap = swap * j_matrix(p, n, k);
  const FpMatrix g3 = swap * g2;
  const FpMatrix a3 = g3.block(0, 0, n, n);
  const auto a3_inv = a3.inverse();
  if (!g3.block(n, 0, n, n).is_zero() || !a3_inv)
    throw ResidualError("decompose: reduction did not reach block upper-triangular form");

  // (iv) g3 = H(a3) N_+(a3^{-1} b3)
  const FpMatrix b0 = *a3_inv * g3.block(0, n, n, n);

  std::vector<GeneratorLetter> letters;
  letters.push_back(HLetter{k_mat.inverse_or_throw()});
  if (!c22.is_zero()) {
    // N_-(c) = J N_+(-c) J^{-1}, J = J_1..J_n, J^{-1} = H(-1) J
    for (int k = 1; k <= n; ++k) letters.push_back(JLetter{k});
    letters.push_back(NplusLetter{-corner});
    letters.push_back(HLetter{FpMatrix::identity(p, n).scaled(-1)});
    for (int k = 1; k <= n; ++k) letters.push_back(JLetter{k});
  }
  if (l > 0) {
    // (J_1..J_l)^{-1} = H(diag(-I_l, I_r)) J_1..J_l
    FpMatrix sign = FpMatrix::identity(p, n);
    for (int i = 0; i < l; ++i) sign.set(i, i, -1);
    letters.push_back(HLetter{sign});
    for (int k = 1; k <= l; ++k) letters.push_back(JLetter{k});
  }
  letters.push_back(HLetter{a3});
  letters.push_back(NplusLetter{b0});
  letters.push_back(HLetter{l_mat.inverse_or_throw()});

  GeneratorWord word = simplify(letters);
  if (!(evaluate(word, space) == g)) throw ResidualError("decompose: word does not reproduce the element");
  return word;
}

GeneratorLetter random_letter(const SymplecticSpace& space, Rng& rng) {
  const int p = space.p(), n = space.n();
  switch (rng.uniform(3)) {
    case 0: {
      for (;;) {
        FpMatrix a(p, n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) a.set(i, j, static_cast<int>(rng.uniform(p)));
        if (a.inverse()) return HLetter{a};
      }
    }
    case 1: {
      FpMatrix b(p, n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const int v = static_cast<int>(rng.uniform(p));
          b.set(i, j, v);
          b.set(j, i, v);
        }
      return NplusLetter{b};
    }
    default:
      return JLetter{rng.uniform_int(1, n)};
  }
}

GeneratorWord random_word(const SymplecticSpace& space, Rng& rng, int min_letters, int max_letters) {
  GeneratorWord word;
  if (space.n() == 0) return word;
  const int count = rng.uniform_int(min_letters, max_letters);
  for (int i = 0; i < count; ++i) word.letters.push_back(random_letter(space, rng));
  return word;
}

SymplecticElement random_element(const SymplecticSpace& space, Rng& rng) {
  return evaluate(random_word(space, rng), space);
}

// --- isotropic canonical form -------------------------------------------------

namespace {

// c with c . u = {u, w}
FpVector pairing_functional(const FpVector& w, const SymplecticSpace& space) {
  const int n = space.n();
  FpVector c(2 * n);
  for (int j = 0; j < n; ++j) {
    c[j] = w[n + j];
    c[n + j] = mod_reduce(-std::int64_t{w[j]}, space.p());
  }
  return c;
}

}  // namespace

FpMatrix extend_to_symplectic_basis(const Subspace& isotropic, const SymplecticSpace& space) {
  if (isotropic.ambient() != space.dim()) throw DimensionError("isotropic subspace must live in V_2n");
  if (!is_isotropic(isotropic, space)) throw ValidationError("subspace is not isotropic");
  const int p = space.p(), n = space.n(), k = isotropic.dim();
  std::vector<FpVector> us, ws;
  for (int i = 0; i < k; ++i) ws.push_back(isotropic.basis().row(i));

  for (int i = 0; i < k; ++i) {
    std::vector<FpVector> rows;
    FpVector rhs;
    for (int j = 0; j < k; ++j) {
      rows.push_back(pairing_functional(ws[j], space));
      rhs.push_back(i == j ? 1 : 0);
    }
    for (const auto& u : us) {
      rows.push_back(pairing_functional(u, space));
      rhs.push_back(0);
    }
    auto u = solve(FpMatrix::from_rows(p, rows, 2 * n), rhs);
    if (!u) throw ResidualError("symplectic basis extension: inconsistent dual system");
    us.push_back(*u);
  }

  std::vector<FpVector> done = us;
  done.insert(done.end(), ws.begin(), ws.end());
  Subspace rest = lozenge(Subspace::span(p, 2 * n, done), space);
  std::vector<FpVector> extra_u, extra_w;
  while (rest.dim() > 0) {
    const FpVector e = rest.basis().row(0);
    FpVector f;
    for (int j = 1; j < rest.dim(); ++j) {
      const int pairing = space.form(e, rest.basis().row(j));
      if (pairing != 0) {
        f = vec_scale(rest.basis().row(j), mod_inverse(pairing, p), p);
        break;
      }
    }
    if (f.empty()) throw ResidualError("symplectic basis extension: degenerate complement");
    extra_u.push_back(e);
    extra_w.push_back(f);
    rest = intersect(rest, lozenge(Subspace::span(p, 2 * n, {e, f}), space));
  }
  us.insert(us.end(), extra_u.begin(), extra_u.end());
  ws.insert(ws.end(), extra_w.begin(), extra_w.end());
  std::vector<FpVector> rows = us;
  rows.insert(rows.end(), ws.begin(), ws.end());
  return FpMatrix::from_rows(p, rows, 2 * n);
}

IsotropicCanonicalForm canonicalize_isotropic(const Subspace& m, const SymplecticSpace& space) {
  const FpMatrix basis = extend_to_symplectic_basis(m, space);
  // rows of `basis` are the images of the standard basis, so g = basis^{-1}
  SymplecticElement g(basis.inverse_or_throw(), space);
  std::vector<int> index_set;
  for (int i = 1; i <= m.dim(); ++i) index_set.push_back(i);
  return {g, index_set};
}

// --- reduced space --------------------------------------------------------------

ReducedSpace::ReducedSpace(const Subspace& coisotropic, const SymplecticSpace& space)
    : x_(coisotropic), radical_(lozenge(coisotropic, space)) {
  if (!x_.contains(radical_)) throw ValidationError("ReducedSpace: subspace is not coisotropic");
  const int p = space.p();
  Subspace spanned = radical_;
  std::vector<FpVector> chosen;
  for (int i = 0; i < x_.dim(); ++i) {
    const FpVector v = x_.basis().row(i);
    if (spanned.contains(v)) continue;
    chosen.push_back(v);
    spanned = spanned + Subspace::span(p, space.dim(), {v});
  }
  complement_ = chosen.empty() ? FpMatrix(p, 0, space.dim()) : FpMatrix::from_rows(p, chosen, space.dim());
  gram_ = complement_ * space.gram() * complement_.transpose();
}

Subspace ReducedSpace::image(const Subspace& s) const {
  if (!x_.contains(s)) throw ValidationError("ReducedSpace::image: subspace is not inside X");
  const int p = x_.p();
  const FpMatrix both = FpMatrix::vstack(complement_, radical_.basis());
  std::vector<FpVector> coords;
  for (int i = 0; i < s.dim(); ++i) {
    auto c = solve(both.transpose(), s.basis().row(i));
    if (!c) throw ResidualError("ReducedSpace::image: vector outside X");
    coords.emplace_back(c->begin(), c->begin() + dim());
  }
  return Subspace::span(p, dim(), coords);
}

Subspace ReducedSpace::orthocomplement(const Subspace& s) const { return weilrep::orthocomplement(s, gram_); }

}  // namespace weilrep
