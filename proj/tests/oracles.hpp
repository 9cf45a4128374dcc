#pragma once

// Brute-force reference implementations for the unit and acceptance suites.
// Everything here works by enumerating points of F_p^d and must not call into
// the elimination code it is used to check.

#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline std::vector<Vec> all_vectors(int p, int d) {
  std::vector<Vec> out;
  Vec v(d, 0);
  std::int64_t total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t t = idx;
    for (int i = d - 1; i >= 0; --i) {
      v[i] = static_cast<int>(t % p);
      t /= p;
    }
    out.push_back(v);
  }
  return out;
}

inline int mod(std::int64_t a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline int dot(const Vec& a, const Vec& b, int p) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::int64_t{a[i]} * b[i];
  return mod(s, p);
}

/// All linear combinations of the generators.
inline std::set<Vec> span_set(int p, int d, const std::vector<Vec>& gens) {
  std::set<Vec> out;
  for (const auto& coeffs : all_vectors(p, static_cast<int>(gens.size()))) {
    Vec v(d, 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (int i = 0; i < d; ++i) v[i] = mod(v[i] + std::int64_t{coeffs[g]} * gens[g][i], p);
    out.insert(v);
  }
  if (gens.empty()) out.insert(Vec(d, 0));
  return out;
}

/// log_p of a set size that is known to be a power of p.
inline int log_p(std::size_t size, int p) {
  int k = 0;
  while (size > 1) {
    size /= p;
    ++k;
  }
  return k;
}

/// Exp(a) computed independently of the library's character table.
inline std::complex<double> exp_char(std::int64_t a, int p) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(a, p)) / p);
}

/// {(x,y),(x',y')} = sum_j x_j y'_j - y_j x'_j on vectors of length 2n.
inline int symp(const Vec& u, const Vec& v, int p) {
  const std::size_t n = u.size() / 2;
  std::int64_t s = 0;
  for (std::size_t j = 0; j < n; ++j) s += std::int64_t{u[j]} * v[n + j] - std::int64_t{u[n + j]} * v[j];
  return mod(s, p);
}

}  // namespace oracle
