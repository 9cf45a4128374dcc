#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "weilrep/errors.hpp"

namespace weilrep {

/// Largest prime accepted unless a caller raises the limit explicitly.
inline constexpr int kDefaultMaxPrime = 13;

/// The prime field F_p for an odd prime p, together with the additive
/// character Exp(k) = exp(2 pi i k / p).
///
/// The character is fixed once per field. Any other nontrivial choice
/// Exp(c k) with c != 0 only rescales cocycles; nothing in the library
/// depends on the particular choice.
class PrimeField {
 public:
  explicit PrimeField(int p, int max_prime = kDefaultMaxPrime);

  int p() const noexcept { return p_; }

  int reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const noexcept { return reduce(std::int64_t{a} + b); }
  int sub(int a, int b) const noexcept { return reduce(std::int64_t{a} - b); }
  int mul(int a, int b) const noexcept { return reduce(std::int64_t{a} * b); }
  int neg(int a) const noexcept { return a == 0 ? 0 : p_ - a; }
  /// Throws DivisionByZero for a == 0.
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  /// The element h with 2h = 1, i.e. (p + 1) / 2.
  int half() const noexcept { return (p_ + 1) / 2; }

  /// Legendre symbol (a/p) in {-1, 0, 1}.
  int legendre(int a) const;

  /// Exp(a) = e^{2 pi i a / p}.
  std::complex<double> character(int a) const { return roots_[reduce(a)]; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  int p_;
  std::vector<int> inverses_;
  std::vector<std::complex<double>> roots_;
};

bool is_prime(int p);

/// A residue in [0, p). Carries its modulus by value so it stays valid
/// independent of any PrimeField object. Mixing moduli throws.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::int64_t value)
      : p_(field.p()), value_(field.reduce(value)) {}

  int value() const noexcept { return value_; }
  int modulus() const noexcept { return p_; }

  /// Throws DivisionByZero for the zero element.
  FieldElement inv() const;
  std::complex<double> character() const;

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    check_same(a, b);
    return a.with((std::int64_t{a.value_} + b.value_) % a.p_);
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    check_same(a, b);
    return a.with((std::int64_t{a.value_} - b.value_ + a.p_) % a.p_);
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    check_same(a, b);
    return a.with((std::int64_t{a.value_} * b.value_) % a.p_);
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) { return a * b.inv(); }
  FieldElement operator-() const { return with(value_ == 0 ? 0 : p_ - value_); }

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }

 private:
  FieldElement(int p, int value, int) : p_(p), value_(value) {}
  FieldElement with(std::int64_t v) const { return {p_, static_cast<int>(v), 0}; }
  static void check_same(FieldElement a, FieldElement b);

  int p_;
  int value_;
};

}  // namespace weilrep
