#include "weilrep/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace weilrep {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p, int max_prime) : p_(p) {
  if (!is_prime(p) || p == 2)
    throw ValidationError("modulus must be an odd prime, got " + std::to_string(p));
  if (p > max_prime)
    throw ValidationError("modulus " + std::to_string(p) + " exceeds the configured limit " +
                          std::to_string(max_prime));
  inverses_.assign(p, 0);
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if ((a * b) % p == 1) inverses_[a] = b;
  roots_.reserve(p);
  for (int k = 0; k < p; ++k) {
    // exact values at k = 0 keep Exp(0) == 1 bit-for-bit
    if (k == 0) {
      roots_.emplace_back(1.0, 0.0);
      continue;
    }
    roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / p));
  }
}

int PrimeField::inv(int a) const {
  a = reduce(a);
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  return inverses_[a];
}

int PrimeField::legendre(int a) const {
  a = reduce(a);
  if (a == 0) return 0;
  for (int x = 1; x < p_; ++x)
    if (mul(x, x) == a) return 1;
  return -1;
}

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on (value, p)
  std::int64_t r0 = p_, r1 = value_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return with(((t0 % p_) + p_) % p_);
}

std::complex<double> FieldElement::character() const {
  if (value_ == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * value_ / p_);
}

void FieldElement::check_same(FieldElement a, FieldElement b) {
  if (a.p_ != b.p_)
    throw ValidationError("field elements from different fields");
}

}  // namespace weilrep
