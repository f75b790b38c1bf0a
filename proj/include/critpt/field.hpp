#ifndef CRITPT_FIELD_HPP
#define CRITPT_FIELD_HPP

#include <cstdint>
#include <string>

#include "critpt/errors.hpp"

namespace critpt {

using Coeff = std::uint32_t;

inline constexpr Coeff kDefaultPrime = 65521;

/// GF(p) for an odd prime p < 2^16. Elements are plain residues in [0, p),
/// so a product of two of them fits in 32 bits and sums of many products
/// fit in 64 bits without reduction.
class PrimeField {
public:
  explicit PrimeField(Coeff p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (1u << 16) || !is_prime(p))
      throw UndefinedInput("field modulus must be an odd prime below 65536, got " +
                           std::to_string(p));
  }

  Coeff modulus() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff reduce_u64(std::uint64_t v) const { return static_cast<Coeff>(v % p_); }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} * b) % p_); }

  /// Extended Euclid.
  Coeff inv(Coeff a) const {
    if (a % p_ == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return reduce(t);
  }

  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff pow(Coeff a, std::uint64_t e) const {
    Coeff result = 1, base = a % p_;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  static bool is_prime(Coeff v) {
    if (v < 2) return false;
    for (Coeff d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }

private:
  Coeff p_;
};

}  // namespace critpt

#endif  // CRITPT_FIELD_HPP
