#pragma once

#include <cstdint>
#include <iosfwd>

#include "amalg/error.hpp"

namespace amalg {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

// Arithmetic in GF(p) on least non-negative residues, p < 2^31.
struct Zp {
  static Coeff add(Coeff a, Coeff b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  static Coeff sub(Coeff a, Coeff b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
  static Coeff neg(Coeff a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
  static Coeff mul(Coeff a, Coeff b, std::uint32_t p) {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p);
  }
  static Coeff inv(Coeff a, std::uint32_t p);
  static Coeff from_int(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    return static_cast<Coeff>(r < 0 ? r + p : r);
  }
  // Symmetric representative in (-p/2, p/2].
  static long long signed_value(Coeff a, std::uint32_t p) {
    return a > p / 2 ? static_cast<long long>(a) - p : static_cast<long long>(a);
  }
};

class FieldElem {
 public:
  FieldElem(long long value, std::uint32_t modulus);

  Coeff value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElem operator+(FieldElem o) const;
  FieldElem operator-(FieldElem o) const;
  FieldElem operator*(FieldElem o) const;
  FieldElem operator-() const { return {Zp::neg(value_, modulus_), modulus_, Unchecked{}}; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  struct Unchecked {};
  FieldElem(Coeff v, std::uint32_t p, Unchecked) : value_(v), modulus_(p) {}
  void check_same(const FieldElem& o) const;

  Coeff value_;
  std::uint32_t modulus_;

  friend FieldElem field_inverse(FieldElem a);
};

// Throws Errc::ZeroInverse for a = 0.
FieldElem field_inverse(FieldElem a);

std::ostream& operator<<(std::ostream& os, const FieldElem& a);

}  // namespace amalg
