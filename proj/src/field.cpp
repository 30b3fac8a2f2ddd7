#include "amalg/field.hpp"

#include <ostream>

namespace amalg {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::UnitIdeal: return "UnitIdeal";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::JUnit: return "JUnit";
    case Errc::ZeroModule: return "ZeroModule";
    case Errc::NotARing: return "NotARing";
    case Errc::NotAHom: return "NotAHom";
    case Errc::SizeCap: return "SizeCap";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownReference: return "UnknownReference";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Coeff Zp::inv(Coeff a, std::uint32_t p) {
  if (a == 0) throw Error(Errc::ZeroInverse, "0 has no inverse modulo " + std::to_string(p));
  // extended Euclid on signed 64-bit values
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<Coeff>(t);
}

FieldElem::FieldElem(long long value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= (1u << 31) || !is_prime(modulus))
    throw Error(Errc::InvalidArgument, "modulus " + std::to_string(modulus) + " is not a prime below 2^31");
  value_ = Zp::from_int(value, modulus);
}

void FieldElem::check_same(const FieldElem& o) const {
  if (o.modulus_ != modulus_) throw Error(Errc::ContextMismatch, "field elements over different primes");
}

FieldElem FieldElem::operator+(FieldElem o) const {
  check_same(o);
  return {Zp::add(value_, o.value_, modulus_), modulus_, Unchecked{}};
}

FieldElem FieldElem::operator-(FieldElem o) const {
  check_same(o);
  return {Zp::sub(value_, o.value_, modulus_), modulus_, Unchecked{}};
}

FieldElem FieldElem::operator*(FieldElem o) const {
  check_same(o);
  return {Zp::mul(value_, o.value_, modulus_), modulus_, Unchecked{}};
}

FieldElem field_inverse(FieldElem a) {
  return {Zp::inv(a.value_, a.modulus_), a.modulus_, FieldElem::Unchecked{}};
}

std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.value(); }

}  // namespace amalg
