#include "cct/linalg/scalar.hpp"

#include <ostream>

namespace cct {

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

std::uint32_t common_modulus(const ModP& a, const ModP& b) {
  if (a.bound() && b.bound() && a.modulus() != b.modulus())
    throw Error("field_mismatch", "arithmetic between different prime fields");
  return a.bound() ? a.modulus() : b.modulus();
}

std::int64_t residue(const ModP& x, std::uint32_t p) {
  return x.bound() ? x.value() : reduce(x.value(), p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("invalid_field", "modulus " + std::to_string(p) + " is not prime");
  if (p > (1u << 30)) throw Error("invalid_field", "modulus too large");
  return {Kind::prime, p};
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? "Q" : "F_" + std::to_string(p);
}

ModP::ModP(std::int64_t v, std::uint32_t p) : raw_(reduce(v, p)), p_(p) {}

ModP operator+(const ModP& a, const ModP& b) {
  const auto p = common_modulus(a, b);
  if (p == 0) return ModP(static_cast<int>(a.raw_ + b.raw_));
  return ModP(residue(a, p) + residue(b, p), p);
}

ModP operator-(const ModP& a, const ModP& b) {
  const auto p = common_modulus(a, b);
  if (p == 0) return ModP(static_cast<int>(a.raw_ - b.raw_));
  return ModP(residue(a, p) - residue(b, p), p);
}

ModP operator*(const ModP& a, const ModP& b) {
  const auto p = common_modulus(a, b);
  if (p == 0) return ModP(static_cast<int>(a.raw_ * b.raw_));
  return ModP(residue(a, p) * residue(b, p), p);
}

ModP ModP::operator-() const {
  if (p_ == 0) return ModP(static_cast<int>(-raw_));
  return ModP(-raw_, p_);
}

ModP ModP::inverse() const {
  if (p_ == 0) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw Error("field_unbound", "inverse of an unbound prime-field literal");
  }
  if (raw_ == 0) throw Error("division_by_zero", "inverse of zero");
  std::int64_t a = raw_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    const std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return ModP(x0, p_);
}

bool operator==(const ModP& a, const ModP& b) {
  const auto p = common_modulus(a, b);
  if (p == 0) return a.raw_ == b.raw_;
  return residue(a, p) == residue(b, p);
}

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.value(); }

ModP field_traits<ModP>::from(const Rational& q, const FieldSpec& field) {
  if (field.kind != FieldSpec::Kind::prime)
    throw Error("field_mismatch", "prime-field scalar requested for a rational field");
  const Integer p = field.p;
  Integer num = boost::multiprecision::numerator(q) % p;
  Integer den = boost::multiprecision::denominator(q) % p;
  if (den == 0)
    throw Error("division_by_zero", "denominator vanishes modulo " + std::to_string(field.p));
  const ModP n(num.convert_to<std::int64_t>(), field.p);
  const ModP d(den.convert_to<std::int64_t>(), field.p);
  return n / d;
}

Rational parse_rational(const std::string& text) {
  try {
    if (text.empty()) throw std::invalid_argument("empty");
    Rational q(text);
    return q;
  } catch (const std::exception&) {
    throw Error("parse_error", "cannot parse rational '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace cct
