#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace cct {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Thrown for every domain error raised by the library; `code` is a stable
/// machine-readable tag surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

bool is_prime(std::uint64_t n);

/// Base field of an algebra: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;
};

/// Element of F_p with the modulus carried alongside the value.
///
/// A default-constructed or int-constructed element is "unbound": it behaves
/// like a small integer until it meets a bound element, at which point it
/// adopts that modulus. Eigen creates such values through `Scalar(0)` and
/// `Scalar(1)`.
class ModP {
 public:
  ModP() = default;
  ModP(int v) : raw_(v) {}  // NOLINT(google-explicit-constructor)
  ModP(std::int64_t v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  /// Canonical representative in [0, p) when bound, the raw integer otherwise.
  std::int64_t value() const { return raw_; }

  ModP inverse() const;

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP operator-() const;
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

  friend bool operator==(const ModP& a, const ModP& b);
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const ModP& x);

 private:
  std::int64_t raw_ = 0;
  std::uint32_t p_ = 0;
};

/// Field-dependent behaviour the elimination routines need. Only exact fields
/// get a specialization; `Integer` deliberately has none.
template <class S>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool is_field = true;
  static Rational from(const Rational& q, const FieldSpec&) { return q; }
  static Rational inverse(const Rational& x) { return Rational(1) / x; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string to_string(const Rational& x) { return x.str(); }
};

template <>
struct field_traits<ModP> {
  static constexpr bool is_field = true;
  static ModP from(const Rational& q, const FieldSpec& field);
  static ModP inverse(const ModP& x) { return x.inverse(); }
  static bool is_zero(const ModP& x) { return x == ModP(0); }
  static std::string to_string(const ModP& x) { return std::to_string(x.value()); }
};

template <class S>
concept ExactField = requires {
  requires field_traits<S>::is_field;
};

/// Parses "3", "-2", "5/7".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace cct

namespace Eigen {

template <>
struct NumTraits<cct::ModP> : GenericNumTraits<cct::ModP> {
  using Real = cct::ModP;
  using NonInteger = cct::ModP;
  using Literal = cct::ModP;
  using Nested = cct::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
};

}  // namespace Eigen
