#pragma once

#include "cct/linalg/scalar.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cct {

/// A slope: a rational, infinity, or a quadratic irrational given by an
/// eventually periodic continued fraction [prefix; period, period, ...].
class SlopeValue {
 public:
  enum class Kind { rational, infinity, cf };

  SlopeValue() = default;
  static SlopeValue rational(const Rational& q);
  static SlopeValue infinity();
  /// Throws unless the period is nonempty with positive terms and every
  /// prefix term after the first is positive.
  static SlopeValue cf(std::vector<std::int64_t> prefix, std::vector<std::int64_t> period);
  /// sqrt(n) for a non-square n > 1.
  static SlopeValue sqrt(std::int64_t n);
  static SlopeValue golden();

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_irrational() const { return kind_ == Kind::cf; }
  const Rational& value() const { return value_; }
  const std::vector<std::int64_t>& prefix() const { return prefix_; }
  const std::vector<std::int64_t>& period() const { return period_; }

  /// Term i of the continued fraction of an irrational slope.
  std::int64_t term(std::size_t i) const;

  std::string to_string() const;
  bool operator==(const SlopeValue&) const = default;

 private:
  Kind kind_ = Kind::rational;
  Rational value_ = 0;
  std::vector<std::int64_t> prefix_, period_;
};

/// Exact three-way comparison: -1, 0 or 1.
int compare(const SlopeValue& a, const SlopeValue& b);
int compare(const SlopeValue& a, const Rational& q);

/// Accepts "3/7", "inf", "sqrt(5)", "golden" and "cf:1,2/3" (prefix 1,2; period 3).
SlopeValue parse_slope(const std::string& text);

/// Convergents p_k/q_k with even k, skipping nonpositive ones: a strictly
/// increasing sequence below w.
std::vector<Rational> approximation_chain(const SlopeValue& w, int n);

/// Convergent p_k/q_k of an irrational slope.
Rational convergent(const SlopeValue& w, std::size_t k);

void to_json(nlohmann::json& j, const SlopeValue& s);
void from_json(const nlohmann::json& j, SlopeValue& s);

}  // namespace cct
