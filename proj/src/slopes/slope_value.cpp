#include "cct/slopes/slope_value.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cct {

SlopeValue SlopeValue::rational(const Rational& q) {
  SlopeValue s;
  s.value_ = q;
  return s;
}

SlopeValue SlopeValue::infinity() {
  SlopeValue s;
  s.kind_ = Kind::infinity;
  return s;
}

SlopeValue SlopeValue::cf(std::vector<std::int64_t> prefix, std::vector<std::int64_t> period) {
  if (period.empty()) throw Error("bad_slope", "continued fraction needs a nonempty period");
  for (auto a : period)
    if (a < 1) throw Error("bad_slope", "period terms must be positive");
  for (std::size_t i = 1; i < prefix.size(); ++i)
    if (prefix[i] < 1) throw Error("bad_slope", "continued fraction terms after the first must be positive");
  if (prefix.empty()) {
    prefix.push_back(period.front());
    std::rotate(period.begin(), period.begin() + 1, period.end());
  }
  // Shortest form: absorb prefix tails that repeat the period.
  while (prefix.size() > 1 && prefix.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    prefix.pop_back();
  }
  for (std::size_t p = 1; p < period.size(); ++p) {
    if (period.size() % p) continue;
    bool repeats = true;
    for (std::size_t i = p; i < period.size() && repeats; ++i) repeats = period[i] == period[i - p];
    if (repeats) {
      period.resize(p);
      break;
    }
  }
  SlopeValue s;
  s.kind_ = Kind::cf;
  s.prefix_ = std::move(prefix);
  s.period_ = std::move(period);
  return s;
}

SlopeValue SlopeValue::sqrt(std::int64_t n) {
  if (n < 2) throw Error("bad_slope", "sqrt needs an integer above 1");
  std::int64_t a0 = 0;
  while ((a0 + 1) * (a0 + 1) <= n) ++a0;
  if (a0 * a0 == n) throw Error("bad_slope", "sqrt(" + std::to_string(n) + ") is rational");
  std::vector<std::int64_t> period;
  std::int64_t m = 0, d = 1, a = a0;
  do {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    period.push_back(a);
  } while (a != 2 * a0);
  return cf({a0}, period);
}

SlopeValue SlopeValue::golden() { return cf({1}, {1}); }

std::int64_t SlopeValue::term(std::size_t i) const {
  if (kind_ != Kind::cf) throw Error("bad_slope", "terms exist only for irrational slopes");
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

std::string SlopeValue::to_string() const {
  switch (kind_) {
    case Kind::rational: return cct::to_string(value_);
    case Kind::infinity: return "inf";
    case Kind::cf: break;
  }
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < prefix_.size(); ++i) os << (i == 0 ? "" : i == 1 ? "; " : ", ") << prefix_[i];
  os << (prefix_.size() == 1 ? "; (" : ", (");
  for (std::size_t i = 0; i < period_.size(); ++i) os << (i ? ", " : "") << period_[i];
  os << ")]";
  return os.str();
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Continued fraction of a rational, floor convention.
std::vector<Integer> rational_cf(const Rational& q) {
  std::vector<Integer> out;
  Integer p = numerator(q), r = denominator(q);
  while (r != 0) {
    const Integer a = floor_div(p, r);
    out.push_back(a);
    const Integer next = p - a * r;
    p = r;
    r = next;
  }
  return out;
}

/// Sign of [a] - w for an irrational w: alternating lexicographic order, where a
/// finished expansion counts as an infinite term.
int compare_terms(const std::vector<Integer>& a, const SlopeValue& w, std::size_t limit) {
  for (std::size_t i = 0; i < limit; ++i) {
    int c = 1;
    if (i < a.size()) {
      const Integer t = w.term(i);
      c = a[i] < t ? -1 : a[i] > t ? 1 : 0;
    }
    if (c != 0) return i % 2 == 0 ? c : -c;
  }
  return 0;
}

}  // namespace

int compare(const SlopeValue& a, const Rational& q) {
  switch (a.kind()) {
    case SlopeValue::Kind::rational: return a.value() < q ? -1 : a.value() > q ? 1 : 0;
    case SlopeValue::Kind::infinity: return 1;
    case SlopeValue::Kind::cf: break;
  }
  const auto terms = rational_cf(q);
  // An irrational never equals a rational, so the terms differ within reach.
  return -compare_terms(terms, a, terms.size() + 1);
}

int compare(const SlopeValue& a, const SlopeValue& b) {
  using K = SlopeValue::Kind;
  if (a.kind() == K::infinity || b.kind() == K::infinity)
    return (a.kind() == K::infinity) - (b.kind() == K::infinity);
  if (b.is_rational()) return compare(a, b.value());
  if (a.is_rational()) return -compare(b, a.value());
  const std::size_t limit = std::max(a.prefix().size(), b.prefix().size()) +
                            std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < limit; ++i) {
    const auto x = a.term(i), y = b.term(i);
    if (x != y) return (x < y ? -1 : 1) * (i % 2 == 0 ? 1 : -1);
  }
  return 0;
}

Rational convergent(const SlopeValue& w, std::size_t k) {
  Integer p_prev = 1, p = w.term(0), q_prev = 0, q = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const Integer a = w.term(i);
    const Integer pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  return Rational(p, q);
}

std::vector<Rational> approximation_chain(const SlopeValue& w, int n) {
  if (!w.is_irrational()) throw Error("rational_slope", "approximation chains need an irrational slope");
  std::vector<Rational> out;
  for (std::size_t k = 0; static_cast<int>(out.size()) < n; k += 2) {
    const Rational c = convergent(w, k);
    if (c > 0) out.push_back(c);
  }
  return out;
}

namespace {
std::vector<std::int64_t> parse_terms(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}
}  // namespace

SlopeValue parse_slope(const std::string& text) {
  try {
    if (text == "inf" || text == "infinity") return SlopeValue::infinity();
    if (text == "golden") return SlopeValue::golden();
    if (text.rfind("sqrt(", 0) == 0 && text.back() == ')')
      return SlopeValue::sqrt(std::stoll(text.substr(5, text.size() - 6)));
    if (text.rfind("sqrt", 0) == 0) return SlopeValue::sqrt(std::stoll(text.substr(4)));
    if (text.rfind("cf:", 0) == 0) {
      const auto body = text.substr(3);
      const auto slash = body.find('/');
      if (slash == std::string::npos) throw Error("bad_slope", "cf slope needs prefix/period");
      return SlopeValue::cf(parse_terms(body.substr(0, slash)), parse_terms(body.substr(slash + 1)));
    }
    return SlopeValue::rational(parse_rational(text));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("bad_slope", "cannot parse slope '" + text + "'");
  }
}

void to_json(nlohmann::json& j, const SlopeValue& s) {
  switch (s.kind()) {
    case SlopeValue::Kind::rational:
      j = {{"kind", "rational"},
           {"num", numerator(s.value()).str()},
           {"den", denominator(s.value()).str()}};
      return;
    case SlopeValue::Kind::infinity: j = {{"kind", "infinity"}}; return;
    case SlopeValue::Kind::cf: j = {{"kind", "cf"}, {"prefix", s.prefix()}, {"period", s.period()}}; return;
  }
}

void from_json(const nlohmann::json& j, SlopeValue& s) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "infinity") s = SlopeValue::infinity();
  else if (kind == "cf")
    s = SlopeValue::cf(j.at("prefix").get<std::vector<std::int64_t>>(),
                       j.at("period").get<std::vector<std::int64_t>>());
  else if (kind == "rational")
    s = SlopeValue::rational(parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>()));
  else throw Error("bad_slope", "unknown slope kind " + kind);
}

}  // namespace cct
