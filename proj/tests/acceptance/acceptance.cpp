// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include "cct/algebra/grothendieck.hpp"
#include "cct/algebra/presentation.hpp"
#include "cct/slopes/tubular.hpp"
#include "cct/verify/verify.hpp"
#include "cct/ziegler/ziegler.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace cct;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string weights_str(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

Outcome from_sweep(const SweepReport& r, double limit_seconds) {
  std::ostringstream os;
  os << r.name << ": checked " << r.checked << ", mismatches " << r.mismatches;
  for (const auto& f : r.failures) os << "; " << f;
  const bool in_time = r.seconds < limit_seconds;
  if (!in_time) os << "; exceeded " << limit_seconds << " s";
  return {r.ok() && in_time, os.str()};
}

Outcome k0_rank_formula() {
  const std::vector<std::vector<int>> cases = {{}, {2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}, {2, 3, 5}};
  Outcome o{true, ""};
  for (const auto& w : cases) {
    int expected = 2;
    for (int p : w) expected += p - 1;
    const auto curve = make_curve(w);
    const int rank = k0_rank(curve);
    const int vertices = build_canonical(curve).presentation.vertex_count();
    o.detail += weights_str(w) + "=" + std::to_string(rank) + " ";
    if (rank != expected || vertices != expected) {
      o.pass = false;
      o.detail += "[expected " + std::to_string(expected) + ", vertices " + std::to_string(vertices) + "] ";
    }
  }
  return o;
}

Outcome type_gate() {
  const std::vector<std::pair<std::vector<int>, ReprType>> cases = {
      {{2, 2, 2, 2}, ReprType::Tubular}, {{3, 3, 3}, ReprType::Tubular}, {{2, 4, 4}, ReprType::Tubular},
      {{2, 3, 6}, ReprType::Tubular},    {{}, ReprType::Domestic},       {{2, 3}, ReprType::Domestic},
      {{2, 2, 2}, ReprType::Domestic},   {{2, 2, 3}, ReprType::Domestic}, {{2, 2, 4}, ReprType::Domestic},
      {{2, 2, 5}, ReprType::Domestic},   {{2, 2, 6}, ReprType::Domestic}, {{2, 3, 3}, ReprType::Domestic},
      {{2, 3, 4}, ReprType::Domestic},   {{2, 3, 5}, ReprType::Domestic}, {{2, 3, 7}, ReprType::Wild},
      {{3, 3, 4}, ReprType::Wild}};
  Outcome o{true, std::to_string(cases.size()) + " weight lists"};
  for (const auto& [w, t] : cases) {
    const auto got = classify_type(make_curve(w));
    if (got != t) {
      o.pass = false;
      o.detail += "; " + weights_str(w) + " gave " + to_string(got);
    }
  }
  return o;
}

Outcome branch_counts() {
  auto r = verify_branch_counts();
  auto o = from_sweep(r, 60);
  const auto& per = r.details.at("per_tube");
  const bool counts = per.at("1") == 1 && per.at("2") == 3 && per.at("3") == 10;
  if (!counts) o.detail += "; per-tube counts " + per.dump();
  o.pass = o.pass && counts;
  return o;
}

Outcome summand_bound() {
  auto r = verify_summand_bound();
  auto o = from_sweep(r, 600);
  const auto& d = r.details.begin().value();
  o.detail += ", bound " + d.at("bound").dump() + ", largest " + d.at("largest").dump();
  o.pass = o.pass && d.at("bound") == 8;
  return o;
}

Outcome injectivity() {
  auto r = verify_injectivity();
  auto o = from_sweep(r, 120);
  const auto& d = r.details.begin().value();
  const bool full = d.at("branches") == 1000 && d.at("point_sets") == 32 && d.at("distinct") == 32000;
  if (!full) o.detail += "; " + d.dump();
  o.pass = o.pass && full;
  return o;
}

/// p/q < w by integer cross-multiplication, for w = sqrt(n) or the golden ratio.
bool below_sqrt(const Rational& c, long n) {
  const Integer p = numerator(c), q = denominator(c);
  return p < 0 || p * p < q * q * n;
}
bool below_golden(const Rational& c) {
  // p/q < (1 + sqrt 5)/2  <=>  2p - q < q sqrt 5
  const Integer p = numerator(c), q = denominator(c);
  const Integer t = 2 * p - q;
  return t < 0 || t * t < 5 * q * q;
}

Outcome irrational_slopes() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{true, ""};
  const std::vector<std::pair<std::string, SlopeValue>> slopes = {{"sqrt2", SlopeValue::sqrt(2)},
                                                                  {"golden", SlopeValue::golden()}};
  for (const auto& w : {std::vector<int>{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}}) {
    const auto curve = make_curve(w);
    for (const auto& [name, s] : slopes) {
      const auto c = classify_at_slope(curve, s);
      const bool one_each = c.irrational.size() == 2 && c.irrational.count("lukas_slope") == 1 &&
                            c.irrational.count("cotilting_slope") == 1 && c.pair_count() == 0;
      if (!one_each) {
        o.pass = false;
        o.detail += weights_str(w) + " " + name + " symbols wrong; ";
      }
    }
  }
  for (const auto& [name, s] : slopes) {
    const auto chain = approximation_chain(s, 8);
    bool ok = chain.size() == 8;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const Integer p = numerator(chain[i]), q = denominator(chain[i]);
      if (i > 0 && !(numerator(chain[i - 1]) * q < p * denominator(chain[i - 1]))) ok = false;
      if (!(name == "sqrt2" ? below_sqrt(chain[i], 2) : below_golden(chain[i]))) ok = false;
    }
    o.detail += name + " chain";
    for (const auto& c : chain) o.detail += " " + to_string(c);
    o.detail += "; ";
    o.pass = o.pass && ok;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1) {
    o.pass = false;
    o.detail += "exceeded 1 s";
  }
  return o;
}

Outcome ziegler_lists() {
  using K = PureInjectiveDescriptor::Kind;
  Outcome o{true, ""};
  for (const auto& w : {std::vector<int>{}, {2, 3}, {2, 2, 5}, {2, 3, 5}}) {
    const auto z = ziegler_list(make_curve(w));
    std::multiset<std::pair<K, bool>> kinds;
    for (const auto& d : z.items) kinds.insert({d.kind, d.family});
    const std::multiset<std::pair<K, bool>> expected = {
        {K::FinDimFamily, true}, {K::Prufer, true}, {K::Adic, true}, {K::Generic, false}};
    if (kinds != expected) {
      o.pass = false;
      o.detail += weights_str(w) + " domestic list differs; ";
    }
  }
  o.detail += "domestic: 4 families; ";

  const auto curve = make_curve({3, 3, 3});
  const auto z = ziegler_list(curve, SlopeValue::rational(1));
  std::set<std::pair<std::string, int>> prufer, adic;
  int generic = 0;
  for (const auto& d : z.items) {
    if (d.kind == K::Generic) ++generic;
    if (d.family) continue;
    if (d.kind == K::Prufer) prufer.insert({d.point, d.index});
    if (d.kind == K::Adic) adic.insert({d.point, d.index});
  }
  for (const auto& p : points(curve))
    for (int k = 0; k < p.rank; ++k)
      if (!prufer.count({p.id, k}) || !adic.count({p.id, k})) {
        o.pass = false;
        o.detail += "missing Prufer/adic at " + p.id + "; ";
      }
  if (generic != 1) {
    o.pass = false;
    o.detail += "generic count " + std::to_string(generic) + "; ";
  }
  o.detail += "w=1: " + std::to_string(prufer.size()) + " Prufer, " + std::to_string(adic.size()) +
              " adic, " + std::to_string(generic) + " generic; boundary";

  for (const auto& w : {std::vector<int>{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}}) {
    const auto b = boundary_data(make_curve(w));
    const bool ok = b.m == b.l && b.m >= 1 && classify_type(make_curve(b.lambda0_weights)) == ReprType::Domestic &&
                    classify_type(make_curve(b.lambda_inf_weights)) == ReprType::Domestic;
    o.detail += " " + weights_str(w) + " m=" + std::to_string(b.m) + " l=" + std::to_string(b.l) + " " +
                weights_str(b.lambda0_weights) + "/" + weights_str(b.lambda_inf_weights);
    o.pass = o.pass && ok;
  }
  return o;
}

}  // namespace

int main() {
  SweepOptions ar;
  ar.samples = 100;
  SweepOptions euler;
  euler.samples = 50;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"K0 rank", k0_rank_formula},
      {"type gate", type_gate},
      {"tube vs engine", [] { return from_sweep(verify_tube_vs_engine(), 180); }},
      {"AR formula", [&] { return from_sweep(verify_ar_formula(ar), 120); }},
      {"Euler identity", [&] { return from_sweep(verify_euler(euler), 120); }},
      {"branch counts", branch_counts},
      {"summand bound", summand_bound},
      {"injectivity", injectivity},
      {"localization laws", [] { return from_sweep(verify_localization_laws(), 120); }},
      {"irrational slopes", irrational_slopes},
      {"Prufer/adic rules", [] { return from_sweep(verify_prufer_adic_rules(), 120); }},
      {"Ziegler lists", ziegler_lists},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << "Criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << o.detail << "] " << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
