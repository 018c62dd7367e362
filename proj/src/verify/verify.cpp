#include "cct/verify/verify.hpp"

#include "cct/algebra/grothendieck.hpp"
#include "cct/branch/branch.hpp"
#include "cct/classify/tilting.hpp"
#include "cct/localization/localization.hpp"
#include "cct/rep/tube_modules.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace cct {

void SweepReport::fail(std::string what) {
  ++mismatches;
  if (failures.size() < 10) failures.push_back(std::move(what));
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string weights_tag(const CurveData& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.weights.size(); ++i) os << (i ? "," : "") << c.weights[i];
  os << ")/" << c.field.to_string();
  return os.str();
}

std::vector<CurveData> curves_or(const SweepOptions& opt, std::vector<CurveData> fallback) {
  return opt.curves.empty() ? fallback : opt.curves;
}

CurveData over_f101(std::vector<int> w) { return make_curve(std::move(w), FieldSpec::prime(101)); }

/// Runs `body` with a realizer over the field of the curve.
template <class F>
void with_field(const CurveData& curve, F&& body) {
  if (curve.field.kind == FieldSpec::Kind::prime) {
    TubeRealizer<ModP> tubes(canonical_context<ModP>(curve));
    body(tubes);
  } else {
    TubeRealizer<Rational> tubes(canonical_context<Rational>(curve));
    body(tubes);
  }
}

template <class S>
struct Tagged {
  std::string tag;
  Representation<S> rep;
};

/// Indecomposables of small dimension: projectives, injectives, simples,
/// two steps of their tau-orbits and short tube objects.
template <class S>
std::vector<Tagged<S>> module_pool(TubeRealizer<S>& tubes) {
  const auto& ctx = tubes.context().ctx;
  std::vector<Tagged<S>> pool;
  for (int v = 0; v < ctx.vertex_count(); ++v) {
    const auto vs = std::to_string(v);
    pool.push_back({"P(" + vs + ")", projective_module(ctx, v)});
    pool.push_back({"I(" + vs + ")", injective_module(ctx, v)});
    pool.push_back({"S(" + vs + ")", simple_module(ctx, v)});
    auto p = pool[pool.size() - 3].rep;
    auto i = pool[pool.size() - 2].rep;
    for (int k = 1; k <= 2; ++k) {
      p = tau_inverse(ctx, p);
      i = tau(ctx, i);
      if (!p.is_zero()) pool.push_back({"tau^-" + std::to_string(k) + " P(" + vs + ")", p});
      if (!i.is_zero()) pool.push_back({"tau^" + std::to_string(k) + " I(" + vs + ")", i});
    }
  }
  for (const auto& pt : points(tubes.context().curve()))
    for (int s = 0; s < pt.rank; ++s)
      for (int l = 1; l <= std::min(pt.rank + 1, 3); ++l) {
        const auto x = tube_object({pt.id, pt.rank}, s, l);
        pool.push_back({tube_tag(x), tubes.get(x)});
      }
  return pool;
}

std::vector<TubeObject> exceptional_objects(const CurveData& curve, int max_length) {
  std::vector<TubeObject> out;
  for (const auto& p : exceptional_points(curve))
    for (int s = 0; s < p.rank; ++s)
      for (int l = 1; l <= max_length; ++l) out.push_back(tube_object({p.id, p.rank}, s, l));
  return out;
}

template <class S>
void compare_tube_pairs(SweepReport& r, TubeRealizer<S>& tubes, const std::vector<TubeObject>& objects,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const std::string& label) {
  const auto& ctx = tubes.context().ctx;
  std::map<std::size_t, Syzygy<S>> omega;
  for (const auto& [a, b] : pairs) {
    const auto& ra = tubes.get(objects[a]);
    const auto& rb = tubes.get(objects[b]);
    auto it = omega.find(a);
    if (it == omega.end()) it = omega.emplace(a, syzygy(ctx, ra)).first;
    const Index hom = hom_space(ctx, ra, rb).dim;
    const Index ext = ext1_dim(ctx, it->second, ra, rb);
    ++r.checked;
    if (hom != hom_dim(objects[a], objects[b]) || ext != ext1_dim(objects[a], objects[b]))
      r.fail(label + " " + to_string(objects[a]) + " -> " + to_string(objects[b]) + ": engine hom " +
             std::to_string(hom) + " ext " + std::to_string(ext) + ", symbolic hom " +
             std::to_string(hom_dim(objects[a], objects[b])) + " ext " +
             std::to_string(ext1_dim(objects[a], objects[b])));
  }
}

}  // namespace

SweepReport verify_tube_vs_engine(const SweepOptions& opt) {
  Stopwatch clock;
  SweepReport r{"tube-vs-engine"};
  std::mt19937_64 rng(opt.seed);
  for (const auto& curve : curves_or(opt, {over_f101({3, 3, 3})})) {
    const auto objects = exceptional_objects(curve, opt.max_length);
    std::vector<std::pair<std::size_t, std::size_t>> all, rerun;
    for (std::size_t a = 0; a < objects.size(); ++a)
      for (std::size_t b = 0; b < objects.size(); ++b) {
        all.push_back({a, b});
        if (curve.field.kind == FieldSpec::Kind::prime &&
            static_cast<double>(rng() % 1000000) < opt.rational_fraction * 1e6)
          rerun.push_back({a, b});
      }
    with_field(curve, [&](auto& tubes) { compare_tube_pairs(r, tubes, objects, all, weights_tag(curve)); });
    if (!rerun.empty()) {
      CurveData rational = curve;
      rational.field = FieldSpec::rationals();
      rational.lambdas.clear();
      rational = make_curve(rational.weights, rational.field, {}, rational.homogeneous_samples);
      TubeRealizer<Rational> tubes(canonical_context<Rational>(rational));
      compare_tube_pairs(r, tubes, objects, rerun, weights_tag(rational));
    }
    r.details[weights_tag(curve)] = {{"objects", objects.size()}, {"pairs", all.size()}, {"rational_reruns", rerun.size()}};
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport verify_ar_formula(const SweepOptions& opt) {
  Stopwatch clock;
  SweepReport r{"ar-formula"};
  std::mt19937_64 rng(opt.seed);
  const auto curves = curves_or(opt, {over_f101({2, 2, 2}), over_f101({3, 3, 3}), over_f101({2, 3, 6})});
  const int total = opt.samples.value_or(100);
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const int quota = total / static_cast<int>(curves.size()) + (static_cast<int>(ci) < total % static_cast<int>(curves.size()));
    with_field(curves[ci], [&](auto& tubes) {
      const auto& ctx = tubes.context().ctx;
      const auto pool = module_pool(tubes);
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pdim(ctx, pool[i].rep, 1) == 1) candidates.push_back(i);
      for (int k = 0; k < quota; ++k) {
        const auto& a = pool[candidates[rng() % candidates.size()]];
        const auto& c = pool[rng() % pool.size()];
        const Index lhs = hom_dim(ctx, c.rep, tau(ctx, a.rep));
        const Index rhs = ext1_dim(ctx, a.rep, c.rep);
        ++r.checked;
        if (lhs != rhs)
          r.fail(weights_tag(curves[ci]) + " A=" + a.tag + " C=" + c.tag + ": hom(C,tau A)=" + std::to_string(lhs) +
                 " ext1(A,C)=" + std::to_string(rhs));
      }
      r.details[weights_tag(curves[ci])] = {{"pool", pool.size()}, {"pdim_one", candidates.size()}, {"pairs", quota}};
    });
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport verify_euler(const SweepOptions& opt) {
  Stopwatch clock;
  SweepReport r{"euler"};
  std::mt19937_64 rng(opt.seed);
  const auto curves = curves_or(opt, {over_f101({2, 2, 2}), over_f101({3, 3, 3}), over_f101({2, 3, 6})});
  const int total = opt.samples.value_or(50);
  std::size_t with_ext2 = 0;
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const int quota = total / static_cast<int>(curves.size()) + (static_cast<int>(ci) < total % static_cast<int>(curves.size()));
    const auto g = grothendieck_data(PathAlgebra(build_canonical(curves[ci]).presentation));
    with_field(curves[ci], [&](auto& tubes) {
      const auto& ctx = tubes.context().ctx;
      const auto pool = module_pool(tubes);
      for (int k = 0; k < quota; ++k) {
        const auto& m = pool[rng() % pool.size()];
        const auto& n = pool[rng() % pool.size()];
        const Rational form = euler_form(g, m.rep.dim_vector(), n.rep.dim_vector());
        const Index hom = hom_dim(ctx, m.rep, n.rep);
        const Index e1 = ext1_dim(ctx, m.rep, n.rep);
        const Index e2 = ext2_dim(ctx, m.rep, n.rep);
        if (e2 != 0) ++with_ext2;
        ++r.checked;
        if (form != Rational(hom - e1 + e2))
          r.fail(weights_tag(curves[ci]) + " M=" + m.tag + " N=" + n.tag + ": <,>=" + to_string(form) +
                 " hom-ext1+ext2=" + std::to_string(hom - e1 + e2));
      }
    });
  }
  r.details["pairs_with_ext2"] = with_ext2;
  r.seconds = clock.seconds();
  return r;
}

namespace {
Integer binomial(int n, int k) {
  Integer out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}
}  // namespace

SweepReport verify_branch_counts(const SweepOptions& opt) {
  Stopwatch clock;
  SweepReport r{"branch-counts"};
  nlohmann::json counts = nlohmann::json::object();
  for (int rank = 1; rank <= 5; ++rank) {
    const TubePoint p{"t", rank};
    auto fast = enumerate_tube_branches(p);
    auto slow = exhaustive_tube_branches(p);
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    ++r.checked;
    counts[std::to_string(rank)] = fast.size();
    if (fast != slow || Integer(fast.size()) != binomial(2 * rank - 1, rank))
      r.fail("rank " + std::to_string(rank) + ": enumerated " + std::to_string(fast.size()) + ", exhaustive " +
             std::to_string(slow.size()));
  }
  r.details["per_tube"] = counts;

  // Rigidity of every subset of short objects, decided by engine Ext^1.
  for (const auto& curve : curves_or(opt, {over_f101({3, 3, 3})})) {
    with_field(curve, [&](auto& tubes) {
      const auto& ctx = tubes.context().ctx;
      for (const auto& pt : exceptional_points(curve)) {
        std::vector<TubeObject> objs;
        for (int s = 0; s < pt.rank; ++s)
          for (int l = 1; l < pt.rank; ++l) objs.push_back(tube_object({pt.id, pt.rank}, s, l));
        const std::size_t n = objs.size();
        if (n > 16) continue;
        std::vector<std::vector<bool>> ext(n, std::vector<bool>(n));
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) ext[a][b] = ext1_dim(ctx, tubes.get(objs[a]), tubes.get(objs[b])) != 0;
        std::size_t branches = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          BranchModule y;
          bool rigid_engine = true, rigid_symbolic = true;
          for (std::size_t a = 0; a < n; ++a) {
            if (!(mask >> a & 1)) continue;
            y.push_back(objs[a]);
            for (std::size_t b = 0; b < n; ++b)
              if (mask >> b & 1) {
                rigid_engine = rigid_engine && !ext[a][b];
                rigid_symbolic = rigid_symbolic && ext1_dim(objs[a], objs[b]) == 0;
              }
          }
          ++r.checked;
          if (rigid_engine != rigid_symbolic) r.fail("rigidity of subset " + std::to_string(mask) + " in " + pt.id);
          // A branch module must be rigid by the engine as well.
          if (is_branch(normalize(y))) {
            ++branches;
            if (!rigid_engine) r.fail("branch module in " + pt.id + " with engine self-extension");
          }
        }
        r.details[weights_tag(curve) + " " + pt.id] = {{"subsets", std::size_t{1} << n}, {"branches", branches}};
      }
    });
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport verify_injectivity(const SweepOptions& opt) {
  Stopwatch clock;
  SweepReport r{"injectivity"};
  for (const auto& curve : curves_or(opt, {make_curve({3, 3, 3})})) {
    const auto branches = enumerate_branches(curve);
    std::vector<PointSet> sets;
    for (const auto& p : point_set_templates(curve))
      if (p.mode == PointSet::Mode::finite || p.mode == PointSet::Mode::none) sets.push_back(p);
    std::map<std::vector<std::string>, std::pair<BranchModule, PointSet>> seen;
    for (const auto& y : branches)
      for (const auto& p : sets) {
        const auto key = build_tilting(curve, y, p).canonical_key();
        ++r.checked;
        if (!seen.emplace(key, std::make_pair(y, p)).second) r.fail("collision in " + weights_tag(curve));
      }
    r.details[weights_tag(curve)] = {{"branches", branches.size()}, {"point_sets", sets.size()}, {"distinct", seen.size()}};
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport verify_summand_bound(const SweepOptions& opt) {
  Stopwatch clock;
  SweepReport r{"summand-bound"};
  for (const auto& curve : curves_or(opt, {make_curve({2, 3, 6})})) {
    std::size_t bound = 0;
    for (int w : curve.weights) bound += static_cast<std::size_t>(w - 1);
    std::size_t largest = 0;
    const auto branches = enumerate_branches(curve);
    const auto sets = point_set_templates(curve);
    for (const auto& y : branches)
      for (const auto& p : sets) {
        const auto n = build_tilting(curve, y, p).count("findim");
        largest = std::max(largest, n);
        ++r.checked;
        if (n > bound) r.fail(weights_tag(curve) + ": " + std::to_string(n) + " finite-dimensional summands");
      }
    r.details[weights_tag(curve)] = {{"bound", bound}, {"largest", largest}, {"branches", branches.size()},
                                     {"point_sets", sets.size()}};
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport verify_localization_laws(const SweepOptions& opt) {
  Stopwatch clock;
  SweepReport r{"localization-laws"};
  for (const auto& curve : curves_or(opt, {make_curve({3, 3, 3}), make_curve({2, 2, 2, 2})})) {
    std::vector<SimpleRegular> simples;
    for (const auto& p : points(curve))
      for (int k = 0; k < p.rank; ++k) simples.push_back({p.id, k});
    const auto type = classify_type(curve);
    std::size_t subsets = 0;
    const std::size_t n = simples.size();
    std::function<void(std::size_t, SimpleRegularSet&)> walk = [&](std::size_t from, SimpleRegularSet& u) {
      ++subsets;
      const auto whole = localize(curve, u);
      // Weight reduction, recomputed from the removed counts.
      std::vector<int> expected;
      for (const auto& p : points(curve)) {
        const int left = p.rank - static_cast<int>(std::count_if(u.begin(), u.end(), [&](const SimpleRegular& s) { return s.point == p.id; }));
        if (left >= 2) expected.push_back(left);
      }
      std::sort(expected.rbegin(), expected.rend());
      ++r.checked;
      if (whole.result_curve.weights != expected) r.fail("weights after removing " + std::to_string(u.size()) + " simples");
      if (type == ReprType::Tubular && whole.result_type && *whole.result_type == ReprType::Wild)
        r.fail("tubular localization classified wild");
      // Every two-step split.
      const std::vector<SimpleRegular> items(u.begin(), u.end());
      for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
        SimpleRegularSet a, b;
        for (std::size_t i = 0; i < items.size(); ++i) (mask >> i & 1 ? a : b).insert(items[i]);
        ++r.checked;
        if (!(compose(localize(curve, a), b) == whole)) r.fail("compose differs from union localization");
      }
      if (u.size() == 3) return;
      for (std::size_t i = from; i < n; ++i) {
        u.insert(simples[i]);
        walk(i + 1, u);
        u.erase(simples[i]);
      }
    };
    SimpleRegularSet u;
    walk(0, u);
    for (const auto& p : points(curve)) {
      ModuleExpr expected;
      for (int k = 0; k < p.rank; ++k) expected.add(sym::Prufer{{{p.id, p.rank}, k}});
      ++r.checked;
      if (!(quotient_description(localize(curve, clique(curve, p.id))) == expected))
        r.fail("clique quotient of " + p.id + " is not its Prufer sum");
    }
    r.details[weights_tag(curve)] = {{"subsets", subsets}};
  }
  r.seconds = clock.seconds();
  return r;
}

namespace {

template <class S>
void check_perp_rules(SweepReport& r, TubeRealizer<S>& tubes, int depth) {
  const auto& curve = tubes.context().curve();
  const auto& ctx = tubes.context().ctx;
  std::map<std::pair<TubeObject, TubeObject>, bool> ext_cache;
  auto nonzero = [&](const TubeObject& a, const TubeObject& b) {
    auto [it, fresh] = ext_cache.try_emplace({a, b}, false);
    if (fresh) it->second = ext1_dim(ctx, tubes.get(a), tubes.get(b)) != 0;
    return it->second;
  };
  std::vector<BranchModule> ys = enumerate_branches(curve);
  for (const auto& p : points(curve))
    for (int s = 0; s < p.rank; ++s)
      for (int l = 1; l <= 3; ++l) ys.push_back({tube_object({p.id, p.rank}, s, l)});
  for (const auto& p : points(curve)) {
    const TubePoint tp{p.id, p.rank};
    for (int k = 0; k < p.rank; ++k) {
      const Prufer pr{tp, k};
      const Adic ad{tp, k};
      for (const auto& y : ys) {
        bool prufer_engine = true, adic_engine = true;
        for (const auto& x : y)
          for (int n = 1; n <= depth; ++n) {
            prufer_engine = prufer_engine && !nonzero(tube_object(tp, k, n), x);
            adic_engine = adic_engine && !nonzero(x, tube_object(tp, k - n + 1, n));
          }
        r.checked += 2;
        std::string ytag;
        for (const auto& x : y) ytag += to_string(x);
        if (prufer_engine != prufer_in_perp(y, pr))
          r.fail("Prufer " + p.id + ":" + std::to_string(k) + " against Y=" + ytag);
        if (adic_engine != adic_in_perp_right(y, ad))
          r.fail("adic " + p.id + ":" + std::to_string(k) + " against Y=" + ytag);
      }
    }
  }
  for (const auto& p : points(curve))
    for (const auto& q : points(curve))
      for (int s = 0; s < p.rank; ++s)
        for (int t = 0; t < q.rank; ++t) {
          const TubePoint tp{p.id, p.rank}, tq{q.id, q.rank};
          bool vanish = true;
          for (int n = 1; n <= depth && vanish; ++n)
            for (int m = 1; m <= depth && vanish; ++m)
              vanish = !nonzero(tube_object(tp, s, n), tube_object(tq, t - m + 1, m));
          ++r.checked;
          if (vanish != prufer_adic_ext_vanishes({tp, s}, {tq, t}))
            r.fail("Ext(Prufer " + p.id + ":" + std::to_string(s) + ", adic " + q.id + ":" + std::to_string(t) + ")");
        }
  r.details[weights_tag(curve)] = {{"engine_ext_computations", ext_cache.size()}, {"test_modules", ys.size()}};
}

}  // namespace

SweepReport verify_prufer_adic_rules(const SweepOptions& opt) {
  Stopwatch clock;
  SweepReport r{"prufer-adic-rules"};
  for (const auto& curve : curves_or(opt, {make_curve({3, 2}, FieldSpec::prime(101), {}, {"x1"})})) {
    for (const auto& p : points(curve))
      if (p.rank > 3) throw Error("rank_too_large", "Prufer/adic sweep is limited to tubes of rank at most 3");
    with_field(curve, [&](auto& tubes) { check_perp_rules(r, tubes, opt.truncation_depth); });
  }
  r.details["depth"] = opt.truncation_depth;
  r.seconds = clock.seconds();
  return r;
}

std::vector<std::string> sweep_names() {
  return {"tube-vs-engine", "ar-formula",   "euler",          "branch-counts",
          "injectivity",    "summand-bound", "localization-laws", "prufer-adic-rules"};
}

SweepReport run_sweep(const std::string& name, const SweepOptions& opt) {
  if (name == "tube-vs-engine") return verify_tube_vs_engine(opt);
  if (name == "ar-formula") return verify_ar_formula(opt);
  if (name == "euler") return verify_euler(opt);
  if (name == "branch-counts") return verify_branch_counts(opt);
  if (name == "injectivity") return verify_injectivity(opt);
  if (name == "summand-bound") return verify_summand_bound(opt);
  if (name == "localization-laws") return verify_localization_laws(opt);
  if (name == "prufer-adic-rules") return verify_prufer_adic_rules(opt);
  throw Error("unknown_sweep", "unknown verification sweep " + name);
}

void to_json(nlohmann::json& j, const SweepReport& r) {
  j = {{"name", r.name},           {"checked", r.checked}, {"mismatches", r.mismatches},
       {"failures", r.failures},   {"ok", r.ok()},         {"details", r.details}};
}

}  // namespace cct
