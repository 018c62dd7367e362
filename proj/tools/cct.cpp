#include "cct/algebra/curve_json.hpp"
#include "cct/algebra/grothendieck.hpp"
#include "cct/branch/branch.hpp"
#include "cct/classify/membership.hpp"
#include "cct/classify/tilting.hpp"
#include "cct/localization/localization.hpp"
#include "cct/rep/tube_modules.hpp"
#include "cct/slopes/tubular.hpp"
#include "cct/verify/verify.hpp"
#include "cct/ziegler/ziegler.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw cct::Error("parse_error", "expected an integer, got '" + s + "'");
  return v;
}

json read_json_arg(const std::string& text) {
  try {
    if (!text.empty() && (text[0] == '[' || text[0] == '{')) return json::parse(text);
    if (text == "-") return json::parse(std::cin);
    std::ifstream in(text);
    if (!in) throw cct::Error("parse_error", "cannot read '" + text + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw cct::Error("parse_error", e.what());
  }
}

struct CurveOptions {
  std::string weights;
  bool weights_set = false;
  std::string field = "0";
  std::string lambdas;
  std::string samples = "x1,x2";
  std::string curve_file;

  void attach(CLI::App* app) {
    app->add_option("--weights", weights, "Weights, comma separated (empty for none)")
        ->each([this](const std::string&) { weights_set = true; });
    app->add_option("--field", field, "0 for the rationals, a prime p for F_p")->capture_default_str();
    app->add_option("--lambdas", lambdas, "Parameters of arms 3, 4, ... as fractions");
    app->add_option("--samples", samples, "Homogeneous sample labels")->capture_default_str();
    app->add_option("--curve", curve_file, "Curve JSON (file, '-' or inline)");
  }

  cct::CurveData build() const {
    if (!curve_file.empty()) {
      const auto j = read_json_arg(curve_file);
      return (j.contains("curve") ? j.at("curve") : j).get<cct::CurveData>();
    }
    if (!weights_set) throw cct::Error("missing_curve", "pass --weights or --curve");
    std::vector<int> w;
    for (const auto& s : split(weights, ',')) w.push_back(to_int(s));
    const int p = to_int(field);
    const auto f = p == 0 ? cct::FieldSpec::rationals() : cct::FieldSpec::prime(static_cast<std::uint32_t>(p));
    std::vector<cct::Rational> ls;
    for (const auto& s : split(lambdas, ',')) ls.push_back(cct::parse_rational(s));
    return cct::make_curve(std::move(w), f, std::move(ls), split(samples, ','));
  }
};

cct::TubeObject parse_object(const cct::CurveData& curve, const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3)
    throw cct::Error("parse_error", "tube object must read point:socle[:length], got '" + text + "'");
  const auto info = cct::find_point(curve, parts[0]);
  return cct::tube_object({parts[0], info.rank}, to_int(parts[1]), parts.size() == 3 ? to_int(parts[2]) : 1);
}

cct::BranchModule parse_branch(const cct::CurveData& curve, const std::string& text) {
  if (!text.empty() && (text[0] == '[' || text[0] == '{' || text == "-")) {
    auto j = read_json_arg(text);
    try {
      return cct::branch_from_json(curve, j.is_object() ? j.at("y") : j);
    } catch (const json::exception& e) {
      throw cct::Error("parse_error", e.what());
    }
  }
  cct::BranchModule y;
  for (const auto& item : split(text, ',')) y.push_back(parse_object(curve, item));
  return cct::normalize(y);
}

cct::PointSet parse_point_set(const std::string& text) {
  if (!text.empty() && text[0] == '{') {
    try {
      return cct::normalize(json::parse(text).get<cct::PointSet>());
    } catch (const json::exception& e) {
      throw cct::Error("parse_error", e.what());
    }
  }
  if (text == "none") return cct::PointSet::none();
  if (text == "all") return cct::PointSet::all();
  const auto colon = text.find(':');
  const auto mode = text.substr(0, colon);
  const auto pts = colon == std::string::npos ? std::vector<std::string>{} : split(text.substr(colon + 1), ',');
  if (mode == "finite") return cct::normalize(cct::PointSet::finite(pts));
  if (mode == "cofinite") return cct::normalize(cct::PointSet::cofinite(pts));
  throw cct::Error("parse_error", "point set must be none, all, finite:<ids> or cofinite:<ids>");
}

cct::SimpleRegularSet parse_simples(const cct::CurveData& curve, const std::string& text) {
  cct::SimpleRegularSet u;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw cct::Error("parse_error", "simple must read point:index, got '" + item + "'");
    u.insert({parts[0], to_int(parts[1])});
  }
  cct::validate(curve, u);
  return u;
}

cct::DimVector parse_dim(const std::string& text) {
  std::vector<cct::Index> d;
  for (const auto& s : split(text, ',')) d.push_back(to_int(s));
  return cct::to_dim_vector(d);
}

json dim_json(const cct::DimVector& v) {
  json out = json::array();
  for (cct::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

/// Runs `f` with the scalar type matching the curve's field.
template <class F>
auto with_field(const cct::CurveData& curve, F&& f) {
  if (curve.field.kind == cct::FieldSpec::Kind::rationals) return f(cct::Rational{});
  return f(cct::ModP{});
}

/// Module named by P:v, I:v, S:v or a tube object point:socle:length.
template <class S>
cct::Representation<S> parse_module(cct::TubeRealizer<S>& tubes, const std::string& text) {
  const auto& cc = tubes.context();
  const auto parts = split(text, ':');
  if (parts.size() == 2 && (parts[0] == "P" || parts[0] == "I" || parts[0] == "S")) {
    const int v = to_int(parts[1]);
    if (v < 0 || v >= cc.ctx.vertex_count()) throw cct::Error("parse_error", "vertex out of range in '" + text + "'");
    if (parts[0] == "P") return cct::projective_module(cc.ctx, v);
    if (parts[0] == "I") return cct::injective_module(cc.ctx, v);
    return cct::simple_module(cc.ctx, v);
  }
  return tubes.get(parse_object(cc.curve(), text));
}

struct Output {
  bool compact = false;
  json payload;
  std::vector<std::string> diagnostics;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cct: exact tilting and cotilting data for canonical algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t seed = 1;
  app.add_flag("--json", out.compact, "Compact machine output");
  app.add_option("--seed", seed, "Seed for sampled sweeps")->capture_default_str();

  std::function<void()> action;
  auto on = [&](CLI::App* sub, std::function<void()> f) {
    sub->callback([&action, f] { action = f; });
  };

  // algebra
  auto* algebra = app.add_subcommand("algebra", "Curves and canonical algebras")->require_subcommand(1);
  CurveOptions alg_new_c, alg_info_c;
  auto* alg_new = algebra->add_subcommand("new", "Validated curve JSON");
  alg_new_c.attach(alg_new);
  on(alg_new, [&] { out.payload = {{"curve", alg_new_c.build()}}; });
  auto* alg_info = algebra->add_subcommand("info", "Invariants of the canonical algebra");
  alg_info_c.attach(alg_info);
  on(alg_info, [&] {
    const auto curve = alg_info_c.build();
    const auto can = cct::build_canonical(curve);
    const auto g = cct::grothendieck_data(cct::PathAlgebra(can.presentation));
    json pts = json::array();
    for (const auto& p : cct::points(curve))
      pts.push_back({{"id", p.id}, {"rank", p.rank}, {"exceptional", p.exceptional}});
    json cartan = json::array();
    for (cct::Index i = 0; i < g.cartan.rows(); ++i) cartan.push_back(dim_json(cct::DimVector(g.cartan.row(i).transpose())));
    json poly = json::array();
    for (const auto& c : cct::coxeter_polynomial(g)) poly.push_back(cct::to_string(c));
    json radical = json::array();
    for (cct::Index k = 0; k < g.radical_basis.cols(); ++k) radical.push_back(dim_json(cct::DimVector(g.radical_basis.col(k))));
    out.payload = {{"k0_rank", cct::k0_rank(curve)},
                   {"type", cct::to_string(cct::classify_form(g))},
                   {"curve", curve},
                   {"vertices", can.presentation.vertex_count()},
                   {"arrows", can.presentation.arrow_count()},
                   {"relations", can.presentation.relations.size()},
                   {"points", pts},
                   {"cartan", cartan},
                   {"coxeter_polynomial", poly},
                   {"radical_basis", radical}};
  });

  // tube
  auto* tube = app.add_subcommand("tube", "Tube combinatorics")->require_subcommand(1);
  CurveOptions tube_c;
  std::string tube_a, tube_b;
  bool tube_engine = false, tube_inverse = false;
  auto add_pair = [&](CLI::App* s) {
    tube_c.attach(s);
    s->add_option("--a", tube_a, "First object point:socle:length")->required();
    s->add_option("--b", tube_b, "Second object point:socle:length")->required();
    s->add_flag("--engine", tube_engine, "Also compute with the representation engine");
  };
  auto pair_cmd = [&](const char* key, bool ext) {
    const auto curve = tube_c.build();
    const auto a = parse_object(curve, tube_a);
    const auto b = parse_object(curve, tube_b);
    const int sym = ext ? cct::ext1_dim(a, b) : cct::hom_dim(a, b);
    out.payload = {{"a", a}, {"b", b}, {key, sym}};
    if (tube_engine) {
      const long eng = with_field(curve, [&](auto zero) {
        using S = decltype(zero);
        cct::TubeRealizer<S> tubes(cct::canonical_context<S>(curve));
        const auto& ma = tubes.get(a);
        const auto& mb = tubes.get(b);
        return static_cast<long>(ext ? cct::ext1_dim(tubes.context().ctx, ma, mb)
                                     : cct::hom_dim(tubes.context().ctx, ma, mb));
      });
      out.payload["engine"] = eng;
      out.payload["agree"] = eng == sym;
    }
  };
  auto* tube_hom = tube->add_subcommand("hom", "dim Hom between tube objects");
  add_pair(tube_hom);
  on(tube_hom, [&] { pair_cmd("hom", false); });
  auto* tube_ext = tube->add_subcommand("ext", "dim Ext^1 between tube objects");
  add_pair(tube_ext);
  on(tube_ext, [&] { pair_cmd("ext1", true); });
  auto* tube_tau = tube->add_subcommand("tau", "Auslander-Reiten translate in the tube");
  tube_c.attach(tube_tau);
  tube_tau->add_option("--x", tube_a, "Object point:socle:length")->required();
  tube_tau->add_flag("--inverse", tube_inverse, "Apply tau^- instead");
  on(tube_tau, [&] {
    const auto x = parse_object(tube_c.build(), tube_a);
    out.payload = {{"x", x}, {tube_inverse ? "tau_inverse" : "tau", tube_inverse ? cct::tau_inverse(x) : cct::tau(x)}};
  });
  auto* tube_wing = tube->add_subcommand("wing", "Objects in the wing of a vertex");
  tube_c.attach(tube_wing);
  tube_wing->add_option("--x", tube_a, "Wing vertex point:socle:length")->required();
  on(tube_wing, [&] {
    const auto x = parse_object(tube_c.build(), tube_a);
    if (x.length >= x.point.rank)
      throw cct::Error("wing_undefined", "wing vertex " + cct::to_string(x) + " has length at least the rank");
    const auto w = cct::wing(x);
    out.payload = {{"vertex", x}, {"size", w.size()}, {"wing", w}};
  });

  // branch
  auto* branch = app.add_subcommand("branch", "Branch modules")->require_subcommand(1);
  CurveOptions branch_c;
  std::string branch_y, branch_tubes;
  bool per_tube = false, branch_list = false;
  auto* br_check = branch->add_subcommand("check", "Test the branch conditions");
  branch_c.attach(br_check);
  br_check->add_option("--y", branch_y, "Summands point:socle:length,... or JSON")->required();
  on(br_check, [&] {
    const auto curve = branch_c.build();
    const auto y = parse_branch(curve, branch_y);
    const auto r = cct::check_branch(y);
    out.payload = {{"y", y}, {"branch", r.ok}, {"violations", r.violations}};
  });
  auto* br_enum = branch->add_subcommand("enum", "Enumerate branch modules");
  branch_c.attach(br_enum);
  br_enum->add_flag("--per-tube", per_tube, "Report the count of each exceptional tube");
  br_enum->add_option("--tubes", branch_tubes, "Restrict to these exceptional points");
  br_enum->add_flag("--list", branch_list, "List the modules");
  on(br_enum, [&] {
    const auto curve = branch_c.build();
    std::optional<std::vector<std::string>> only;
    if (!branch_tubes.empty()) only = split(branch_tubes, ',');
    if (per_tube) {
      json counts = json::object();
      std::size_t total = 1;
      for (const auto& p : cct::exceptional_points(curve)) {
        if (only && std::find(only->begin(), only->end(), p.id) == only->end()) continue;
        const auto n = cct::enumerate_tube_branches({p.id, p.rank}).size();
        counts[p.id] = n;
        total *= n;
      }
      out.payload = {{"count", total}, {"per_tube", counts}};
      return;
    }
    const auto all = cct::enumerate_branches(curve, only);
    out.payload = {{"count", all.size()}};
    if (branch_list) out.payload["modules"] = all;
  });

  // tilt / cotilt
  CurveOptions tilt_c;
  std::string tilt_y, tilt_p = "none", tilt_module;
  bool tilt_desc = false;
  auto add_pair_opts = [&](CLI::App* s) {
    tilt_c.attach(s);
    s->add_option("--y", tilt_y, "Branch module point:socle:length,... or JSON")->default_str("");
    s->add_option("--p", tilt_p, "none, all, finite:<ids>, cofinite:<ids> or JSON")->capture_default_str();
  };
  auto* tilt = app.add_subcommand("tilt", "Tilting modules T_(Y,P)")->require_subcommand(1);
  auto* tilt_build = tilt->add_subcommand("build", "Summands of T_(Y,P)");
  add_pair_opts(tilt_build);
  tilt_build->add_flag("--descriptors", tilt_desc, "Include resolving and Serre descriptors");
  on(tilt_build, [&] {
    const auto curve = tilt_c.build();
    const auto y = parse_branch(curve, tilt_y);
    const auto p = parse_point_set(tilt_p);
    const auto t = cct::build_tilting(curve, y, p);
    out.payload = {{"y", y}, {"p", p}, {"tilting", t}, {"finite_summands", t.count("findim")}};
    if (tilt_desc) {
      out.payload["resolving"] = cct::resolving_descriptor(curve, y, p);
      out.payload["serre"] = cct::serre_descriptor(curve, y, p);
    }
  });
  auto* tilt_member = tilt->add_subcommand("member", "Membership of a module in the tilting class");
  add_pair_opts(tilt_member);
  tilt_member->add_option("--module", tilt_module, "P:v, I:v, S:v or point:socle:length")->required();
  on(tilt_member, [&] {
    const auto curve = tilt_c.build();
    const auto y = parse_branch(curve, tilt_y);
    const auto p = parse_point_set(tilt_p);
    cct::validate_pair(curve, y, p);
    if (std::getenv("CCT_TRUNCATION_DEPTH"))
      out.diagnostics.push_back("truncation depth " + std::to_string(cct::truncation_depth()) +
                                " taken from CCT_TRUNCATION_DEPTH");
    const auto r = with_field(curve, [&](auto zero) {
      using S = decltype(zero);
      cct::TubeRealizer<S> tubes(cct::canonical_context<S>(curve));
      const auto m = parse_module(tubes, tilt_module);
      return cct::member_of_tilting_class(tubes, m, y, p);
    });
    out.payload = {{"module", tilt_module},
                   {"member", r.member},
                   {"truncation_certified", r.truncation_certified},
                   {"depth", r.depth},
                   {"witness", r.witness}};
  });
  auto* cotilt = app.add_subcommand("cotilt", "Cotilting modules C_(Y,P)")->require_subcommand(1);
  auto* cotilt_build = cotilt->add_subcommand("build", "Summands of C_(Y,P)");
  add_pair_opts(cotilt_build);
  on(cotilt_build, [&] {
    const auto curve = tilt_c.build();
    const auto y = parse_branch(curve, tilt_y);
    const auto p = parse_point_set(tilt_p);
    out.payload = {{"y", y},
                   {"p", p},
                   {"cotilting", cct::build_cotilting(curve, y, p)},
                   {"dual_pattern", cct::dual_pattern_matches(curve, y, p)}};
  });

  // localize
  auto* localize = app.add_subcommand("localize", "Universal localization at simple regular modules");
  CurveOptions loc_c;
  std::string loc_u, loc_then;
  bool loc_cofinite = false;
  loc_c.attach(localize);
  localize->add_option("--u", loc_u, "Simples point:index,...")->default_str("");
  localize->add_option("--then", loc_then, "Further simples of the base curve to localize at");
  localize->add_flag("--cofinite-homogeneous", loc_cofinite, "Also remove every unsampled homogeneous clique");
  on(localize, [&] {
    const auto curve = loc_c.build();
    auto d = cct::localize(curve, parse_simples(curve, loc_u), loc_cofinite);
    if (!loc_then.empty()) d = cct::compose(d, parse_simples(curve, loc_then));
    out.payload = {{"descriptor", d}, {"quotient", cct::quotient_description(d)}};
    out.payload["result_type"] = d.result_type ? json(cct::to_string(*d.result_type)) : json(nullptr);
  });

  // slope
  auto* slope = app.add_subcommand("slope", "Slopes on tubular algebras")->require_subcommand(1);
  CurveOptions slope_c;
  std::string slope_dim, slope_w;
  int approx_n = 5;
  auto* sl_of = slope->add_subcommand("of", "Slope of a dimension vector");
  slope_c.attach(sl_of);
  sl_of->add_option("--dim", slope_dim, "Dimension vector, comma separated")->required();
  on(sl_of, [&] {
    const auto f = cct::calibrate_forms(slope_c.build());
    const auto x = parse_dim(slope_dim);
    const auto s = cct::slope_of(f, x);
    out.payload = {{"slope", s.to_string()},
                   {"value", s},
                   {"rank", cct::to_string(cct::rank_of(f, x))},
                   {"degree", cct::to_string(cct::degree_of(f, x))}};
  });
  auto* sl_tri = slope->add_subcommand("trisect", "Side of a class relative to a slope");
  slope_c.attach(sl_tri);
  sl_tri->add_option("--dim", slope_dim, "Dimension vector, comma separated")->required();
  sl_tri->add_option("--w", slope_w, "Slope: 3/7, inf, sqrt(5), golden, cf:1,2/3")->required();
  on(sl_tri, [&] {
    const auto f = cct::calibrate_forms(slope_c.build());
    const auto w = cct::parse_slope(slope_w);
    out.payload = {{"w", w.to_string()}, {"part", cct::to_string(cct::trisection(f, parse_dim(slope_dim), w))}};
  });
  auto* sl_approx = slope->add_subcommand("approx", "Increasing rational approximation of an irrational slope");
  sl_approx->add_option("--w", slope_w, "Irrational slope")->required();
  sl_approx->add_option("--n", approx_n, "Number of terms")->capture_default_str();
  on(sl_approx, [&] {
    const auto w = cct::parse_slope(slope_w);
    const auto chain = cct::approximation_chain(w, approx_n);
    json terms = json::array();
    bool increasing = true, below = true;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      terms.push_back(cct::to_string(chain[i]));
      if (i > 0 && !(chain[i - 1] < chain[i])) increasing = false;
      if (cct::compare(w, chain[i]) <= 0) below = false;
    }
    out.payload = {{"w", w.to_string()}, {"chain", terms}, {"increasing", increasing}, {"below", below}};
  });
  auto* sl_forms = slope->add_subcommand("forms", "Rank and degree forms with calibration certificate");
  slope_c.attach(sl_forms);
  on(sl_forms, [&] { out.payload = cct::calibrate_forms(slope_c.build()); });
  auto* sl_bound = slope->add_subcommand("boundary", "Projectives of slope 0 and injectives of slope inf");
  slope_c.attach(sl_bound);
  on(sl_bound, [&] { out.payload = cct::boundary_data(slope_c.build()); });

  // classify
  auto* classify = app.add_subcommand("classify", "Classification data of a curve or a slope");
  CurveOptions cls_c;
  std::string cls_slope;
  int cls_limit = 0;
  cls_c.attach(classify);
  classify->add_option("--slope", cls_slope, "Tubular slope; omit for a domestic curve");
  classify->add_option("--limit", cls_limit, "List the first N pairs with their modules")->capture_default_str();
  on(classify, [&] {
    const auto curve = cls_c.build();
    auto list_pairs = [&](const cct::CurveData& c, const std::vector<cct::BranchModule>& ys,
                          const std::vector<cct::PointSet>& ps) {
      json items = json::array();
      for (const auto& y : ys)
        for (const auto& p : ps) {
          if (static_cast<int>(items.size()) >= cls_limit) return items;
          items.push_back({{"y", y},
                           {"p", p},
                           {"tilting", cct::build_tilting(c, y, p)},
                           {"cotilting", cct::build_cotilting(c, y, p)}});
        }
      return items;
    };
    if (cls_slope.empty()) {
      const auto pairs = cct::classify_all(curve);
      out.payload = {{"type", "domestic"}, {"pairs", pairs.size()}};
      if (cls_limit > 0) {
        json items = json::array();
        for (std::size_t i = 0; i < pairs.size() && static_cast<int>(i) < cls_limit; ++i)
          items.push_back({{"y", pairs[i].y},
                           {"p", pairs[i].p},
                           {"tilting", cct::build_tilting(curve, pairs[i].y, pairs[i].p)},
                           {"cotilting", cct::build_cotilting(curve, pairs[i].y, pairs[i].p)}});
        out.payload["items"] = items;
      }
      return;
    }
    const auto w = cct::parse_slope(cls_slope);
    const auto c = cct::classify_at_slope(curve, w);
    out.payload = {{"slope", c.slope.to_string()}, {"note", c.note}};
    if (w.is_irrational()) {
      for (const auto& s : c.irrational.summands())
        cct::to_json(out.payload[std::holds_alternative<cct::sym::SlopeLukas>(s) ? "tilting" : "cotilting"], s);
      return;
    }
    out.payload["family_curve"] = c.family_curve;
    out.payload["branches"] = c.branches.size();
    out.payload["templates"] = c.templates.size();
    out.payload["pairs"] = c.pair_count();
    if (cls_limit > 0) out.payload["items"] = list_pairs(c.family_curve, c.branches, c.templates);
  });

  // ziegler
  auto* ziegler = app.add_subcommand("ziegler", "Indecomposable pure-injective modules")->require_subcommand(1);
  CurveOptions zg_c;
  std::string zg_slope;
  auto* zg_list = ziegler->add_subcommand("list", "List the pure-injective modules");
  zg_c.attach(zg_list);
  zg_list->add_option("--slope", zg_slope, "Restrict a tubular curve to one slope");
  on(zg_list, [&] {
    std::optional<cct::SlopeValue> w;
    if (!zg_slope.empty()) w = cct::parse_slope(zg_slope);
    const auto z = cct::ziegler_list(zg_c.build(), w);
    out.payload = z;
    out.payload["count"] = z.items.size();
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Oracle sweeps")->require_subcommand(1);
  CurveOptions vf_c;
  int vf_samples = 0, vf_max_length = 6;
  bool vf_timing = false;
  for (const auto& name : cct::sweep_names()) {
    auto* s = verify->add_subcommand(name, "Run the " + name + " sweep");
    vf_c.attach(s);
    s->add_option("--pairs", vf_samples, "Sampled pairs (sampled sweeps only)");
    s->add_option("--max-length", vf_max_length, "Longest tube object (tube-vs-engine)")->capture_default_str();
    s->add_flag("--timing", vf_timing, "Report wall time");
    on(s, [&, name] {
      cct::SweepOptions opt;
      opt.seed = seed;
      if (vf_c.weights_set || !vf_c.curve_file.empty()) opt.curves = {vf_c.build()};
      if (vf_samples > 0) opt.samples = vf_samples;
      opt.max_length = vf_max_length;
      opt.truncation_depth = cct::truncation_depth();
      const auto r = cct::run_sweep(name, opt);
      out.payload = r;
      out.payload["seed"] = seed;
      if (vf_timing) {
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(3);
        t << r.seconds;
        out.payload["seconds"] = t.str();
      }
      if (!r.ok()) out.diagnostics.push_back("sweep reported " + std::to_string(r.mismatches) + " mismatches");
    });
  }

  auto emit = [&](json j, int status) {
    if (j.is_object()) {
      j["schema_version"] = kSchemaVersion;
      if (!out.diagnostics.empty()) j["diagnostics"] = out.diagnostics;
    }
    std::cout << (out.compact ? j.dump() : j.dump(2)) << '\n';
    return status;
  };
  auto error = [&](const std::string& code, const std::string& message, int status) {
    return emit({{"error", {{"code", code}, {"message", message}}}}, status);
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return error("usage", e.what(), 2);
  }
  try {
    action();
  } catch (const cct::Error& e) {
    return error(e.code(), e.what(), 1);
  } catch (const json::exception& e) {
    return error("parse_error", e.what(), 1);
  } catch (const std::exception& e) {
    return error("internal", e.what(), 1);
  }
  return emit(out.payload, 0);
}
