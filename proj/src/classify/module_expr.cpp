#include "cct/classify/module_expr.hpp"

#include "cct/algebra/curve_json.hpp"

#include <algorithm>
#include <cctype>

namespace cct {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool plain(const std::string& id) {
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-' || c == '.';
  });
}

// A localization descriptor is determined by its base curve, removed set and
// cofinite flag; the rest is derived.
std::string descriptor_key(const char* kind, const LocalizedRingDescriptor& d) {
  std::string out = kind;
  out += "|";
  for (int w : d.base.weights) out += std::to_string(w) + ",";
  out += "|" + d.base.field.to_string() + "|";
  for (const auto& l : d.base.lambdas) out += to_string(l) + ",";
  out += "|";
  for (const auto& x : d.base.homogeneous_samples) out += nlohmann::json(x).dump() + ",";
  out += "|";
  for (const auto& r : d.removed) out += nlohmann::json(r.point).dump() + ":" + std::to_string(r.index) + ",";
  out += d.cofinite_homogeneous ? "|cofinite" : "|";
  return out;
}

// Canonical strings: the compact JSON of each symbol, except descriptors.
std::string dump(const Summand& s) {
  if (const auto* x = std::get_if<sym::LocalizedRing>(&s)) return descriptor_key("localized_ring", x->desc);
  if (const auto* x = std::get_if<sym::LukasOver>(&s)) return descriptor_key("lukas", x->desc);
  if (const auto* x = std::get_if<sym::UFiltered>(&s)) return descriptor_key("u_filtered", x->desc);
  if (const auto* x = std::get_if<sym::FinDim>(&s); x && plain(x->object.point.id))
    return R"({"kind":"findim","length":)" + std::to_string(x->object.length) + R"(,"point":")" +
           x->object.point.id + R"(","socle":)" + std::to_string(x->object.socle) + "}";
  if (const auto* x = std::get_if<sym::Prufer>(&s); x && plain(x->module.point.id))
    return R"({"kind":"prufer","point":")" + x->module.point.id + R"(","socle":)" +
           std::to_string(x->module.socle) + "}";
  nlohmann::json j;
  to_json(j, s);
  return j.dump();
}

}  // namespace

std::string kind_of(const Summand& s) {
  return std::visit(overloaded{[](const sym::FinDim&) { return "findim"; },
                               [](const sym::Prufer&) { return "prufer"; },
                               [](const sym::Adic&) { return "adic"; },
                               [](const sym::Generic&) { return "generic"; },
                               [](const sym::LocalizedRing&) { return "localized_ring"; },
                               [](const sym::LukasOver&) { return "lukas"; },
                               [](const sym::UFiltered&) { return "u_filtered"; },
                               [](const sym::PruferFamily&) { return "prufer_family"; },
                               [](const sym::AdicFamily&) { return "adic_family"; },
                               [](const sym::SlopeLukas&) { return "lukas_slope"; },
                               [](const sym::SlopeCotilting&) { return "cotilting_slope"; }},
                    s);
}

ModuleExpr::ModuleExpr(std::initializer_list<Summand> s) {
  for (const auto& x : s) add(x);
}

ModuleExpr& ModuleExpr::add(Summand s) {
  std::string key = dump(s);
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  summands_.insert(summands_.begin() + (it - keys_.begin()), std::move(s));
  keys_.insert(it, std::move(key));
  return *this;
}

ModuleExpr& ModuleExpr::add(const ModuleExpr& other) {
  for (const auto& s : other.summands()) add(s);
  return *this;
}

std::size_t ModuleExpr::count(const std::string& kind) const {
  return static_cast<std::size_t>(
      std::count_if(summands_.begin(), summands_.end(), [&](const Summand& s) { return kind_of(s) == kind; }));
}


void to_json(nlohmann::json& j, const TubePoint& p) { j = {{"id", p.id}, {"rank", p.rank}}; }

void to_json(nlohmann::json& j, const TubeObject& x) {
  j = {{"point", x.point.id}, {"socle", x.socle}, {"length", x.length}};
}

void to_json(nlohmann::json& j, const SimpleRegular& s) { j = {{"point", s.point}, {"socle", s.index}}; }

void to_json(nlohmann::json& j, const LocalizedRingDescriptor& d) {
  j = {{"base_weights", d.base.weights},
       {"removed", d.removed},
       {"finite_dimensional", d.finite_dimensional},
       {"result_weights", d.result_curve.weights},
       {"result_curve", d.result_curve},
       {"removed_points", d.removed_points},
       {"point_map", d.point_map},
       {"cofinite_homogeneous", d.cofinite_homogeneous}};
  if (d.result_type) j["result_type"] = to_string(*d.result_type);
}

void to_json(nlohmann::json& j, const Summand& s) {
  j = {{"kind", kind_of(s)}};
  std::visit(overloaded{[&](const sym::FinDim& x) {
                          j["point"] = x.object.point.id;
                          j["socle"] = x.object.socle;
                          j["length"] = x.object.length;
                        },
                        [&](const sym::Prufer& x) {
                          j["point"] = x.module.point.id;
                          j["socle"] = x.module.socle;
                        },
                        [&](const sym::Adic& x) {
                          j["point"] = x.module.point.id;
                          j["top"] = x.module.top;
                          j["product"] = x.product;
                        },
                        [&](const sym::Generic& x) {
                          if (!x.slope.empty()) j["slope"] = x.slope;
                        },
                        [&](const sym::LocalizedRing& x) { j["descriptor"] = x.desc; },
                        [&](const sym::LukasOver& x) { j["over"] = x.desc; },
                        [&](const sym::UFiltered& x) { j["descriptor"] = x.desc; },
                        [&](const sym::PruferFamily& x) { j["scope"] = x.scope; },
                        [&](const sym::AdicFamily& x) {
                          j["scope"] = x.scope;
                          j["product"] = x.product;
                        },
                        [&](const sym::SlopeLukas& x) { j["slope"] = x.slope; },
                        [&](const sym::SlopeCotilting& x) { j["slope"] = x.slope; }},
             s);
}

void to_json(nlohmann::json& j, const ModuleExpr& e) {
  j = nlohmann::json::array();
  for (const auto& s : e.summands()) {
    nlohmann::json x;
    to_json(x, s);
    j.push_back(std::move(x));
  }
}

}  // namespace cct
