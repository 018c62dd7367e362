#pragma once

#include "cct/localization/descriptor.hpp"
#include "cct/tube/tube.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace cct {

namespace sym {

struct FinDim {
  TubeObject object;
};
struct Prufer {
  cct::Prufer module;
};
/// `product` marks a factor of a direct product rather than a direct sum.
struct Adic {
  cct::Adic module;
  bool product = false;
};
/// The generic module; `slope` names the tubular family for tubular curves.
struct Generic {
  std::string slope;
};
struct LocalizedRing {
  LocalizedRingDescriptor desc;
};
struct LukasOver {
  LocalizedRingDescriptor desc;
};
/// Directed union of finite extensions of modules in the removed set.
struct UFiltered {
  LocalizedRingDescriptor desc;
};
/// All Prufer (or adic) modules of the homogeneous points outside the samples.
struct PruferFamily {
  std::string scope;
};
struct AdicFamily {
  std::string scope;
  bool product = false;
};
/// Symbols for the tilting and the cotilting module of an irrational slope.
struct SlopeLukas {
  std::string slope;
};
struct SlopeCotilting {
  std::string slope;
};

}  // namespace sym

using Summand = std::variant<sym::FinDim, sym::Prufer, sym::Adic, sym::Generic, sym::LocalizedRing,
                             sym::LukasOver, sym::UFiltered, sym::PruferFamily, sym::AdicFamily,
                             sym::SlopeLukas, sym::SlopeCotilting>;

std::string kind_of(const Summand& s);

/// Formal direct sum of symbols, kept in canonical order.
class ModuleExpr {
 public:
  ModuleExpr() = default;
  ModuleExpr(std::initializer_list<Summand> s);

  ModuleExpr& add(Summand s);
  ModuleExpr& add(const ModuleExpr& other);

  const std::vector<Summand>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  std::size_t size() const { return summands_.size(); }
  std::size_t count(const std::string& kind) const;

  /// Sorted canonical strings, one per summand; equal multisets give equal keys.
  const std::vector<std::string>& canonical_key() const { return keys_; }
  bool operator==(const ModuleExpr& other) const { return keys_ == other.keys_; }

 private:
  std::vector<Summand> summands_;
  std::vector<std::string> keys_;
};

void to_json(nlohmann::json& j, const TubePoint& p);
void to_json(nlohmann::json& j, const TubeObject& x);
void to_json(nlohmann::json& j, const SimpleRegular& s);
void to_json(nlohmann::json& j, const LocalizedRingDescriptor& d);
void to_json(nlohmann::json& j, const Summand& s);
void to_json(nlohmann::json& j, const ModuleExpr& e);

}  // namespace cct
