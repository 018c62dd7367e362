#include "cct/slopes/tubular.hpp"

#include "cct/algebra/curve_json.hpp"

namespace cct {

namespace {

DimVector primitive(DimVector v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v(i)));
  if (g == 0) throw Error("calibration_failed", "degenerate radical vector");
  for (Index i = 0; i < v.size(); ++i) v(i) /= g;
  Integer sum = v.sum();
  if (sum < 0) v = -v;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) throw Error("calibration_failed", "radical vector is not positive");
  return v;
}

/// The radical vector vanishing at vertex k.
DimVector radical_vector_vanishing_at(const Matrix<Integer>& radical, Index k) {
  const DimVector a = radical.col(0), b = radical.col(1);
  return primitive(b(k) * a - a(k) * b);
}

Vector<Rational> as_rational(const DimVector& x) {
  Vector<Rational> out(x.size());
  for (Index i = 0; i < x.size(); ++i) out(i) = Rational(x(i));
  return out;
}

int sign(const Rational& q) { return q < 0 ? -1 : q > 0 ? 1 : 0; }

void require_tubular(const CurveData& curve) {
  const auto type = classify_type(curve);
  if (type != ReprType::Tubular)
    throw Error("not_tubular", "slopes need a tubular curve, got " + to_string(type));
}

}  // namespace

RankDegreeForms calibrate_forms(const CurveData& curve) {
  require_tubular(curve);
  const auto canonical = build_canonical(curve);
  RankDegreeForms f;
  f.curve = curve;
  f.grothendieck = grothendieck_data(PathAlgebra(canonical.presentation));
  const auto& g = f.grothendieck;
  if (g.radical_basis.cols() != 2) throw Error("calibration_failed", "radical of rank other than 2");
  f.h0 = radical_vector_vanishing_at(g.radical_basis, canonical.source);
  f.h_inf = radical_vector_vanishing_at(g.radical_basis, canonical.sink);
  const Vector<Rational> h0 = as_rational(f.h0), hi = as_rational(f.h_inf);
  const Rational c = (h0.transpose() * g.euler * hi)(0, 0);
  if (c <= 0) throw Error("calibration_failed", "<h0, h_inf> is not positive");
  f.rank_form = g.euler * hi / c;
  f.degree_form = g.euler * h0 / -c;

  const DimVector p_source = g.cartan.row(canonical.source).transpose();
  const DimVector i_sink = g.cartan.col(canonical.sink);
  f.certificate = {{"h0", slope_of(f, f.h0).to_string()},
                   {"h_inf", slope_of(f, f.h_inf).to_string()},
                   {"P(" + canonical.presentation.vertices[canonical.source] + ")", slope_of(f, p_source).to_string()},
                   {"I(" + canonical.presentation.vertices[canonical.sink] + ")", slope_of(f, i_sink).to_string()}};
  if (f.certificate[2].second != "0" || f.certificate[3].second != "inf")
    throw Error("calibration_failed", "anchor modules do not sit at slopes 0 and infinity");
  return f;
}

Rational rank_of(const RankDegreeForms& f, const DimVector& x) { return f.rank_form.dot(as_rational(x)); }
Rational degree_of(const RankDegreeForms& f, const DimVector& x) { return f.degree_form.dot(as_rational(x)); }

SlopeValue slope_of(const RankDegreeForms& f, const DimVector& x) {
  if (x.size() != f.rank_form.size()) throw Error("bad_dimension_vector", "dimension vector has the wrong length");
  const Rational r = rank_of(f, x), d = degree_of(f, x);
  if (r == 0 && d == 0) throw Error("not_in_cone", "rank and degree both vanish");
  if (r > 0) return SlopeValue::rational(d / r);
  if (r == 0 && d > 0) return SlopeValue::infinity();
  throw Error("wrong_orientation", "not a module class orientation: rank " + to_string(r) + ", degree " +
                                       to_string(d));
}

std::string to_string(Trisection t) {
  switch (t) {
    case Trisection::P: return "P";
    case Trisection::T: return "T";
    case Trisection::Q: return "Q";
  }
  return "?";
}

Trisection trisection(const RankDegreeForms& f, const DimVector& x, const SlopeValue& w) {
  if (x.size() != f.rank_form.size()) throw Error("bad_dimension_vector", "dimension vector has the wrong length");
  const Rational r = rank_of(f, x), d = degree_of(f, x);
  if (r == 0 && d == 0) throw Error("not_in_cone", "rank and degree both vanish");
  int s;
  if (r == 0) s = w.kind() == SlopeValue::Kind::infinity && d > 0 ? 0 : sign(d);
  else s = sign(r) * -compare(w, d / r);
  return s < 0 ? Trisection::P : s == 0 ? Trisection::T : Trisection::Q;
}

SlopeClassification classify_at_slope(const CurveData& curve, const SlopeValue& w) {
  require_tubular(curve);
  if (w.kind() == SlopeValue::Kind::infinity || (w.is_rational() && w.value() == 0))
    throw Error("boundary_slope", "boundary slope: classification out of scope");
  if (w.is_rational() && w.value() < 0) throw Error("bad_slope", "slopes must be positive");
  SlopeClassification out;
  out.slope = w;
  out.family_curve = curve;
  if (w.is_rational()) {
    out.branches = enumerate_branches(curve);
    out.templates = point_set_templates(curve);
    out.note = "pairs (Y, P) over the family curve of slope " + w.to_string();
  } else {
    out.irrational = ModuleExpr{sym::SlopeLukas{w.to_string()}, sym::SlopeCotilting{w.to_string()}};
    out.note = "modules of slope " + w.to_string() + " are pure-epimorphic images of direct sums of L_w";
  }
  return out;
}

BoundaryData boundary_data(const CurveData& curve) {
  const auto f = calibrate_forms(curve);
  const auto& g = f.grothendieck;
  const auto canonical = build_canonical(curve);
  BoundaryData b;
  for (Index v = 0; v < g.cartan.rows(); ++v) {
    const DimVector p = g.cartan.row(v).transpose();
    if (rank_of(f, p) > 0 && degree_of(f, p) == 0) b.zero_slope_projectives.push_back(static_cast<int>(v));
    const DimVector i = g.cartan.col(v);
    if (rank_of(f, i) == 0 && degree_of(f, i) > 0) b.infinite_slope_injectives.push_back(static_cast<int>(v));
  }
  b.m = static_cast<int>(b.zero_slope_projectives.size());
  b.l = static_cast<int>(b.infinite_slope_injectives.size());
  auto factor_weights = [&](std::vector<int> vertices) {
    Presentation p = canonical.presentation;
    std::sort(vertices.rbegin(), vertices.rend());
    for (int v : vertices) p = delete_vertex(p, v);
    const auto poly = coxeter_polynomial(grothendieck_data(PathAlgebra(p)));
    const auto w = weights_from_coxeter_polynomial(poly);
    if (!w) throw Error("boundary_weights", "no weight type matches the factor algebra");
    return *w;
  };
  b.lambda0_weights = factor_weights(b.zero_slope_projectives);
  b.lambda_inf_weights = factor_weights(b.infinite_slope_injectives);
  return b;
}

namespace {
std::vector<std::string> strings(const DimVector& v) {
  std::vector<std::string> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}
std::vector<std::string> strings(const Vector<Rational>& v) {
  std::vector<std::string> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}
}  // namespace

void to_json(nlohmann::json& j, const RankDegreeForms& f) {
  j = {{"weights", f.curve.weights},
       {"h0", strings(f.h0)},
       {"h_inf", strings(f.h_inf)},
       {"rank_form", strings(f.rank_form)},
       {"degree_form", strings(f.degree_form)},
       {"certificate", f.certificate}};
}

void to_json(nlohmann::json& j, const BoundaryData& b) {
  j = {{"lambda0_weights", b.lambda0_weights},
       {"lambda_inf_weights", b.lambda_inf_weights},
       {"m", b.m},
       {"l", b.l},
       {"zero_slope_projectives", b.zero_slope_projectives},
       {"infinite_slope_injectives", b.infinite_slope_injectives}};
}

}  // namespace cct
