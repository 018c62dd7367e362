#include "cct/algebra/presentation.hpp"

#include <algorithm>

namespace cct {

Presentation Presentation::opposite() const {
  Presentation op;
  op.vertices = vertices;
  for (const auto& a : arrows) op.arrows.push_back({a.target, a.source, a.name + "*"});
  for (const auto& r : relations) {
    Relation o{r.target, r.source, {}};
    for (const auto& t : r.terms) o.terms.push_back({t.coeff, Path(t.path.rbegin(), t.path.rend())});
    op.relations.push_back(std::move(o));
  }
  return op;
}

CanonicalPresentation build_canonical(const CurveData& curve) {
  validate(curve);
  CanonicalPresentation out;
  out.curve = curve;
  Presentation& p = out.presentation;
  p.vertices.push_back("0");
  const int arms = arm_count(curve);
  for (int i = 0; i < arms; ++i) {
    std::vector<int> inner;
    for (int j = 1; j < arm_weight(curve, i); ++j) {
      inner.push_back(p.vertex_count());
      p.vertices.push_back("x" + std::to_string(i + 1) + "," + std::to_string(j));
    }
    out.arm_vertices.push_back(std::move(inner));
  }
  out.sink = p.vertex_count();
  p.vertices.push_back("w");

  for (int i = 0; i < arms; ++i) {
    std::vector<int> chain{out.source};
    chain.insert(chain.end(), out.arm_vertices[i].begin(), out.arm_vertices[i].end());
    chain.push_back(out.sink);
    std::vector<int> arrows;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
      arrows.push_back(p.arrow_count());
      p.arrows.push_back({chain[j], chain[j + 1],
                          "a" + std::to_string(i + 1) + "," + std::to_string(j + 1)});
    }
    out.arm_arrows.push_back(std::move(arrows));
  }

  for (int i = 2; i < arms; ++i) {
    Relation r{out.source, out.sink, {}};
    r.terms.push_back({Rational(1), out.arm_arrows[i]});
    r.terms.push_back({Rational(-1), out.arm_arrows[0]});
    r.terms.push_back({-arm_lambda(curve, i), out.arm_arrows[1]});
    p.relations.push_back(std::move(r));
  }
  return out;
}

}  // namespace cct

namespace cct {

Presentation delete_vertex(const Presentation& p, int v) {
  if (v < 0 || v >= p.vertex_count()) throw Error("bad_vertex", "vertex out of range");
  auto vmap = [&](int u) { return u < v ? u : u - 1; };
  Presentation out;
  for (int u = 0; u < p.vertex_count(); ++u)
    if (u != v) out.vertices.push_back(p.vertices[u]);
  std::vector<int> amap(p.arrows.size(), -1);
  for (int a = 0; a < p.arrow_count(); ++a) {
    const auto& arrow = p.arrows[a];
    if (arrow.source == v || arrow.target == v) continue;
    amap[a] = out.arrow_count();
    out.arrows.push_back({vmap(arrow.source), vmap(arrow.target), arrow.name});
  }
  for (const auto& rel : p.relations) {
    if (rel.source == v || rel.target == v) continue;
    Relation r{vmap(rel.source), vmap(rel.target), {}};
    for (const auto& t : rel.terms) {
      Path path;
      bool kept = true;
      for (int a : t.path) {
        kept = kept && amap[a] >= 0;
        path.push_back(amap[a]);
      }
      if (kept) r.terms.push_back({t.coeff, path});
    }
    if (!r.terms.empty()) out.relations.push_back(std::move(r));
  }
  return out;
}

}  // namespace cct
