#pragma once

#include "cct/algebra/curve.hpp"

#include <string>
#include <vector>

namespace cct {

/// Arrows in traversal order. The trivial path is empty and carries its
/// vertex implicitly.
using Path = std::vector<int>;

struct Arrow {
  int source = 0;
  int target = 0;
  std::string name;
};

struct PathTerm {
  Rational coeff;
  Path path;
};

/// Linear combination of parallel paths from `source` to `target`.
struct Relation {
  int source = 0;
  int target = 0;
  std::vector<PathTerm> terms;
};

/// Finite acyclic quiver with relations.
struct Presentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int arrow_count() const { return static_cast<int>(arrows.size()); }

  /// Same vertices, reversed arrows, reversed relation paths.
  Presentation opposite() const;
};

/// Canonical algebra: vertex 0 is the source, then the inner vertices of each
/// arm in order, and the sink last.
struct CanonicalPresentation {
  Presentation presentation;
  CurveData curve;
  int source = 0;
  int sink = 0;
  std::vector<std::vector<int>> arm_vertices;  // inner vertices, from the source side
  std::vector<std::vector<int>> arm_arrows;
};

CanonicalPresentation build_canonical(const CurveData& curve);

/// Presentation of A / AeA for the idempotent e of vertex v: the vertex and
/// its arrows go, relation terms through v vanish.
Presentation delete_vertex(const Presentation& p, int v);

}  // namespace cct
