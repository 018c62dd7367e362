#pragma once

#include "cct/algebra/presentation.hpp"
#include "cct/linalg/matrix.hpp"

#include <map>
#include <memory>
#include <vector>

namespace cct {

/// Bound quiver algebra kQ/I of an acyclic presentation, with a basis of
/// paths for every pair of vertices and a normal form for arbitrary paths.
class PathAlgebra {
 public:
  explicit PathAlgebra(Presentation presentation);

  const Presentation& presentation() const { return pres_; }
  int vertex_count() const { return pres_.vertex_count(); }

  /// All paths of the free path algebra from a to c.
  const std::vector<Path>& free_paths(int a, int c) const { return block(a, c).free; }
  /// Paths forming a basis of e_a (kQ/I) e_c.
  const std::vector<Path>& basis(int a, int c) const { return block(a, c).basis; }
  Index dim(int a, int c) const { return static_cast<Index>(basis(a, c).size()); }

  /// Coordinates of a path from a to c in `basis(a, c)`.
  Vector<Rational> reduce(int a, int c, const Path& p) const;

  /// Product x·y for x in e_a A e_b and y in e_b A e_c (first x, then y).
  Vector<Rational> multiply(int a, int b, int c, const Vector<Rational>& x,
                            const Vector<Rational>& y) const;

  /// C(v, w) = dim e_v A e_w; row v is the dimension vector of P(v).
  Matrix<Integer> cartan() const;

 private:
  struct Block {
    std::vector<Path> free;
    std::vector<Path> basis;
    std::map<Path, Index> index;
    Matrix<Rational> normal_form;  // basis coordinates of each free path, by column
  };
  const Block& block(int a, int c) const { return blocks_[a * vertex_count() + c]; }

  Presentation pres_;
  std::vector<Block> blocks_;
};

using PathAlgebraPtr = std::shared_ptr<const PathAlgebra>;

}  // namespace cct
