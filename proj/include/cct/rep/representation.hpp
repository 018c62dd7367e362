#pragma once

#include "cct/algebra/grothendieck.hpp"
#include "cct/algebra/path_algebra.hpp"
#include "cct/linalg/matrix.hpp"

#include <string>
#include <vector>

namespace cct {

/// The algebra, its opposite and the base field a family of representations
/// lives over. Cheap to copy.
template <ExactField S>
class RepContext {
 public:
  RepContext(PathAlgebraPtr algebra, PathAlgebraPtr opposite, FieldSpec field)
      : algebra_(std::move(algebra)), opposite_(std::move(opposite)), field_(field) {}

  static RepContext make(const Presentation& p, FieldSpec field) {
    return RepContext(std::make_shared<PathAlgebra>(p), std::make_shared<PathAlgebra>(p.opposite()),
                      field);
  }

  const PathAlgebra& algebra() const { return *algebra_; }
  const Presentation& presentation() const { return algebra_->presentation(); }
  const FieldSpec& field() const { return field_; }
  int vertex_count() const { return algebra_->vertex_count(); }
  RepContext opposite() const { return RepContext(opposite_, algebra_, field_); }

  S scalar(const Rational& q) const { return field_traits<S>::from(q, field_); }
  Matrix<S> convert(const Matrix<Rational>& m) const { return to_field<S>(m, field_); }
  Vector<S> convert(const Vector<Rational>& v) const {
    return to_field<S>(Matrix<Rational>(v), field_).col(0);
  }

 private:
  PathAlgebraPtr algebra_;
  PathAlgebraPtr opposite_;
  FieldSpec field_;
};

/// Finite-dimensional representation: a vector space per vertex and a matrix
/// per arrow (target dimension x source dimension).
///
/// `summands` lists tags of the indecomposable direct summands when known.
template <class S>
struct Representation {
  std::vector<Index> dims;
  std::vector<Matrix<S>> maps;
  std::vector<std::string> summands;

  Index total_dim() const {
    Index t = 0;
    for (Index d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }
  DimVector dim_vector() const { return to_dim_vector(dims); }
};

/// One linear map per vertex.
template <class S>
using Morphism = std::vector<Matrix<S>>;

template <ExactField S>
Representation<S> zero_representation(const RepContext<S>& ctx);
template <ExactField S>
Representation<S> simple_module(const RepContext<S>& ctx, int v);
template <ExactField S>
Representation<S> projective_module(const RepContext<S>& ctx, int v);
template <ExactField S>
Representation<S> injective_module(const RepContext<S>& ctx, int v);

template <ExactField S>
Representation<S> direct_sum(const Representation<S>& a, const Representation<S>& b);

/// Vector-space dual, a representation of the opposite algebra.
template <ExactField S>
Representation<S> dual(const Representation<S>& m);

/// Matrix of a path acting on M.
template <ExactField S>
Matrix<S> evaluate(const RepContext<S>& ctx, const Representation<S>& m, int from, const Path& p);

/// Throws on shape errors; false when some relation does not vanish.
template <ExactField S>
bool satisfies_relations(const RepContext<S>& ctx, const Representation<S>& m);

/// Restriction of M to subspaces `inclusions[v]` (columns form a basis)
/// that are stable under all arrows.
template <ExactField S>
Representation<S> subrepresentation(const RepContext<S>& ctx, const Representation<S>& m,
                                    const std::vector<Matrix<S>>& inclusions);

}  // namespace cct
