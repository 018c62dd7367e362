#include "cct/rep/representation.hpp"

#include "cct/linalg/elimination.hpp"

namespace cct {

template <ExactField S>
Representation<S> zero_representation(const RepContext<S>& ctx) {
  Representation<S> m;
  m.dims.assign(ctx.vertex_count(), 0);
  for (const auto& a : ctx.presentation().arrows) {
    (void)a;
    m.maps.push_back(Matrix<S>(0, 0));
  }
  return m;
}

template <ExactField S>
Representation<S> simple_module(const RepContext<S>& ctx, int v) {
  Representation<S> m;
  for (int w = 0; w < ctx.vertex_count(); ++w) m.dims.push_back(w == v ? 1 : 0);
  for (const auto& a : ctx.presentation().arrows)
    m.maps.push_back(Matrix<S>::Zero(m.dims[a.target], m.dims[a.source]));
  m.summands = {"S(" + ctx.presentation().vertices[v] + ")"};
  return m;
}

template <ExactField S>
Representation<S> projective_module(const RepContext<S>& ctx, int v) {
  const PathAlgebra& alg = ctx.algebra();
  Representation<S> m;
  for (int w = 0; w < ctx.vertex_count(); ++w) m.dims.push_back(alg.dim(v, w));
  for (int a = 0; a < ctx.presentation().arrow_count(); ++a) {
    const auto& arrow = ctx.presentation().arrows[a];
    Matrix<Rational> block(m.dims[arrow.target], m.dims[arrow.source]);
    const auto& paths = alg.basis(v, arrow.source);
    for (std::size_t k = 0; k < paths.size(); ++k) {
      Path p = paths[k];
      p.push_back(a);
      block.col(static_cast<Index>(k)) = alg.reduce(v, arrow.target, p);
    }
    m.maps.push_back(ctx.convert(block));
  }
  m.summands = {"P(" + ctx.presentation().vertices[v] + ")"};
  return m;
}

template <ExactField S>
Representation<S> injective_module(const RepContext<S>& ctx, int u) {
  const PathAlgebra& alg = ctx.algebra();
  Representation<S> m;
  for (int w = 0; w < ctx.vertex_count(); ++w) m.dims.push_back(alg.dim(w, u));
  for (int a = 0; a < ctx.presentation().arrow_count(); ++a) {
    const auto& arrow = ctx.presentation().arrows[a];
    // q in basis(target, u) goes to a·q in basis(source, u); I(u) carries the transpose.
    Matrix<Rational> t(m.dims[arrow.source], m.dims[arrow.target]);
    const auto& paths = alg.basis(arrow.target, u);
    for (std::size_t k = 0; k < paths.size(); ++k) {
      Path p{a};
      p.insert(p.end(), paths[k].begin(), paths[k].end());
      t.col(static_cast<Index>(k)) = alg.reduce(arrow.source, u, p);
    }
    m.maps.push_back(ctx.convert(Matrix<Rational>(t.transpose())));
  }
  m.summands = {"I(" + ctx.presentation().vertices[u] + ")"};
  return m;
}

template <ExactField S>
Representation<S> direct_sum(const Representation<S>& a, const Representation<S>& b) {
  if (a.dims.size() != b.dims.size() || a.maps.size() != b.maps.size())
    throw Error("mismatched_presentation", "direct sum of representations of different quivers");
  Representation<S> m;
  for (std::size_t v = 0; v < a.dims.size(); ++v) m.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t k = 0; k < a.maps.size(); ++k) m.maps.push_back(block_diagonal<S>({a.maps[k], b.maps[k]}));
  m.summands = a.summands;
  m.summands.insert(m.summands.end(), b.summands.begin(), b.summands.end());
  return m;
}

template <ExactField S>
Representation<S> dual(const Representation<S>& m) {
  Representation<S> d;
  d.dims = m.dims;
  for (const auto& x : m.maps) d.maps.push_back(x.transpose());
  for (const auto& s : m.summands) d.summands.push_back("D" + s);
  return d;
}

template <ExactField S>
Matrix<S> evaluate(const RepContext<S>& ctx, const Representation<S>& m, int from, const Path& p) {
  Matrix<S> x = Matrix<S>::Identity(m.dims[from], m.dims[from]);
  int at = from;
  for (int a : p) {
    const auto& arrow = ctx.presentation().arrows[a];
    if (arrow.source != at) throw Error("invalid_path", "arrows do not compose");
    x = m.maps[a] * x;
    at = arrow.target;
  }
  return x;
}

template <ExactField S>
bool satisfies_relations(const RepContext<S>& ctx, const Representation<S>& m) {
  const Presentation& p = ctx.presentation();
  if (static_cast<int>(m.dims.size()) != p.vertex_count() ||
      static_cast<int>(m.maps.size()) != p.arrow_count())
    throw Error("mismatched_presentation", "representation does not fit the quiver");
  for (int a = 0; a < p.arrow_count(); ++a)
    if (m.maps[a].rows() != m.dims[p.arrows[a].target] || m.maps[a].cols() != m.dims[p.arrows[a].source])
      throw Error("shape_error", "arrow matrix " + p.arrows[a].name + " has the wrong shape");
  for (const auto& rel : p.relations) {
    Matrix<S> sum = Matrix<S>::Zero(m.dims[rel.target], m.dims[rel.source]);
    for (const auto& t : rel.terms) sum += ctx.scalar(t.coeff) * evaluate(ctx, m, rel.source, t.path);
    for (Index i = 0; i < sum.rows(); ++i)
      for (Index j = 0; j < sum.cols(); ++j)
        if (!field_traits<S>::is_zero(sum(i, j))) return false;
  }
  return true;
}

template <ExactField S>
Representation<S> subrepresentation(const RepContext<S>& ctx, const Representation<S>& m,
                                    const std::vector<Matrix<S>>& inclusions) {
  Representation<S> sub;
  for (const auto& k : inclusions) sub.dims.push_back(k.cols());
  for (int a = 0; a < ctx.presentation().arrow_count(); ++a) {
    const auto& arrow = ctx.presentation().arrows[a];
    const Matrix<S>& src = inclusions[arrow.source];
    const Matrix<S>& tgt = inclusions[arrow.target];
    if (src.cols() == 0 || tgt.cols() == 0) {
      sub.maps.push_back(Matrix<S>::Zero(tgt.cols(), src.cols()));
      continue;
    }
    const auto x = solve(tgt, Matrix<S>(m.maps[a] * src));
    if (!x) throw Error("not_a_subrepresentation", "subspaces are not stable under the arrows");
    sub.maps.push_back(*x);
  }
  return sub;
}

#define CCT_INSTANTIATE(S)                                                                           \
  template Representation<S> zero_representation(const RepContext<S>&);                             \
  template Representation<S> simple_module(const RepContext<S>&, int);                              \
  template Representation<S> projective_module(const RepContext<S>&, int);                          \
  template Representation<S> injective_module(const RepContext<S>&, int);                           \
  template Representation<S> direct_sum(const Representation<S>&, const Representation<S>&);        \
  template Representation<S> dual(const Representation<S>&);                                        \
  template Matrix<S> evaluate(const RepContext<S>&, const Representation<S>&, int, const Path&);    \
  template bool satisfies_relations(const RepContext<S>&, const Representation<S>&);                \
  template Representation<S> subrepresentation(const RepContext<S>&, const Representation<S>&,      \
                                               const std::vector<Matrix<S>>&);

CCT_INSTANTIATE(Rational)
CCT_INSTANTIATE(ModP)

}  // namespace cct
