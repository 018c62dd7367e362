#include "cct/rep/homological.hpp"

#include "cct/linalg/elimination.hpp"

#include <random>
#include <set>

namespace cct {

namespace {

void check_same_quiver(const auto& m, const auto& n) {
  if (m.dims.size() != n.dims.size() || m.maps.size() != n.maps.size())
    throw Error("mismatched_presentation", "representations of different quivers");
}

// Linear map h -> (N_a h_s - h_t M_a)_a from vertex-wise maps M -> N to
// arrow-wise maps M_s -> N_t. Its kernel is Hom(M, N), its image the coboundaries.
template <ExactField S>
struct Coboundary {
  Matrix<S> matrix;
  std::vector<Index> vertex_offset;
  std::vector<Index> arrow_offset;
};

template <ExactField S>
Coboundary<S> coboundary(const RepContext<S>& ctx, const Representation<S>& m,
                         const Representation<S>& n) {
  const Presentation& p = ctx.presentation();
  Coboundary<S> c;
  Index cols = 0, rows = 0;
  for (int v = 0; v < p.vertex_count(); ++v) {
    c.vertex_offset.push_back(cols);
    cols += n.dims[v] * m.dims[v];
  }
  for (const auto& a : p.arrows) {
    c.arrow_offset.push_back(rows);
    rows += n.dims[a.target] * m.dims[a.source];
  }
  c.matrix = Matrix<S>::Zero(rows, cols);
  for (int k = 0; k < p.arrow_count(); ++k) {
    const auto& a = p.arrows[k];
    const Index r = n.dims[a.target] * m.dims[a.source];
    if (r == 0) continue;
    const Index cs = n.dims[a.source] * m.dims[a.source];
    const Index ct = n.dims[a.target] * m.dims[a.target];
    if (cs > 0)
      c.matrix.block(c.arrow_offset[k], c.vertex_offset[a.source], r, cs) =
          kron(Matrix<S>::Identity(m.dims[a.source], m.dims[a.source]), n.maps[k]);
    if (ct > 0)
      c.matrix.block(c.arrow_offset[k], c.vertex_offset[a.target], r, ct) =
          -kron(Matrix<S>(m.maps[k].transpose()), Matrix<S>::Identity(n.dims[a.target], n.dims[a.target]));
  }
  return c;
}

// Linear conditions on (f_a)_a making the block upper-triangular
// representation satisfy the relations.
template <ExactField S>
Matrix<S> cocycle_conditions(const RepContext<S>& ctx, const Representation<S>& m,
                             const Representation<S>& n, const std::vector<Index>& arrow_offset,
                             Index unknowns) {
  const Presentation& p = ctx.presentation();
  std::vector<Matrix<S>> blocks;
  Index rows = 0;
  for (const auto& rel : p.relations) {
    const Index r = n.dims[rel.target] * m.dims[rel.source];
    Matrix<S> block = Matrix<S>::Zero(r, unknowns);
    if (r > 0)
      for (const auto& term : rel.terms) {
        const S coeff = ctx.scalar(term.coeff);
        for (std::size_t j = 0; j < term.path.size(); ++j) {
          const int a = term.path[j];
          const auto& arrow = p.arrows[a];
          const Index width = n.dims[arrow.target] * m.dims[arrow.source];
          if (width == 0) continue;
          const Path before(term.path.begin(), term.path.begin() + static_cast<long>(j));
          const Path after(term.path.begin() + static_cast<long>(j) + 1, term.path.end());
          const Matrix<S> left = evaluate(ctx, n, arrow.target, after);
          const Matrix<S> right = evaluate(ctx, m, rel.source, before);
          block.middleCols(arrow_offset[a], width) += coeff * kron(Matrix<S>(right.transpose()), left);
        }
      }
    rows += r;
    blocks.push_back(std::move(block));
  }
  Matrix<S> out(rows, unknowns);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

template <ExactField S>
Matrix<S> radical_span(const RepContext<S>& ctx, const Representation<S>& m, int v) {
  std::vector<Matrix<S>> images;
  const Presentation& p = ctx.presentation();
  for (int a = 0; a < p.arrow_count(); ++a)
    if (p.arrows[a].target == v) images.push_back(m.maps[a]);
  return hstack<S>(images, m.dims[v]);
}

}  // namespace

template <ExactField S>
HomSpace<S> hom_space(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n) {
  check_same_quiver(m, n);
  const auto c = coboundary(ctx, m, n);
  const Matrix<S> k = kernel_basis(c.matrix);
  HomSpace<S> out;
  out.dim = k.cols();
  for (Index j = 0; j < k.cols(); ++j) {
    Morphism<S> f;
    for (int v = 0; v < ctx.vertex_count(); ++v)
      f.push_back(unvec(k.col(j).segment(c.vertex_offset[v], n.dims[v] * m.dims[v]), n.dims[v], m.dims[v]));
    out.basis.push_back(std::move(f));
  }
  return out;
}

template <ExactField S>
Index hom_dim(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n) {
  check_same_quiver(m, n);
  const auto c = coboundary(ctx, m, n);
  return c.matrix.cols() - rank(c.matrix);
}

template <ExactField S>
ProjectiveCover<S> projective_cover(const RepContext<S>& ctx, const Representation<S>& m) {
  ProjectiveCover<S> pc;
  const int n = ctx.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (m.dims[v] == 0) continue;
    const Matrix<S> gens = complement_basis(radical_span(ctx, m, v));
    for (Index k = 0; k < gens.cols(); ++k) {
      pc.tops.push_back(v);
      pc.generators.push_back(gens.col(k));
    }
  }
  pc.cover = zero_representation(ctx);
  for (int u : pc.tops) pc.cover = direct_sum(pc.cover, projective_module(ctx, u));
  for (int w = 0; w < n; ++w) {
    std::vector<Matrix<S>> cols;
    for (std::size_t k = 0; k < pc.tops.size(); ++k) {
      const auto& paths = ctx.algebra().basis(pc.tops[k], w);
      Matrix<S> block(m.dims[w], static_cast<Index>(paths.size()));
      for (std::size_t q = 0; q < paths.size(); ++q)
        block.col(static_cast<Index>(q)) = evaluate(ctx, m, pc.tops[k], paths[q]) * pc.generators[k];
      cols.push_back(std::move(block));
    }
    pc.map.push_back(hstack<S>(cols, m.dims[w]));
  }
  return pc;
}

template <ExactField S>
Syzygy<S> syzygy(const RepContext<S>& ctx, const Representation<S>& m) {
  Syzygy<S> s;
  s.cover = projective_cover(ctx, m);
  for (int w = 0; w < ctx.vertex_count(); ++w) s.inclusion.push_back(kernel_basis(s.cover.map[w]));
  s.kernel = subrepresentation(ctx, s.cover.cover, s.inclusion);
  return s;
}

template <ExactField S>
Index ext1_dim(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n) {
  check_same_quiver(m, n);
  return ext1_dim(ctx, syzygy(ctx, m), m, n);
}

template <ExactField S>
Index ext1_dim(const RepContext<S>& ctx, const Syzygy<S>& omega, const Representation<S>& m,
               const Representation<S>& n) {
  Index from_cover = 0;
  for (int u : omega.cover.tops) from_cover += n.dims[u];
  return hom_dim(ctx, omega.kernel, n) - from_cover + hom_dim(ctx, m, n);
}

template <ExactField S>
Index ext1_dim_cocycle(const RepContext<S>& ctx, const Representation<S>& m,
                       const Representation<S>& n) {
  check_same_quiver(m, n);
  const auto c = coboundary(ctx, m, n);
  const Matrix<S> z = cocycle_conditions(ctx, m, n, c.arrow_offset, c.matrix.rows());
  return (z.cols() - rank(z)) - rank(c.matrix);
}

template <ExactField S>
Index ext2_dim(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n) {
  return ext1_dim(ctx, syzygy(ctx, m).kernel, n);
}

template <ExactField S>
int pdim(const RepContext<S>& ctx, const Representation<S>& m, int bound) {
  Representation<S> current = m;
  for (int d = 0; d <= bound; ++d) {
    current = syzygy(ctx, current).kernel;
    if (current.is_zero()) return d;
  }
  return bound + 1;
}

template <ExactField S>
Representation<S> extension(const Representation<S>& quotient, const Representation<S>& sub,
                            const std::vector<Matrix<S>>& cocycle) {
  check_same_quiver(quotient, sub);
  Representation<S> e;
  for (std::size_t v = 0; v < sub.dims.size(); ++v) e.dims.push_back(sub.dims[v] + quotient.dims[v]);
  for (std::size_t k = 0; k < sub.maps.size(); ++k) {
    const auto& n = sub.maps[k];
    const auto& q = quotient.maps[k];
    Matrix<S> block = Matrix<S>::Zero(n.rows() + q.rows(), n.cols() + q.cols());
    block.topLeftCorner(n.rows(), n.cols()) = n;
    block.bottomRightCorner(q.rows(), q.cols()) = q;
    block.topRightCorner(n.rows(), q.cols()) = cocycle[k];
    e.maps.push_back(std::move(block));
  }
  return e;
}

template <ExactField S>
std::optional<Representation<S>> nonsplit_extension(const RepContext<S>& ctx,
                                                    const Representation<S>& quotient,
                                                    const Representation<S>& sub,
                                                    bool require_unique) {
  const auto c = coboundary(ctx, quotient, sub);
  const Matrix<S> z = kernel_basis(cocycle_conditions(ctx, quotient, sub, c.arrow_offset, c.matrix.rows()));
  const Index b = rank(c.matrix);
  const Index dim = z.cols() - b;
  if (require_unique && dim != 1)
    throw Error("extension_not_unique", "expected a one-dimensional Ext^1, found " + std::to_string(dim));
  if (dim == 0) return std::nullopt;
  for (Index j = 0; j < z.cols(); ++j) {
    Matrix<S> joined(c.matrix.rows(), c.matrix.cols() + 1);
    joined << c.matrix, z.col(j);
    if (rank(joined) == b) continue;
    std::vector<Matrix<S>> f;
    const Presentation& p = ctx.presentation();
    for (int a = 0; a < p.arrow_count(); ++a) {
      const Index rows = sub.dims[p.arrows[a].target];
      const Index cols = quotient.dims[p.arrows[a].source];
      f.push_back(unvec(z.col(j).segment(c.arrow_offset[a], rows * cols), rows, cols));
    }
    return extension(quotient, sub, f);
  }
  return std::nullopt;
}

template <ExactField S>
Representation<S> tau(const RepContext<S>& ctx, const Representation<S>& m) {
  const PathAlgebra& alg = ctx.algebra();
  const int n = ctx.vertex_count();
  const auto s0 = syzygy(ctx, m);
  if (s0.kernel.is_zero()) return zero_representation(ctx);
  const auto p1 = projective_cover(ctx, s0.kernel);
  const auto& u = s0.cover.tops;
  const auto& v = p1.tops;

  // Component p[l][k] of the l-th relation in e_{u_k} A e_{v_l}.
  std::vector<std::vector<Vector<S>>> rel(v.size());
  for (std::size_t l = 0; l < v.size(); ++l) {
    const Vector<S> g = s0.inclusion[v[l]] * p1.generators[l];
    Index at = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const Index d = alg.dim(u[k], v[l]);
      rel[l].push_back(g.segment(at, d));
      at += d;
    }
  }

  Representation<S> nu = zero_representation(ctx);
  for (int vl : v) nu = direct_sum(nu, injective_module(ctx, vl));

  std::vector<Matrix<S>> kernels;
  for (int w = 0; w < n; ++w) {
    Index rows = 0, cols = 0;
    std::vector<Index> row_at, col_at;
    for (int vl : v) {
      row_at.push_back(rows);
      rows += alg.dim(w, vl);
    }
    for (int uk : u) {
      col_at.push_back(cols);
      cols += alg.dim(w, uk);
    }
    Matrix<S> f = Matrix<S>::Zero(rows, cols);
    for (std::size_t k = 0; k < u.size(); ++k) {
      const auto& left = alg.basis(w, u[k]);
      for (std::size_t l = 0; l < v.size(); ++l) {
        const auto& right = alg.basis(u[k], v[l]);
        for (std::size_t q = 0; q < left.size(); ++q)
          for (std::size_t r = 0; r < right.size(); ++r) {
            const S coeff = rel[l][k](static_cast<Index>(r));
            if (field_traits<S>::is_zero(coeff)) continue;
            Path path = left[q];
            path.insert(path.end(), right[r].begin(), right[r].end());
            f.block(row_at[l], col_at[k] + static_cast<Index>(q), alg.dim(w, v[l]), 1) +=
                coeff * ctx.convert(alg.reduce(w, v[l], path));
          }
      }
    }
    kernels.push_back(kernel_basis(Matrix<S>(f.transpose())));
  }
  return subrepresentation(ctx, nu, kernels);
}

template <ExactField S>
Representation<S> tau_inverse(const RepContext<S>& ctx, const Representation<S>& m) {
  Representation<S> out = dual(tau(ctx.opposite(), dual(m)));
  out.summands.clear();
  return out;
}

template <ExactField S>
bool is_isomorphic(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n,
                   std::uint64_t seed, int trials) {
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  const auto h = hom_space(ctx, m, n);
  if (h.dim == 0) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  for (int t = 0; t < trials; ++t) {
    Morphism<S> f;
    for (int v = 0; v < ctx.vertex_count(); ++v) f.push_back(Matrix<S>::Zero(n.dims[v], m.dims[v]));
    for (const auto& b : h.basis) {
      const S c = ctx.scalar(Rational(coeff(rng)));
      for (int v = 0; v < ctx.vertex_count(); ++v) f[v] += c * b[v];
    }
    bool invertible = true;
    for (int v = 0; v < ctx.vertex_count() && invertible; ++v)
      invertible = rank(f[v]) == m.dims[v];
    if (invertible) return true;
  }
  return false;
}

template <ExactField S>
bool is_classical_tilting(const RepContext<S>& ctx, const Representation<S>& m) {
  if (!m.is_zero() && m.summands.empty())
    throw Error("missing_metadata", "module carries no summand decomposition");
  const std::set<std::string> distinct(m.summands.begin(), m.summands.end());
  if (static_cast<int>(distinct.size()) != ctx.vertex_count()) return false;
  if (pdim(ctx, m) > 1) return false;
  return ext1_dim(ctx, m, m) == 0;
}

#define CCT_INSTANTIATE(S)                                                                            \
  template HomSpace<S> hom_space(const RepContext<S>&, const Representation<S>&,                     \
                                 const Representation<S>&);                                          \
  template Index hom_dim(const RepContext<S>&, const Representation<S>&, const Representation<S>&);  \
  template ProjectiveCover<S> projective_cover(const RepContext<S>&, const Representation<S>&);      \
  template Syzygy<S> syzygy(const RepContext<S>&, const Representation<S>&);                         \
  template Index ext1_dim(const RepContext<S>&, const Syzygy<S>&, const Representation<S>&,          \
                          const Representation<S>&);                                                 \
  template Index ext1_dim(const RepContext<S>&, const Representation<S>&, const Representation<S>&); \
  template Index ext1_dim_cocycle(const RepContext<S>&, const Representation<S>&,                    \
                                  const Representation<S>&);                                         \
  template Index ext2_dim(const RepContext<S>&, const Representation<S>&, const Representation<S>&); \
  template int pdim(const RepContext<S>&, const Representation<S>&, int);                            \
  template Representation<S> extension(const Representation<S>&, const Representation<S>&,           \
                                       const std::vector<Matrix<S>>&);                               \
  template std::optional<Representation<S>> nonsplit_extension(                                      \
      const RepContext<S>&, const Representation<S>&, const Representation<S>&, bool);               \
  template Representation<S> tau(const RepContext<S>&, const Representation<S>&);                    \
  template Representation<S> tau_inverse(const RepContext<S>&, const Representation<S>&);            \
  template bool is_isomorphic(const RepContext<S>&, const Representation<S>&,                        \
                              const Representation<S>&, std::uint64_t, int);                         \
  template bool is_classical_tilting(const RepContext<S>&, const Representation<S>&);

CCT_INSTANTIATE(Rational)
CCT_INSTANTIATE(ModP)

}  // namespace cct
