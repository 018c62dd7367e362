#include "cct/algebra/path_algebra.hpp"

#include "cct/linalg/elimination.hpp"

#include <functional>

namespace cct {

PathAlgebra::PathAlgebra(Presentation presentation) : pres_(std::move(presentation)) {
  const int n = vertex_count();
  blocks_.resize(static_cast<std::size_t>(n) * n);

  // Depth-first enumeration; a path longer than the vertex count means a cycle.
  std::function<void(int, int, Path&)> walk = [&](int start, int at, Path& p) {
    if (static_cast<int>(p.size()) > n) throw Error("invalid_presentation", "quiver has a cycle");
    blocks_[start * n + at].free.push_back(p);
    for (int a = 0; a < pres_.arrow_count(); ++a) {
      if (pres_.arrows[a].source != at) continue;
      p.push_back(a);
      walk(start, pres_.arrows[a].target, p);
      p.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    Path p;
    walk(v, v, p);
  }
  for (auto& b : blocks_)
    for (std::size_t k = 0; k < b.free.size(); ++k) b.index[b.free[k]] = static_cast<Index>(k);

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      Block& b = blocks_[a * n + c];
      const Index m = static_cast<Index>(b.free.size());
      // Ideal elements u·rho·w, written in reversed column order so that the
      // echelon form eliminates the later paths first.
      std::vector<Vector<Rational>> gens;
      for (const auto& rel : pres_.relations) {
        for (const Path& u : blocks_[a * n + rel.source].free)
          for (const Path& w : blocks_[rel.target * n + c].free) {
            Vector<Rational> g = Vector<Rational>::Zero(m);
            for (const auto& t : rel.terms) {
              Path full = u;
              full.insert(full.end(), t.path.begin(), t.path.end());
              full.insert(full.end(), w.begin(), w.end());
              g(m - 1 - b.index.at(full)) += t.coeff;
            }
            gens.push_back(std::move(g));
          }
      }
      Matrix<Rational> ideal(static_cast<Index>(gens.size()), m);
      for (std::size_t r = 0; r < gens.size(); ++r) ideal.row(static_cast<Index>(r)) = gens[r].transpose();
      const auto ech = row_echelon(ideal);
      std::vector<bool> pivot(m, false);
      for (Index col : ech.pivots) pivot[m - 1 - col] = true;

      std::vector<Index> basis_index(m, -1);
      for (Index k = 0; k < m; ++k)
        if (!pivot[k]) {
          basis_index[k] = static_cast<Index>(b.basis.size());
          b.basis.push_back(b.free[k]);
        }
      b.normal_form = Matrix<Rational>::Zero(static_cast<Index>(b.basis.size()), m);
      for (Index k = 0; k < m; ++k)
        if (!pivot[k]) b.normal_form(basis_index[k], k) = 1;
      for (Index r = 0; r < ech.rank(); ++r) {
        const Index k = m - 1 - ech.pivots[r];
        for (Index col = 0; col < m; ++col) {
          const Index j = m - 1 - col;
          if (!pivot[j] && ech.reduced(r, col) != 0) b.normal_form(basis_index[j], k) = -ech.reduced(r, col);
        }
      }
    }
}

Vector<Rational> PathAlgebra::reduce(int a, int c, const Path& p) const {
  const Block& b = block(a, c);
  auto it = b.index.find(p);
  if (it == b.index.end()) throw Error("invalid_path", "path does not run between the given vertices");
  return b.normal_form.col(it->second);
}

Vector<Rational> PathAlgebra::multiply(int a, int b, int c, const Vector<Rational>& x,
                                       const Vector<Rational>& y) const {
  Vector<Rational> out = Vector<Rational>::Zero(dim(a, c));
  const auto& left = basis(a, b);
  const auto& right = basis(b, c);
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < y.size(); ++j) {
      if (y(j) == 0) continue;
      Path p = left[i];
      p.insert(p.end(), right[j].begin(), right[j].end());
      out += (x(i) * y(j)) * reduce(a, c, p);
    }
  }
  return out;
}

Matrix<Integer> PathAlgebra::cartan() const {
  const int n = vertex_count();
  Matrix<Integer> c(n, n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) c(v, w) = dim(v, w);
  return c;
}

}  // namespace cct
