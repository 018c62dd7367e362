#include "cct/algebra/grothendieck.hpp"

#include "cct/linalg/elimination.hpp"
#include "cct/linalg/smith.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace cct {

namespace {

Matrix<Rational> to_rational(const Matrix<Integer>& m) { return m.cast<Rational>(); }

Vector<Rational> to_rational(const DimVector& v) { return v.cast<Rational>(); }

// Coefficients of prod over the multiset of (1 + x + ... + x^{q-1}), times (x - 1)^2.
std::vector<Rational> canonical_coxeter_polynomial(const std::vector<int>& weights) {
  std::vector<Rational> poly{1, -2, 1};
  for (int q : weights) {
    std::vector<Rational> next(poly.size() + q - 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int k = 0; k < q; ++k) next[i + k] += poly[i];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

GrothendieckData grothendieck_data(const PathAlgebra& algebra) {
  GrothendieckData g;
  g.cartan = algebra.cartan();
  const auto inv = inverse(to_rational(g.cartan));
  if (!inv) throw Error("singular_cartan", "Cartan matrix is singular");
  g.euler = *inv;
  const Matrix<Rational> c = to_rational(g.cartan);
  const auto ct_inv = inverse(Matrix<Rational>(c.transpose()));
  g.coxeter = -(c * *ct_inv);
  g.symmetrized = g.euler + g.euler.transpose();
  g.radical_basis = integer_kernel(clear_denominators(g.symmetrized));
  return g;
}

Rational euler_form(const GrothendieckData& g, const DimVector& x, const DimVector& y) {
  return to_rational(x).dot(g.euler * to_rational(y));
}

Rational quadratic_form(const GrothendieckData& g, const DimVector& x) { return euler_form(g, x, x); }

bool is_positive_semidefinite(const Matrix<Rational>& symmetric) {
  Matrix<Rational> a = symmetric;
  const Index n = a.rows();
  std::vector<bool> done(n, false);
  for (Index step = 0; step < n; ++step) {
    Index pivot = -1;
    for (Index i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (a(i, i) < 0) return false;
      if (a(i, i) > 0 && pivot < 0) pivot = i;
    }
    if (pivot < 0) {
      // All remaining diagonal entries vanish; PSD forces the block to vanish.
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a(i, j) != 0) return false;
      return true;
    }
    done[pivot] = true;
    for (Index i = 0; i < n; ++i) {
      if (done[i] || a(i, pivot) == 0) continue;
      const Rational f = a(i, pivot) / a(pivot, pivot);
      for (Index j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= f * a(pivot, j);
    }
  }
  return true;
}

ReprType classify_form(const GrothendieckData& g) {
  if (!is_positive_semidefinite(g.symmetrized)) return ReprType::Wild;
  switch (g.radical_basis.cols()) {
    case 1: return ReprType::Domestic;
    case 2: return ReprType::Tubular;
    default: return ReprType::Wild;
  }
}

// The Cartan matrix of a canonical algebra depends on the weights alone.
ReprType classify_type(const CurveData& curve) {
  static std::mutex mutex;
  static std::map<std::vector<int>, ReprType> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(curve.weights); it != memo.end()) return it->second;
  }
  const PathAlgebra a(build_canonical(curve).presentation);
  const auto type = classify_form(grothendieck_data(a));
  std::lock_guard lock(mutex);
  memo.emplace(curve.weights, type);
  return type;
}

std::vector<Rational> coxeter_polynomial(const GrothendieckData& g) {
  return characteristic_polynomial(g.coxeter);
}

std::optional<std::vector<int>> weights_from_coxeter_polynomial(const std::vector<Rational>& poly) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 2) return std::nullopt;
  std::vector<std::vector<int>> found;
  std::vector<int> current;
  // Multisets of weights >= 2 in descending order with sum(q - 1) = n - 2.
  std::function<void(int, int)> search = [&](int remaining, int max_weight) {
    if (remaining == 0) {
      if (canonical_coxeter_polynomial(current) == poly) found.push_back(current);
      return;
    }
    for (int q = std::min(max_weight, remaining + 1); q >= 2; --q) {
      current.push_back(q);
      search(remaining - (q - 1), q);
      current.pop_back();
    }
  };
  search(n - 2, n - 1);
  if (found.size() != 1) return std::nullopt;
  return found.front();
}

DimVector to_dim_vector(const std::vector<Index>& dims) {
  DimVector v(static_cast<Index>(dims.size()));
  for (std::size_t i = 0; i < dims.size(); ++i) v(static_cast<Index>(i)) = dims[i];
  return v;
}

}  // namespace cct
