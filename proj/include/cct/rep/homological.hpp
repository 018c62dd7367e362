#pragma once

#include "cct/rep/representation.hpp"

#include <cstdint>
#include <optional>

namespace cct {

template <class S>
struct HomSpace {
  Index dim = 0;
  std::vector<Morphism<S>> basis;
};

template <ExactField S>
HomSpace<S> hom_space(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n);
template <ExactField S>
Index hom_dim(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n);

/// Projective cover P0 = sum of P(tops[k]) sending the k-th generator to
/// generators[k] in M at vertex tops[k].
template <class S>
struct ProjectiveCover {
  std::vector<int> tops;
  std::vector<Vector<S>> generators;
  Representation<S> cover;
  Morphism<S> map;
};

template <ExactField S>
ProjectiveCover<S> projective_cover(const RepContext<S>& ctx, const Representation<S>& m);

/// Kernel of the projective cover, with its inclusion into P0.
template <class S>
struct Syzygy {
  ProjectiveCover<S> cover;
  Representation<S> kernel;
  std::vector<Matrix<S>> inclusion;
};

template <ExactField S>
Syzygy<S> syzygy(const RepContext<S>& ctx, const Representation<S>& m);

/// Ext^1 through the projective presentation 0 -> OmegaM -> P0 -> M -> 0.
template <ExactField S>
Index ext1_dim(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n);
/// Same, reusing a syzygy of m computed once.
template <ExactField S>
Index ext1_dim(const RepContext<S>& ctx, const Syzygy<S>& omega, const Representation<S>& m,
               const Representation<S>& n);
/// Ext^1 as cocycles modulo coboundaries of block upper-triangular extensions.
template <ExactField S>
Index ext1_dim_cocycle(const RepContext<S>& ctx, const Representation<S>& m,
                       const Representation<S>& n);
template <ExactField S>
Index ext2_dim(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n);

/// Projective dimension, computed up to `bound`; returns bound + 1 beyond it.
template <ExactField S>
int pdim(const RepContext<S>& ctx, const Representation<S>& m, int bound = 3);

/// The representation with blocks [[N_a, f_a], [0, M_a]]: N is the
/// subrepresentation and M the quotient.
template <ExactField S>
Representation<S> extension(const Representation<S>& quotient, const Representation<S>& sub,
                            const std::vector<Matrix<S>>& cocycle);

/// The middle term of a nonsplit extension 0 -> sub -> E -> quotient -> 0.
/// Throws when Ext^1(quotient, sub) is not one-dimensional and `require_unique` is set.
template <ExactField S>
std::optional<Representation<S>> nonsplit_extension(const RepContext<S>& ctx,
                                                    const Representation<S>& quotient,
                                                    const Representation<S>& sub,
                                                    bool require_unique = true);

/// Auslander-Reiten translate D Tr via a minimal projective presentation.
template <ExactField S>
Representation<S> tau(const RepContext<S>& ctx, const Representation<S>& m);
template <ExactField S>
Representation<S> tau_inverse(const RepContext<S>& ctx, const Representation<S>& m);

/// Randomized: a random element of Hom(M, N) is tested for invertibility.
template <ExactField S>
bool is_isomorphic(const RepContext<S>& ctx, const Representation<S>& m, const Representation<S>& n,
                   std::uint64_t seed = 1, int trials = 8);

/// pdim <= 1, no self-extensions and as many pairwise distinct summand tags as
/// vertices. Throws when M carries no summand metadata.
template <ExactField S>
bool is_classical_tilting(const RepContext<S>& ctx, const Representation<S>& m);

}  // namespace cct
