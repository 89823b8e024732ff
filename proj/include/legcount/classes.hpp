#pragma once

#include "legcount/rational.hpp"
#include "legcount/tree.hpp"
#include "legcount/weights.hpp"

#include <vector>

namespace legcount {

// A (vertex, incident edge) pair with its tangent weight
// omega = (lambda_{label(vertex)} - lambda_{far label}) / d_e.
struct Flag {
    int vertex = 0;
    int edge = 0;
    Rational omega;
};

std::vector<Flag> flags_of(const ColoredTree& t, const WeightAssignment& w);

// Equivariant Euler class of the obstruction bundle restricted to the fixed
// locus of t:
//   prod_e prod_{alpha=1}^{2 d_e - 1} (alpha l_i + (2 d_e - alpha) l_j) / d_e
//   * prod_v (2 l_v)^{val(v)-1}.
// Throws degenerate_weights_error when an edge factor vanishes or some
// l_v = 0 with val(v) >= 2.
Rational obstruction_euler(const ColoredTree& t, const WeightAssignment& w);

// Equivariant class of incidence to a general codimension r+1 linear
// subspace: sum_e d_e sum_{s=0}^{r} l_i^s l_j^{r-s}. Requires
// 1 <= r <= label_bound - 1.
Rational incidence_class(const ColoredTree& t, int r, const WeightAssignment& w);

// Equivariant Euler class of the normal bundle of the fixed locus, via the
// genus-0 vertex/edge factorization
//   1/e(N) = prod_v V(v) * prod_e E(e)^{-1},
//   V(v) = (prod_{k != i(v)} (l_{i(v)} - l_k))^{val(v)-1}
//          * (sum_{F at v} 1/omega_F)^{val(v)-3} * prod_{F at v} 1/omega_F,
//   E(e) = (-1)^{d_e} (d_e!)^2 / d_e^{2 d_e} * (l_i - l_j)^{2 d_e}
//          * prod_{k != i,j} prod_{a=0}^{d_e} ((a l_i + (d_e-a) l_j)/d_e - l_k).
// Throws degenerate_weights_error on any vanishing factor.
Rational normal_bundle_euler(const ColoredTree& t, const WeightAssignment& w);

}  // namespace legcount
