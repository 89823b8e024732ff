#pragma once

#include "legcount/rational.hpp"
#include "legcount/tree.hpp"
#include "legcount/weights.hpp"

#include <vector>

namespace legcount {

// ch_r(pi_* L(a)) for a = 1..r+1, stored at index a-1.
using CharacterVector = std::vector<Rational>;

// Degree-r Chern character of the pushed-forward degree-a line bundle on a
// single edge: (1/r!) sum_{k=0}^{a d_e} ((a d_e - k) l_i + k l_j)^r / d_e^r.
Rational edge_character(int edge_degree, int label_i, int label_j, int a, int r,
                        const WeightAssignment& w);

// Tree value: edges sum up, and every internal gluing subtracts one vertex
// term a^r l_v^r / r! (val(v)-1 gluings at each vertex).
Rational tree_character(const ColoredTree& t, int a, int r,
                        const WeightAssignment& w);

CharacterVector character_vector(const ColoredTree& t, int r,
                                 const WeightAssignment& w);

// Solves the (r+1)x(r+1) system M x = ch with M[a][k] = a^k (a,k = 1..r+1)
// and returns (r+1)! times the top unknown. Must agree exactly with
// incidence_class; the power matrix is never singular.
Rational incidence_from_characters(const CharacterVector& ch, int r);

Rational incidence_via_cramer(const ColoredTree& t, int r,
                              const WeightAssignment& w);

// S^q(m) = sum_{k=1}^{m} k^q.
Integer faulhaber_sum(int q, unsigned long m);

// Coefficients (index = power of x) of the degree-(q+1) polynomial S^q(x)
// with S^q(m) = faulhaber_sum(q, m); leading coefficient is 1/(q+1).
std::vector<Rational> faulhaber_coefficients(int q);

}  // namespace legcount
