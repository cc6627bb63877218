#pragma once

#include "tricover/cover.hpp"
#include "tricover/grid.hpp"
#include "tricover/rational.hpp"

namespace tricover {

// Optimal fractional cover value of T_2(n) by residue of n mod 3:
//   n=3j+1: 2j+1     n=3j+2: 2j+1+(2j+1)/(3j+2)     n=3j+3: 2j+2+(j+1)/(3j+4)
Rational f_star_closed_form_2d(int n);

// Optimal fractional line cover of T_2(n): lines x=i, y=i and a matching diagonal
// per index i carry linearly decreasing weights. Attains f_star_closed_form_2d(n).
FractionalCover fractional_cover_2d(int n);

// Matching dual witness: masses on concentric hexagon shells (plus a small core
// set for n not 1 mod 3). Total mass equals f_star_closed_form_2d(n) and no line
// collects more than 1.
MassCertificate mass_certificate_2d(int n);

// Optimal integer k-covers of T_2(n) for k <= 4, with cardinalities
// n, ceil(3n/2), ceil(9n/4), 3n. Throws for k outside 1..4.
IntegerCover kcover_2d(int n, int k);

// Cardinality-n 1-cover {x_1 = i}.
IntegerCover cover_k1_general(const GridShape& shape);

// 2-cover of cardinality n + ceil(n/d): axis hyperplanes at the first q or q+1
// offsets per direction plus q diagonals, where n + ceil(n/d) = q(d+1) + r.
IntegerCover cover_k2_general(const GridShape& shape);

// 3-cover of cardinality (d+1)*ceil(n/(d-1)) for d >= 3: every direction
// (including the diagonal) at offsets 0..ceil(n/(d-1))-1. Throws for d < 3.
IntegerCover cover_k3_general(const GridShape& shape);

// Block k-cover behind slope_constant(d, k): consecutive offset blocks of all
// d+1 directions with decreasing multiplicities. Throws std::invalid_argument
// when n is too small for the blocks to stay inside the standard offsets
// (see block_cover_in_threshold).
IntegerCover block_cover(const GridShape& shape, int k);
bool block_cover_in_threshold(const GridShape& shape, int k);

// d=2 lifted k-cover: blocks B_u of the three line directions with multiplicity
// k-j-u, j = floor((k-1)/3). Cardinality 3*ceil(n/M)*N(N+1)/2 with N = k-j-1,
// M = 2k-3j-2. Throws when blocks would leave the standard offsets.
IntegerCover lifted_cover_2d(int n, int k);
bool lifted_cover_in_threshold(int n, int k);

// Leading coefficient C_{d,k} of the block construction: cardinality is
// C_{d,k}*n + O(1), and |cardinality - C_{d,k}*n| <= C_{d,k}*M.
Rational slope_constant(int d, int k);

// The d+1 facets of T_d(2) with weight 1/d each; total 1 + 1/d, which is optimal.
FractionalCover simplex_fractional_cover(int d);

// Seven-plane fractional cover of T_3(3) of total weight 11/6: the four facets
// at weight 1/3 plus the three planes x_i + x_j = 1 at weight 1/6.
FractionalCover cover_333();

}  // namespace tricover
