#pragma once

#include "ntoric/base.hpp"

namespace ntoric {

// Negative continued fraction data of a coprime pair 0 <= beta < alpha:
// alpha/beta = [b_1,...,b_s] = b_1 - 1/(b_2 - 1/(...)), all b_i >= 2.
// alpha = 1 has the empty expansion.
struct CfData {
    Int alpha;
    Int beta;
    std::vector<Int> terms;
};

CfData hj_expand(const Int& alpha, const Int& beta);
std::pair<Int, Int> hj_eval(const std::vector<Int>& terms);

// Determinant invariant of two independent integer vectors: gcd of the 2x2
// minors of the matrix with rows l1, l2. Symmetric.
Int alpha_det(const Vec& l1, const Vec& l2);

// The companion invariant 0 <= beta < alpha, computed through the rank-2
// sublattice spanned by the pair. beta(l,l') is not symmetric; the two values
// are inverse to each other mod alpha.
Int beta_det(const Vec& l1, const Vec& l2);

// Canonical primitive sequence between two primitive vectors spanning a
// strictly convex 2-dimensional cone in any lattice rank: l_0 = l,
// l_{s+1} = l', consecutive pairs form a basis of the rank-2 sublattice, and
// b_j l_j = l_{j-1} + l_{j+1}. For a regular pair the convention is s = 1,
// l_1 = l_0 + l_2, b_1 = 1.
struct PrimitiveSequence {
    std::vector<Vec> vectors;  // l_0 ... l_{s+1}
    std::vector<Int> selfints; // b_1 ... b_s
    Int alpha;
    Int beta;
};

PrimitiveSequence canonical_primitive_sequence(const Vec& l, const Vec& lp);

// Coordinates of the members of span_Q(l1,l2) cap Z^n in a basis of that
// rank-2 sublattice. Both inputs and any vector expressed afterwards must lie
// in the saturated sublattice.
struct SublatticeFrame {
    std::vector<Vec> basis; // two rows, a basis of N cap span(l1,l2)
    Vec to_plane(const Vec& v) const;
    Vec from_plane(const Vec& xy) const;
};

SublatticeFrame sublattice_frame(const Vec& l1, const Vec& l2);

} // namespace ntoric
