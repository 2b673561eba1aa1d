#pragma once

#include "ntoric/newton.hpp"

namespace ntoric {

// Invariants of a plane curve germ from its rank-2 Newton data.
struct CurveReport {
    Int branches = 0;
    bool smooth = false;
    std::optional<Int> multiplicity; // set when irreducible
    std::optional<Int> delta;        // set when irreducible (or smooth)
};

CurveReport curve_invariants(const NewtonData& nd);

// Isolatedness of the rank-3 germ, decided facewise on the boundary of
// Sigma. Each 2-face passes when it is not subdivided, or is subdivided by a
// single ray of the admissible shape whose weight datum solves the
// normalization equation exactly.
struct FaceDiagnostic {
    Vec ray_a, ray_b;
    int subdividing_rays = 0;
    bool pass = true;
    std::string reason;
};

struct IsolatedReport {
    bool isolated = true;
    std::vector<FaceDiagnostic> faces;
};

IsolatedReport isolated_test(const NewtonData& nd);

// Independent route for the same predicate: transverse curve smooth or orbit
// not contained, for every 2-face.
bool isolated_via_transverse(const NewtonData& nd);

// Lattice point count |M cap Gamma+*(f)^o \ Gamma+(f)^o|; the geometric
// genus of a normal surface germ. Works in rank 2 and 3.
Int pg_count(const NewtonData& nd);

// Same count from a plain box scan over an enlarged bounding box; testing
// oracle for the polytope-derived enumeration bound.
Int pg_count_bruteforce(const NewtonData& nd, const Int& margin);

// The cyclic sequence of boundary cells of the dual fan: 2-cones lying in
// the boundary of Sigma, each spanned by two adjacent noncompact facet
// normals. Cell i joins ray i and ray i+1 (cyclically).
struct BoundaryCircle {
    std::vector<int> facet_ids; // noncompact facets in cyclic order
};

BoundaryCircle boundary_circle(const NewtonData& nd);

// Number of components of the cell pattern A(q) = {cells with l(q) > m_l at
// both bounding rays} on the circle; the delta model counts
// max(0, components - 1) for each admissible q.
Int delta_contribution(const NewtonData& nd, const BoundaryCircle& bc, const DualVec& q);

struct DeltaResult {
    bool finite = false;
    Int value = 0; // meaningful when finite
};

// Delta invariant of the surface germ: infinite when the singularity is not
// isolated; otherwise summed over lattice points by expanding shells until
// stabilization (two consecutive empty shells), with a hard cap.
DeltaResult surface_delta(const NewtonData& nd, int shell_cap = 64);

bool is_normal_surface(const NewtonData& nd, int shell_cap = 64);

} // namespace ntoric
