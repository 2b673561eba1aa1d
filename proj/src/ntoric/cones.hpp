#pragma once

#include "ntoric/base.hpp"
#include "ntoric/linalg.hpp"

namespace ntoric {

// Facet normals of cone(gens) in R^d, inward oriented and primitive. Only
// meaningful when the generators span R^d. Facets through the origin; a
// normal h satisfies h(g) >= 0 for all generators with equality on a
// (d-1)-dimensional subset.
std::vector<Vec> cone_facet_normals(const std::vector<Vec>& gens);

// Extreme rays of cone(gens), primitive, deduplicated.
std::vector<Vec> cone_extreme_rays(const std::vector<Vec>& gens);

// A full-dimensional strictly convex rational cone, stored by its primitive
// extreme rays. For rank 3 the rays are listed in cyclic order along the
// boundary (adjacent rays span a facet).
struct Cone {
    int rank = 0;
    std::vector<Vec> rays;

    bool contains(const Vec& v) const;          // v in the closed cone
    bool contains_interior(const Vec& v) const; // v in the open cone
    const std::vector<Vec>& dual_rays() const;  // rays of the dual cone
    const std::vector<Vec>& facet_normals() const { return dual_rays(); }

  private:
    mutable std::vector<Vec> dual_; // lazily computed
};

// Validates full dimension and strict convexity, reduces to extreme rays,
// orders them canonically (cyclically for rank 3).
Cone make_cone(int rank, std::vector<Vec> gens);

} // namespace ntoric
