#pragma once

#include "ntoric/oka.hpp"

namespace ntoric {

// Classification of lattice polygons with no interior lattice points, up to
// integral affine automorphism.
enum class PolygonKind { BigTriangle, SmallTriangle, Trapezoid, HasInteriorPoints };

struct PolygonClass {
    PolygonKind kind;
    Int t = 0, s = 0; // SmallTriangle(t); Trapezoid(t,s) with t >= s >= 1
};

// Input: vertices of a two-dimensional lattice polygon (any order).
PolygonClass classify_lattice_polygon(const std::vector<Vec>& vertices);

// A triangular facet with two vertices on a boundary weight level and the
// third one level higher; removable when the off-level vertex is joined to a
// level vertex along the diagram boundary.
struct B1Facet {
    int facet;       // index into NewtonData::facets
    Vec witness_ray; // the ray of Sigma realizing the levels
    DualVec p1, p2, p3; // p1, p2 on level m, p3 on level m+1
    bool removable;
    int boundary_facet = -1; // noncompact facet containing [p2,p3] when removable
};

std::vector<B1Facet> find_removable_b1(const NewtonData& nd);

// Drops the part of the support below the new boundary functional
// l_+ = l_1 + t l_3; requires Sigma to be generated by the tropicalization.
NewtonData remove_b1_facet(const NewtonData& nd, const B1Facet& facet);

// Replace Sigma by the cone generated by the tropicalization; identity when
// they already agree. An isomorphism of germs whenever the divisor is normal.
NewtonData restrict_to_tropicalization(const NewtonData& nd);

struct ReduceResult {
    NewtonData nd;
    std::vector<std::string> log; // one line per removed facet
    bool changed = false;
};

// Repeatedly restrict to the tropicalization and remove removable facets
// until the canonical cycle satisfies m_n(Z_K - E) >= 0 on every node.
ReduceResult reduce_to_nonnegative_zk(const NewtonData& nd, int shell_cap = 64);

// Node contact graph: vertices are the nodes, one edge per diagram segment
// shared by two compact facets.
struct LeafGraph {
    std::vector<int> node_facets;
    std::vector<std::pair<int, int>> edges; // indices into node_facets
    std::vector<int> leaves() const;
};

LeafGraph leaf_graph(const NewtonData& nd);

// Iterated blow-down of genus-zero (-1)-vertices of valency <= 2. Requires a
// tree with all genera zero.
PlumbingGraph graph_normal_form(const PlumbingGraph& g);

// Isomorphism of Euler-labelled trees through a canonical rooted encoding.
bool graphs_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

} // namespace ntoric
