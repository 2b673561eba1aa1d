#pragma once

#include "ntoric/newton.hpp"

namespace ntoric {

enum class VertexKind { Node, Bamboo, Extended };

struct PlumbingVertex {
    int id;
    VertexKind kind;
    Vec ell;       // primitive functional of the dual-fan ray
    Int m;         // weight of ell over the support
    Int euler = 0; // -b_v; unset on extended vertices
    Int genus = 0;
    int facet = -1; // dual facet index for nodes and extended nodes
};

// Rational cycles supported on the compact vertices, indexed by vertex id.
using Cycle = std::vector<Rat>;

// The resolution graph produced by Oka's algorithm: nodes dual to compact
// facets, extended nodes dual to noncompact facets meeting the diagram in a
// segment, and Hirzebruch-Jung bamboos realizing the continued fractions.
// Vertices 0..compact_count-1 are the compact ones (nodes and bamboo
// vertices); extended nodes come last and carry no Euler number.
struct PlumbingGraph {
    std::vector<PlumbingVertex> vertices;
    std::vector<std::pair<int, int>> edges; // parallel edges repeat
    int compact_count = 0;

    std::vector<int> nodes() const;
    std::vector<int> neighbours_all(int v) const;      // in G*
    std::vector<int> neighbours_compact(int v) const;  // in G
    bool is_tree_with_genus_zero() const;              // on the compact part
    FaceData node_face(const NewtonData& nd, int v) const;
};

PlumbingGraph build_graph(const NewtonData& nd);

Mat intersection_form(const PlumbingGraph& g);
bool graph_negative_definite(const PlumbingGraph& g);

// E_v^*: the rational cycle with (E_v, E_v^*) = -1 and (E_w, E_v^*) = 0.
Cycle dual_cycle(const PlumbingGraph& g, int v);

// Z_K from the adjunction equations (E_v, Z_K) = -b_v + 2 - 2 g_v.
Cycle canonical_cycle_adjunction(const PlumbingGraph& g);

// Z_K from Z_K - E = wt(f) - sum over edges {n,v}, n extended, of
// (m_n + 1) E_v^*.
Cycle canonical_cycle_formula(const PlumbingGraph& g);

Rat pairing(const PlumbingGraph& g, const Cycle& z, int v); // (z, E_v)
Rat cycle_pairing(const PlumbingGraph& g, const Cycle& a, const Cycle& b);

// Rational homology sphere test: the graph criterion (tree, genus zero) and
// the diagram criterion (all diagram lattice points on its boundary) computed
// independently; disagreement is an internal error.
bool is_qhs_link(const PlumbingGraph& g, const NewtonData& nd);

} // namespace ntoric
