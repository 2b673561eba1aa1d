#pragma once

#include "ntoric/invariants.hpp"
#include "ntoric/oka.hpp"

namespace ntoric {

// Smallest rational >= r congruent to x mod 1.
Rat ceil_mod(const Rat& r, const Rat& x);

// Laufer operator with respect to a node set: the smallest cycle in Z + L
// with the node multiplicities of Z and nonpositive pairings off the nodes.
// Computed by the incremental sequence Z <- Z + E_v over off-node vertices
// with positive pairing; the caller guarantees Z <= x(Z).
Cycle laufer_x(const PlumbingGraph& g, const Cycle& z, const std::vector<int>& nodes,
               long budget = 1000000);

// Closed form for the multiplicity of x(Z) at the neighbour u of n on the
// bamboo joining n and np.
Rat bamboo_multiplicity(const PlumbingGraph& g, const Cycle& z, int n, int np, int u);

struct SequenceStep {
    int vertex;
    Rat d;            // (-Z_i, E_{v(i)}) before the step
    Int contribution; // max(0, d + 1); zero on Laufer filler steps
    bool diagonal;    // ratio-minimizing node step vs filler
};

struct DiagonalRun {
    std::vector<SequenceStep> steps;
    long kbar_prime = -1; // first index with node multiplicities at Z_K - E
    long kbar = 0;        // number of diagonal steps
    Int bound = 0;        // sum of contributions
    Cycle start, end;
};

// The coarse diagonal computation sequence: node choices minimize
// m_n(Z_i)/m_n(Z_K - E) with root-order and leaf tie-breaks, interleaved
// with Laufer fillers, from Z_K - floor(Z_K) up to x(Z_K).
DiagonalRun diagonal_sequence(const PlumbingGraph& g, const Cycle& zk,
                              const std::vector<int>& nodes, int root_override = -1);

struct PgSequenceResult {
    Int value = 0;
    bool preconditions_met = false;
    std::vector<std::string> failures; // unmet hypotheses, informational
    std::vector<std::string> reduction_log;
    DiagonalRun run; // the trace on the (possibly reduced) diagram
};

// Geometric genus through the diagonal sequence, after restricting to the
// tropicalization and removing facets until Z_K - E is nonnegative on nodes.
// The bound is returned whenever the sequence can run; failed hypotheses are
// reported alongside.
PgSequenceResult pg_from_sequence(const NewtonData& nd, int root_override = -1,
                                  int shell_cap = 64);

// Lattice points of a shrunken empty polygon with some boundary faces
// removed, counted directly and checked against the closed form
// max(0, a+1). F is given by its vertices in 2D lattice coordinates;
// rho in [0,1); J selects faces (by index along the hull) to remove.
struct PolygonCount {
    Int count;
    Int a; // the constant of the closed form
};

PolygonCount polygon_count(const std::vector<Vec>& polygon, const Rat& rho,
                           const std::vector<int>& removed_faces);

} // namespace ntoric
