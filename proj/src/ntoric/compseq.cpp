#include "ntoric/compseq.hpp"

#include "ntoric/b1.hpp"
#include "ntoric/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ntoric {

Rat ceil_mod(const Rat& r, const Rat& x)
{
    return x + Rat(rat_ceil(r - x));
}

namespace {

std::vector<std::vector<int>> compact_adjacency(const PlumbingGraph& g)
{
    std::vector<std::vector<int>> adj(g.compact_count);
    for (auto [a, b] : g.edges)
        if (a < g.compact_count && b < g.compact_count) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    return adj;
}

Rat pair_with(const PlumbingGraph& g, const std::vector<std::vector<int>>& adj, const Cycle& z,
              int v)
{
    Rat s = Rat(g.vertices[v].euler) * z[v];
    for (int u : adj[v])
        s += z[u];
    return s;
}

// path between two vertices of a tree (inclusive)
std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int from, int to)
{
    std::vector<int> parent(adj.size(), -2);
    std::vector<int> stack{from};
    parent[from] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to)
            break;
        for (int u : adj[v])
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

Cycle laufer_x(const PlumbingGraph& g, const Cycle& z, const std::vector<int>& nodes, long budget)
{
    std::vector<bool> is_node(g.compact_count, false);
    for (int n : nodes)
        is_node[n] = true;
    std::vector<std::vector<int>> adj = compact_adjacency(g);
    Cycle cur = z;
    while (budget-- > 0) {
        int found = -1;
        for (int v = 0; v < g.compact_count && found < 0; ++v)
            if (!is_node[v] && pair_with(g, adj, cur, v) > 0)
                found = v;
        if (found < 0)
            return cur;
        cur[found] += 1;
    }
    throw cap_error("Laufer iteration budget exhausted; the start cycle may exceed its closure");
}

Rat bamboo_multiplicity(const PlumbingGraph& g, const Cycle& z, int n, int np, int u)
{
    bool adjacent = false;
    for (int w : g.neighbours_all(n))
        adjacent |= w == u;
    if (!adjacent || g.vertices[u].kind != VertexKind::Bamboo)
        throw input_error("u must be a bamboo neighbour of n");
    Int alpha = alpha_det(g.vertices[n].ell, g.vertices[np].ell);
    Int beta = beta_det(g.vertices[n].ell, g.vertices[np].ell);
    Rat mn = (n < g.compact_count) ? z[n] : Rat(0);
    Rat mnp = (np < g.compact_count) ? z[np] : Rat(0);
    Rat base = (Rat(beta) * mn + mnp) / Rat(alpha);
    Rat mu = (u < g.compact_count) ? z[u] : Rat(0);
    return ceil_mod(base, mu);
}

DiagonalRun diagonal_sequence(const PlumbingGraph& g, const Cycle& zk,
                              const std::vector<int>& nodes, int root_override)
{
    if (!g.is_tree_with_genus_zero())
        throw hypothesis_error("the diagonal sequence needs a genus-zero tree");
    for (int n : nodes)
        if (zk[n] < 0)
            throw hypothesis_error("negative canonical node multiplicity; reduce the diagram first");

    std::vector<std::vector<int>> adj = compact_adjacency(g);
    std::vector<bool> is_node(g.compact_count, false);
    for (int n : nodes)
        is_node[n] = true;

    DiagonalRun run;
    Cycle cur(g.compact_count);
    for (int v = 0; v < g.compact_count; ++v)
        cur[v] = zk[v] - Rat(rat_floor(zk[v]));
    run.start = cur;

    auto filler_pass = [&](long budget) {
        while (budget-- > 0) {
            int found = -1;
            for (int v = 0; v < g.compact_count && found < 0; ++v)
                if (!is_node[v] && pair_with(g, adj, cur, v) > 0)
                    found = v;
            if (found < 0)
                return;
            SequenceStep st;
            st.vertex = found;
            st.d = -pair_with(g, adj, cur, found);
            st.contribution = 0;
            st.diagonal = false;
            run.steps.push_back(st);
            cur[found] += 1;
        }
        throw cap_error("Laufer filler budget exhausted");
    };

    // root for the geodesic partial order
    int root = root_override;
    if (root < 0) {
        Rat best = 0;
        for (int n : nodes)
            if (root < 0 || zk[n] - 1 > best) {
                best = zk[n] - 1;
                root = n;
            }
    }

    filler_pass(1000000);
    long guard = 1000000;
    while (guard-- > 0) {
        std::vector<int> eligible;
        for (int n : nodes)
            if (cur[n] < zk[n])
                eligible.push_back(n);
        if (eligible.empty())
            break;
        if (run.kbar_prime < 0) {
            bool at_zk_minus_e = true;
            for (int n : nodes)
                at_zk_minus_e &= cur[n] == zk[n] - 1;
            if (at_zk_minus_e)
                run.kbar_prime = run.kbar;
        }
        // ratio m_n(cur) / m_n(Z_K - E); a node whose denominator vanishes is
        // exactly at the phase boundary and competes with ratio one
        Rat best;
        bool first = true;
        std::map<int, Rat> ratio;
        for (int n : eligible) {
            Rat den = zk[n] - 1;
            Rat r = (den > 0) ? cur[n] / den : Rat(1);
            ratio[n] = r;
            if (first || r < best) {
                best = r;
                first = false;
            }
        }
        std::vector<int> minimizers;
        for (int n : eligible)
            if (ratio[n] == best)
                minimizers.push_back(n);
        int chosen = minimizers[0];
        if (minimizers.size() > 1) {
            if (best < 1) {
                // minimal with respect to the geodesic order towards the root
                std::vector<int> minimal;
                for (int n : minimizers) {
                    bool dominated = false;
                    std::vector<int> path = tree_path(adj, n, root);
                    std::set<int> on_path(path.begin(), path.end());
                    for (int s : minimizers)
                        if (s != n && on_path.count(s))
                            dominated = true;
                    if (!dominated)
                        minimal.push_back(n);
                }
                chosen = minimal.empty() ? minimizers[0] : minimal[0];
            } else {
                // ratio one: pick a leaf of the minimal connected subgraph
                std::set<int> steiner;
                for (int a : minimizers)
                    for (int b : minimizers) {
                        std::vector<int> path = tree_path(adj, a, b);
                        steiner.insert(path.begin(), path.end());
                    }
                std::map<int, int> deg;
                for (int v : steiner)
                    for (int u : adj[v])
                        if (steiner.count(u))
                            ++deg[v];
                chosen = -1;
                for (int n : minimizers)
                    if (deg[n] <= 1 && (chosen < 0 || n < chosen))
                        chosen = n;
                if (chosen < 0)
                    throw internal_error("Steiner subtree without a terminal leaf");
            }
        }

        SequenceStep st;
        st.vertex = chosen;
        st.d = -pair_with(g, adj, cur, chosen);
        if (st.d.get_den() != 1)
            throw internal_error("nonintegral degree along the sequence");
        st.contribution = std::max(Int(0), Int(st.d.get_num() + 1));
        st.diagonal = true;
        run.steps.push_back(st);
        run.bound += st.contribution;
        ++run.kbar;
        cur[chosen] += 1;
        filler_pass(1000000);
    }
    if (guard <= 0)
        throw cap_error("diagonal sequence did not terminate");
    if (run.kbar_prime < 0)
        run.kbar_prime = run.kbar;
    run.end = cur;
    return run;
}

PgSequenceResult pg_from_sequence(const NewtonData& nd, int root_override, int shell_cap)
{
    if (nd.rank != 3)
        throw input_error("the sequence pipeline needs rank 3");
    PgSequenceResult res;

    DeltaResult delta = surface_delta(nd, shell_cap);
    bool normal = delta.finite && delta.value == 0;
    if (!normal)
        res.failures.push_back("germ is not normal (delta invariant nonzero or infinite)");

    NewtonData cur = nd;
    if (normal) {
        try {
            cur = restrict_to_tropicalization(cur);
        } catch (const hypothesis_error&) {
            // degenerate tropicalization: keep the original cone
        }
    }

    if (!gorenstein_pointed_at(cur, false).has_value())
        res.failures.push_back("diagram is not Q-Gorenstein pointed");

    PlumbingGraph g = build_graph(cur);
    if (!is_qhs_link(g, cur))
        throw hypothesis_error("link is not a rational homology sphere");

    // remove facets until Z_K - E is nonnegative on nodes, when possible;
    // the sequence itself only needs Z_K >= 0 on nodes, so a failed removal
    // is fatal only in that stronger situation
    if (!g.nodes().empty() && normal) {
        Cycle zk = canonical_cycle_adjunction(g);
        bool neg = false;
        for (int n : g.nodes())
            neg |= zk[n] - 1 < 0;
        if (neg) {
            try {
                ReduceResult rr = reduce_to_nonnegative_zk(cur, shell_cap);
                res.reduction_log = rr.log;
                cur = rr.nd;
                g = build_graph(cur);
            } catch (const hypothesis_error& e) {
                bool runnable = true;
                for (int n : g.nodes())
                    runnable &= zk[n] >= 0;
                if (!runnable)
                    throw;
                res.failures.push_back(std::string("reduction unavailable: ") + e.what());
            }
        }
    }

    Cycle zk = canonical_cycle_adjunction(g);
    for (int n : g.nodes())
        if (zk[n] - 1 < 0)
            res.failures.push_back("Z_K - E is negative on a node after reduction");

    res.run = diagonal_sequence(g, zk, g.nodes(), root_override);
    res.value = res.run.bound;
    res.preconditions_met = res.failures.empty();
    return res;
}

PolygonCount polygon_count(const std::vector<Vec>& polygon, const Rat& rho,
                           const std::vector<int>& removed_faces)
{
    if (rho < 0 || rho >= 1)
        throw input_error("the scaling factor must lie in [0,1)");
    std::vector<Vec> h = hull2(polygon);
    if (h.size() < 3)
        throw input_error("polygon is degenerate");
    if (interior_lattice_points(h) > 0)
        throw input_error("polygon has interior lattice points");
    size_t r = h.size();
    std::set<int> removed(removed_faces.begin(), removed_faces.end());
    for (int j : removed)
        if (j < 0 || (size_t)j >= r)
            throw input_error("face index out of range");

    // face j joins hull vertices j and j+1; counterclockwise order makes
    // (-dy, dx) the inward normal
    std::vector<Vec> normals(r);
    std::vector<Int> clen(r);
    std::vector<Rat> mins(r);  // rho * min of the normal over F
    std::vector<Int> nus(r);
    for (size_t j = 0; j < r; ++j) {
        Vec d = sub(h[(j + 1) % r], h[j]);
        clen[j] = content(d);
        normals[j] = primitive(Vec{-d[1], d[0]});
        mins[j] = rho * Rat(dot(normals[j], h[j]));
        // lambda_j = rho mu_j - nu_j in (-1,0], or [-1,0) on removed faces
        if (removed.count((int)j)) {
            Int fl = rat_floor(mins[j]);
            nus[j] = fl + 1;
        } else {
            nus[j] = rat_ceil(mins[j]);
        }
    }

    // sum of c_j a_j must be the constant a
    Vec linsum{0, 0};
    for (size_t j = 0; j < r; ++j)
        linsum = add(linsum, smul(clen[j], normals[j]));
    if (!is_zero(linsum))
        throw internal_error("weighted normals do not cancel");
    Int a = 0;
    for (size_t j = 0; j < r; ++j)
        a -= clen[j] * nus[j];

    // direct count over rho F minus the removed scaled faces
    Int count = 0;
    Int xlo = h[0][0], xhi = h[0][0], ylo = h[0][1], yhi = h[0][1];
    for (const Vec& v : h) {
        xlo = std::min(xlo, v[0]);
        xhi = std::max(xhi, v[0]);
        ylo = std::min(ylo, v[1]);
        yhi = std::max(yhi, v[1]);
    }
    // rho >= 0: the scaled box contains rho F
    auto scaled = [&](const Int& c) -> Rat { return rho * Rat(c); };
    Int sxlo = rat_floor(scaled(xlo)), sxhi = rat_ceil(scaled(xhi));
    Int sylo = rat_floor(scaled(ylo)), syhi = rat_ceil(scaled(yhi));
    for (Int x = sxlo; x <= sxhi; ++x)
        for (Int y = sylo; y <= syhi; ++y) {
            Vec q{x, y};
            bool inside = true, on_removed = false;
            for (size_t j = 0; j < r && inside; ++j) {
                Rat v = Rat(dot(normals[j], q));
                if (v < mins[j])
                    inside = false;
                else if (v == mins[j] && removed.count((int)j))
                    on_removed = true;
            }
            if (inside && !on_removed)
                ++count;
        }

    if (count != std::max(Int(0), Int(a + 1)))
        throw internal_error("point count disagrees with the closed form");
    return {count, a};
}

} // namespace ntoric
