#include "ntoric/b1.hpp"

#include "ntoric/invariants.hpp"
#include "ntoric/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ntoric {

PolygonClass classify_lattice_polygon(const std::vector<Vec>& vertices)
{
    std::vector<Vec> h = hull2(vertices);
    if (h.size() < 3)
        throw input_error("polygon is degenerate");
    if (interior_lattice_points(h) > 0)
        return {PolygonKind::HasInteriorPoints};

    std::vector<Int> lens;
    for (size_t i = 0; i < h.size(); ++i)
        lens.push_back(content(sub(h[(i + 1) % h.size()], h[i])));

    if (h.size() == 3) {
        std::vector<Int> s(lens);
        std::sort(s.begin(), s.end());
        if (s[0] == 2 && s[1] == 2 && s[2] == 2) {
            if (area2(h) != 4)
                throw internal_error("edge-2 triangle with unexpected area");
            return {PolygonKind::BigTriangle};
        }
        // small triangle of type t: edge lengths t, 1, 1, doubled area t
        if (s[0] == 1 && s[1] == 1) {
            if (area2(h) != s[2])
                throw internal_error("thin triangle with unexpected area");
            return {PolygonKind::SmallTriangle, s[2]};
        }
        throw internal_error("unclassifiable empty triangle");
    }
    if (h.size() == 4) {
        // trapezoid: a pair of parallel edges one lattice width apart
        for (size_t i = 0; i < 4; ++i) {
            size_t j = (i + 2) % 4;
            Vec di = sub(h[(i + 1) % 4], h[i]);
            Vec dj = sub(h[(j + 1) % 4], h[j]);
            if (di[0] * dj[1] - di[1] * dj[0] != 0)
                continue;
            Int t = std::max(lens[i], lens[j]);
            Int s = std::min(lens[i], lens[j]);
            Vec n{-di[1], di[0]};
            n = primitive(n);
            if (abs(dot(n, sub(h[j], h[i]))) != 1)
                throw internal_error("empty trapezoid of lattice width > 1");
            return {PolygonKind::Trapezoid, t, s};
        }
        throw internal_error("empty quadrilateral without parallel edges");
    }
    throw internal_error("empty polygon with more than four vertices");
}

std::vector<B1Facet> find_removable_b1(const NewtonData& nd)
{
    if (nd.rank != 3)
        throw input_error("B1 facets need rank 3");
    std::vector<B1Facet> out;
    for (size_t fi = 0; fi < nd.facets.size(); ++fi) {
        const Facet& f = nd.facets[fi];
        if (!f.compact || f.verts.size() != 3)
            continue;
        std::vector<DualVec> vs;
        for (int v : f.verts)
            vs.push_back(nd.gvertices[v]);
        std::sort(vs.begin(), vs.end(), lex_less);
        for (const Vec& sigma : nd.sigma.rays) {
            Int m = nd.weight_of(sigma);
            std::vector<DualVec> low, high;
            for (const DualVec& p : vs) {
                Int v = dot(sigma, p);
                if (v == m)
                    low.push_back(p);
                else if (v == m + 1)
                    high.push_back(p);
            }
            if (low.size() != 2 || high.size() != 1)
                continue;
            B1Facet rec;
            rec.facet = (int)fi;
            rec.witness_ray = sigma;
            rec.p3 = high[0];
            rec.removable = false;
            // removable when some [p2, p3] lies on a noncompact facet
            for (int which = 0; which < 2 && !rec.removable; ++which) {
                const DualVec& p2 = low[which];
                const DualVec& p1 = low[1 - which];
                for (const EdgeRec& e : nd.edges) {
                    if (!e.compact || (e.f1 != (int)fi && e.f2 != (int)fi))
                        continue;
                    std::set<DualVec> ends{nd.gvertices[e.v1], nd.gvertices[e.v2]};
                    if (ends != std::set<DualVec>{p2, rec.p3})
                        continue;
                    int other = (e.f1 == (int)fi) ? e.f2 : e.f1;
                    if (!nd.facets[other].compact) {
                        rec.removable = true;
                        rec.p1 = p1;
                        rec.p2 = p2;
                        rec.boundary_facet = other;
                        break;
                    }
                }
            }
            if (!rec.removable) {
                rec.p1 = low[0];
                rec.p2 = low[1];
            }
            out.push_back(rec);
        }
    }
    return out;
}

NewtonData remove_b1_facet(const NewtonData& nd, const B1Facet& facet)
{
    if (!facet.removable)
        throw hypothesis_error("facet is not removable");
    TropCone tc = tropicalization_cone(nd);
    std::vector<Vec> sr = nd.sigma.rays;
    std::sort(sr.begin(), sr.end(), lex_less);
    if (tc.rays != sr)
        throw hypothesis_error("Sigma is not generated by the tropicalization; restrict first");
    if (nd.compact_facets().size() == 1)
        throw hypothesis_error("removing the only facet: the germ is rational");

    const Vec& l1 = nd.facets[facet.boundary_facet].normal;
    const Vec& l3 = facet.witness_ray;
    Int t = dot(l1, sub(facet.p1, facet.p2));
    if (t <= 0)
        throw internal_error("nonpositive determinant in facet removal");
    Vec lp = add(l1, smul(t, l3));
    if (content(lp) != 1)
        throw internal_error("new boundary functional is not primitive");
    if (dot(lp, facet.p1) != dot(lp, facet.p3))
        throw internal_error("new boundary functional not constant on the cut");

    Int mp = dot(lp, facet.p3);
    std::vector<DualVec> kept;
    for (const DualVec& p : nd.support)
        if (dot(lp, p) >= mp)
            kept.push_back(p);
    if (kept.empty())
        throw internal_error("facet removal emptied the support");
    return build(nd.rank, nd.sigma.rays, kept);
}

NewtonData restrict_to_tropicalization(const NewtonData& nd)
{
    TropCone tc = tropicalization_cone(nd);
    if (!tc.full_dim)
        throw hypothesis_error("tropicalization is not full-dimensional (rational germ)");
    std::vector<Vec> sr = nd.sigma.rays;
    std::sort(sr.begin(), sr.end(), lex_less);
    if (tc.rays == sr)
        return nd;
    return build(nd.rank, tc.rays, nd.support);
}

namespace {

std::vector<int> negative_nodes(const PlumbingGraph& g, const Cycle& zk)
{
    std::vector<int> out;
    for (int n : g.nodes())
        if (zk[n] - 1 < 0)
            out.push_back(n);
    return out;
}

std::string facet_label(const NewtonData& nd, int fi)
{
    std::string s = "facet";
    for (int v : nd.facets[fi].verts)
        s += " " + to_string(nd.gvertices[v]);
    return s;
}

} // namespace

ReduceResult reduce_to_nonnegative_zk(const NewtonData& nd, int shell_cap)
{
    ReduceResult res{nd, {}, false};
    {
        PlumbingGraph g = build_graph(nd);
        if (g.nodes().empty() || negative_nodes(g, canonical_cycle_adjunction(g)).empty())
            return res; // already fine, identity
    }
    if (!is_normal_surface(nd, shell_cap))
        throw hypothesis_error("reduction requires a normal germ (delta = 0)");

    size_t guard = nd.facets.size() + 1;
    while (guard-- > 0) {
        res.nd = restrict_to_tropicalization(res.nd);
        PlumbingGraph g = build_graph(res.nd);
        if (g.nodes().empty())
            return res;
        Cycle zk = canonical_cycle_adjunction(g);
        std::vector<int> neg = negative_nodes(g, zk);
        if (neg.empty())
            return res;
        std::vector<B1Facet> recs;
        for (const B1Facet& r : find_removable_b1(res.nd))
            if (r.removable)
                recs.push_back(r);
        if (recs.empty())
            throw hypothesis_error(
                "a node has negative canonical multiplicity but no removable facet exists "
                "(Gorenstein-pointedness hypotheses not met)");
        const B1Facet* pick = &recs.front();
        bool negative_pick = false;
        for (const B1Facet& r : recs) {
            for (int n : neg)
                if (!negative_pick && g.vertices[n].facet == r.facet) {
                    pick = &r;
                    negative_pick = true;
                }
        }
        res.log.push_back("removed " + facet_label(res.nd, pick->facet) + " with witness ray " +
                          to_string(pick->witness_ray));
        res.nd = remove_b1_facet(res.nd, *pick);
        res.changed = true;
    }
    throw internal_error("facet removal did not terminate");
}

LeafGraph leaf_graph(const NewtonData& nd)
{
    LeafGraph lg;
    lg.node_facets = nd.compact_facets();
    std::map<int, int> idx;
    for (size_t i = 0; i < lg.node_facets.size(); ++i)
        idx[lg.node_facets[i]] = (int)i;
    for (const EdgeRec& e : nd.edges)
        if (e.compact && nd.facets[e.f1].compact && nd.facets[e.f2].compact)
            lg.edges.emplace_back(idx[e.f1], idx[e.f2]);
    return lg;
}

std::vector<int> LeafGraph::leaves() const
{
    std::vector<int> deg(node_facets.size(), 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    std::vector<int> out;
    for (size_t i = 0; i < node_facets.size(); ++i)
        if (deg[i] == 1)
            out.push_back((int)i);
    return out;
}

PlumbingGraph graph_normal_form(const PlumbingGraph& g)
{
    if (!g.is_tree_with_genus_zero())
        throw hypothesis_error("normal form needs a genus-zero tree");
    int n = g.compact_count;
    std::vector<Int> euler(n);
    std::vector<bool> alive(n, true);
    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v)
        euler[v] = g.vertices[v].euler;
    for (auto [a, b] : g.edges)
        if (a < n && b < n) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    bool again = true;
    while (again) {
        again = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || euler[v] != -1 || adj[v].size() > 2)
                continue;
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            for (int u : nb) {
                adj[u].erase(v);
                euler[u] += 1;
            }
            if (nb.size() == 2) {
                adj[nb[0]].insert(nb[1]);
                adj[nb[1]].insert(nb[0]);
            }
            alive[v] = false;
            adj[v].clear();
            again = true;
            break;
        }
    }
    PlumbingGraph out;
    std::map<int, int> remap;
    for (int v = 0; v < n; ++v) {
        if (!alive[v])
            continue;
        PlumbingVertex pv;
        pv.id = (int)out.vertices.size();
        pv.kind = VertexKind::Node;
        pv.euler = euler[v];
        pv.genus = 0;
        remap[v] = pv.id;
        out.vertices.push_back(pv);
    }
    out.compact_count = (int)out.vertices.size();
    for (int v = 0; v < n; ++v)
        if (alive[v])
            for (int u : adj[v])
                if (u > v)
                    out.edges.emplace_back(remap[v], remap[u]);
    return out;
}

namespace {

std::string ahu_encode(const PlumbingGraph& g, const std::vector<std::vector<int>>& adj, int v,
                       int parent)
{
    std::vector<std::string> kids;
    for (int u : adj[v])
        if (u != parent)
            kids.push_back(ahu_encode(g, adj, u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + g.vertices[v].euler.get_str() + ":" + g.vertices[v].genus.get_str();
    for (const std::string& k : kids)
        s += k;
    return s + ")";
}

std::string tree_canonical(const PlumbingGraph& g)
{
    int n = g.compact_count;
    if (n == 0)
        return "()";
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : g.edges)
        if (a < n && b < n) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    // tree centers by leaf peeling
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v)
        deg[v] = (int)adj[v].size();
    std::vector<int> layer;
    std::vector<bool> removed(n, false);
    int remaining = n;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1)
            layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> nxt;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int u : adj[v])
                if (!removed[u] && --deg[u] == 1)
                    nxt.push_back(u);
        }
        layer = nxt;
    }
    std::string best;
    for (int c : layer) {
        std::string s = ahu_encode(g, adj, c, -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

} // namespace

bool graphs_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b)
{
    if (!a.is_tree_with_genus_zero() || !b.is_tree_with_genus_zero())
        throw hypothesis_error("isomorphism test needs genus-zero trees");
    return tree_canonical(a) == tree_canonical(b);
}

} // namespace ntoric
