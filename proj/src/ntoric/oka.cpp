#include "ntoric/oka.hpp"

#include <algorithm>
#include <map>

namespace ntoric {

std::vector<int> PlumbingGraph::nodes() const
{
    std::vector<int> out;
    for (const PlumbingVertex& v : vertices)
        if (v.kind == VertexKind::Node)
            out.push_back(v.id);
    return out;
}

std::vector<int> PlumbingGraph::neighbours_all(int v) const
{
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == v)
            out.push_back(b);
        if (b == v)
            out.push_back(a);
    }
    return out;
}

std::vector<int> PlumbingGraph::neighbours_compact(int v) const
{
    std::vector<int> out;
    for (int u : neighbours_all(v))
        if (u < compact_count)
            out.push_back(u);
    return out;
}

bool PlumbingGraph::is_tree_with_genus_zero() const
{
    int n = compact_count;
    if (n == 0)
        return true;
    for (int v = 0; v < n; ++v)
        if (vertices[v].genus != 0)
            return false;
    int ecount = 0;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges)
        if (a < n && b < n) {
            adj[a].push_back(b);
            adj[b].push_back(a);
            ++ecount;
        }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++cnt;
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    return cnt == n && ecount == n - 1;
}

FaceData PlumbingGraph::node_face(const NewtonData& nd, int v) const
{
    if (vertices[v].facet < 0)
        throw input_error("vertex has no dual facet");
    return nd.face_of_facet(vertices[v].facet);
}

PlumbingGraph build_graph(const NewtonData& nd)
{
    if (nd.rank != 3)
        throw input_error("plumbing graphs need rank 3");

    std::vector<int> node_facets, ext_facets;
    for (size_t i = 0; i < nd.facets.size(); ++i) {
        if (nd.facets[i].compact)
            node_facets.push_back((int)i);
        else if (nd.facets[i].cls == 1)
            ext_facets.push_back((int)i);
    }

    struct BambooPlan {
        int f1, f2;
        PrimitiveSequence seq;
    };
    std::vector<BambooPlan> plans;
    for (const EdgeRec& e : nd.edges) {
        if (!e.compact)
            continue;
        const Facet& a = nd.facets[e.f1];
        const Facet& b = nd.facets[e.f2];
        if (a.cls < 1 || b.cls < 1)
            throw internal_error("compact edge with an unclassified facet");
        PrimitiveSequence seq = canonical_primitive_sequence(a.normal, b.normal);
        for (Int t = 0; t < e.length; ++t)
            plans.push_back({e.f1, e.f2, seq});
    }

    PlumbingGraph g;
    size_t nb = 0;
    for (const BambooPlan& p : plans)
        nb += p.seq.selfints.size();
    size_t nn = node_facets.size();
    g.compact_count = (int)(nn + nb);

    std::map<int, int> facet_vertex;
    for (size_t i = 0; i < nn; ++i) {
        int fi = node_facets[i];
        PlumbingVertex v;
        v.id = (int)i;
        v.kind = VertexKind::Node;
        v.ell = nd.facets[fi].normal;
        v.m = nd.facets[fi].m;
        v.genus = nd.face_of_facet(fi).interior_points;
        v.facet = fi;
        g.vertices.push_back(v);
        facet_vertex[fi] = v.id;
    }
    g.vertices.resize(nn + nb);
    for (size_t i = 0; i < ext_facets.size(); ++i) {
        int fi = ext_facets[i];
        PlumbingVertex v;
        v.id = (int)(nn + nb + i);
        v.kind = VertexKind::Extended;
        v.ell = nd.facets[fi].normal;
        v.m = nd.facets[fi].m;
        v.facet = fi;
        g.vertices.push_back(v);
        facet_vertex[fi] = v.id;
    }

    int next = (int)nn;
    for (const BambooPlan& p : plans) {
        int prev = facet_vertex.at(p.f1);
        size_t s = p.seq.selfints.size();
        for (size_t j = 0; j < s; ++j) {
            PlumbingVertex v;
            v.id = next++;
            v.kind = VertexKind::Bamboo;
            v.ell = p.seq.vectors[j + 1];
            v.m = nd.weight_of(v.ell);
            v.euler = -p.seq.selfints[j];
            g.vertices[v.id] = v;
            g.edges.emplace_back(prev, v.id);
            prev = v.id;
        }
        g.edges.emplace_back(prev, facet_vertex.at(p.f2));
    }

    // node Euler numbers from -b_v l_v + sum_u l_u = 0; the relation is
    // overdetermined and must hold on every coordinate
    for (size_t i = 0; i < nn; ++i) {
        PlumbingVertex& v = g.vertices[i];
        Vec s(3, 0);
        for (int u : g.neighbours_all(v.id))
            s = add(s, g.vertices[u].ell);
        int k = 0;
        while (v.ell[k] == 0)
            ++k;
        if (s[k] % v.ell[k] != 0)
            throw internal_error("Euler relation not integral at node " + std::to_string(i));
        Int b = s[k] / v.ell[k];
        if (smul(b, v.ell) != s)
            throw internal_error("Euler relation fails at node " + std::to_string(i));
        if (b < 1)
            throw internal_error("node Euler number above -1");
        v.euler = -b;
    }
    return g;
}

Mat intersection_form(const PlumbingGraph& g)
{
    int n = g.compact_count;
    Mat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = g.vertices[i].euler;
    for (auto [a, b] : g.edges)
        if (a < n && b < n) {
            m[a][b] += 1;
            m[b][a] += 1;
        }
    return m;
}

bool graph_negative_definite(const PlumbingGraph& g)
{
    return is_negative_definite(intersection_form(g));
}

namespace {

QMat rational(const Mat& m)
{
    QMat q(m.size(), QVec(m.empty() ? 0 : m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            q[i][j] = Rat(m[i][j]);
    return q;
}

Cycle solve_form(const PlumbingGraph& g, const QVec& rhs)
{
    Mat m = intersection_form(g);
    if (!is_negative_definite(m))
        throw hypothesis_error("intersection form is not negative definite");
    return solve_square(rational(m), rhs);
}

} // namespace

Cycle dual_cycle(const PlumbingGraph& g, int v)
{
    if (v < 0 || v >= g.compact_count)
        throw input_error("dual cycle of a non-compact vertex");
    QVec rhs(g.compact_count, Rat(0));
    rhs[v] = Rat(-1);
    return solve_form(g, rhs);
}

Cycle canonical_cycle_adjunction(const PlumbingGraph& g)
{
    QVec rhs(g.compact_count);
    for (int v = 0; v < g.compact_count; ++v)
        rhs[v] = Rat(g.vertices[v].euler + 2 - 2 * g.vertices[v].genus);
    return solve_form(g, rhs);
}

Cycle canonical_cycle_formula(const PlumbingGraph& g)
{
    int n = g.compact_count;
    // weights (m_n + 1) accumulated over edges {extended n, compact v}
    QVec negc(n, Rat(0));
    for (auto [a, b] : g.edges) {
        int ext = -1, comp = -1;
        if (a >= n && b < n) {
            ext = a;
            comp = b;
        } else if (b >= n && a < n) {
            ext = b;
            comp = a;
        } else {
            continue;
        }
        negc[comp] -= Rat(g.vertices[ext].m + 1);
    }
    Cycle x = solve_form(g, negc); // = sum of (m_n+1) E_v^* over those edges
    Cycle z(n);
    for (int i = 0; i < n; ++i)
        z[i] = Rat(1) + Rat(g.vertices[i].m) - x[i];
    return z;
}

Rat pairing(const PlumbingGraph& g, const Cycle& z, int v)
{
    Rat s = Rat(g.vertices[v].euler) * z[v];
    for (int u : g.neighbours_compact(v))
        s += z[u];
    return s;
}

Rat cycle_pairing(const PlumbingGraph& g, const Cycle& a, const Cycle& b)
{
    Rat s = 0;
    for (int v = 0; v < g.compact_count; ++v)
        s += a[v] * pairing(g, b, v);
    return s;
}

bool is_qhs_link(const PlumbingGraph& g, const NewtonData& nd)
{
    bool graph_crit = g.is_tree_with_genus_zero();

    // Diagram criterion: all lattice points of the Newton diagram lie on its
    // boundary. Interior points arise from genus on a facet, a contact of
    // lattice length >= 2 between compact facets, or a vertex surrounded by
    // compact facets only; contacts between two noncompact facets detach
    // components. The facet contact graph carries all of this.
    bool diagram_crit = true;
    std::vector<int> cf = nd.compact_facets();
    Int node_contacts = 0, ext_contacts = 0;
    for (int fi : cf)
        if (nd.face_of_facet(fi).interior_points != 0)
            diagram_crit = false;
    for (const EdgeRec& e : nd.edges) {
        if (!e.compact)
            continue;
        bool c1 = nd.facets[e.f1].compact, c2 = nd.facets[e.f2].compact;
        if (c1 && c2)
            node_contacts += e.length;
        if (!c1 && !c2)
            ext_contacts += e.length;
    }
    if (cf.empty()) {
        if (ext_contacts > 1)
            diagram_crit = false;
    } else {
        if (ext_contacts != 0)
            diagram_crit = false;
        if (node_contacts != Int((int)cf.size() - 1))
            diagram_crit = false;
        if (diagram_crit) {
            std::map<int, int> idx;
            for (size_t i = 0; i < cf.size(); ++i)
                idx[cf[i]] = (int)i;
            std::vector<std::vector<int>> adj(cf.size());
            for (const EdgeRec& e : nd.edges)
                if (e.compact && nd.facets[e.f1].compact && nd.facets[e.f2].compact) {
                    adj[idx[e.f1]].push_back(idx[e.f2]);
                    adj[idx[e.f2]].push_back(idx[e.f1]);
                }
            std::vector<bool> seen(cf.size(), false);
            std::vector<int> stack{0};
            seen[0] = true;
            size_t cnt = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++cnt;
                for (int u : adj[v])
                    if (!seen[u]) {
                        seen[u] = true;
                        stack.push_back(u);
                    }
            }
            if (cnt != cf.size())
                diagram_crit = false;
        }
    }

    if (graph_crit != diagram_crit)
        throw internal_error("QHS criteria disagree");
    return graph_crit;
}

} // namespace ntoric
