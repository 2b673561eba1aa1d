#include "ntoric/oka.hpp"

#include <doctest.h>

#include <set>

using namespace ntoric;

namespace {

const std::vector<Vec> octant{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

// Both identities of the ray/weight relation at every compact vertex:
//   -b_v l_v + sum_u l_u = 0   and   -b_v m_v + sum_u m_u = -2 Vol_2(F_v).
void check_vertex_identities(const NewtonData& nd, const PlumbingGraph& g)
{
    for (int v = 0; v < g.compact_count; ++v) {
        const PlumbingVertex& pv = g.vertices[v];
        Vec ls(3, 0);
        Int ms = 0;
        for (int u : g.neighbours_all(v)) {
            ls = add(ls, g.vertices[u].ell);
            ms += g.vertices[u].m;
        }
        Int b = -pv.euler;
        CHECK(smul(b, pv.ell) == ls);
        Int vol2 = 0;
        if (pv.kind == VertexKind::Node)
            vol2 = nd.face_of_facet(pv.facet).area2;
        CHECK(-b * pv.m + ms == -vol2);
    }
}

void check_canonical_cycles_agree(const PlumbingGraph& g)
{
    Cycle za = canonical_cycle_adjunction(g);
    Cycle zf = canonical_cycle_formula(g);
    REQUIRE(za.size() == zf.size());
    for (size_t i = 0; i < za.size(); ++i)
        CHECK(za[i] == zf[i]);
}

int node_of_normal(const PlumbingGraph& g, const Vec& l)
{
    for (const PlumbingVertex& v : g.vertices)
        if (v.kind == VertexKind::Node && v.ell == l)
            return v.id;
    return -1;
}

} // namespace

TEST_CASE("Oka graph of the cyclic quotient example")
{
    std::vector<Vec> rays{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    std::vector<DualVec> sup{{0, 0, 2}, {1, 0, 1}, {0, 2, 0}, {1, 2, -1}};
    NewtonData nd = build(3, rays, sup);
    PlumbingGraph g = build_graph(nd);

    // one node of genus 0 with six (-1) neighbours on alpha = 1 bamboos
    REQUIRE(g.nodes().size() == 1);
    int n = g.nodes()[0];
    CHECK(g.vertices[n].euler == -9);
    CHECK(g.vertices[n].genus == 0);
    CHECK(g.compact_count == 7);
    int minus_ones = 0;
    for (int v = 0; v < g.compact_count; ++v)
        if (g.vertices[v].kind == VertexKind::Bamboo) {
            CHECK(g.vertices[v].euler == -1);
            ++minus_ones;
        }
    CHECK(minus_ones == 6);

    CHECK(graph_negative_definite(g));
    check_vertex_identities(nd, g);
    check_canonical_cycles_agree(g);

    Cycle zk = canonical_cycle_adjunction(g);
    CHECK(zk[n] == Rat(1, 3));
    for (int v = 0; v < g.compact_count; ++v)
        if (v != n)
            CHECK(zk[v] == Rat(-2, 3));

    CHECK(is_qhs_link(g, nd));
}

TEST_CASE("Oka graph of x^2 + y^3 + z^7")
{
    NewtonData nd = build(3, octant, {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}});
    PlumbingGraph g = build_graph(nd);

    int n = node_of_normal(g, Vec{21, 14, 6});
    REQUIRE(n >= 0);
    CHECK(g.vertices[n].euler == -1);
    CHECK(g.vertices[n].genus == 0);
    REQUIRE(g.compact_count == 4);

    // arms -7, -2, -3 hanging towards the three extended nodes
    std::multiset<Int> arms;
    for (int v = 0; v < g.compact_count; ++v)
        if (v != n)
            arms.insert(g.vertices[v].euler);
    CHECK(arms == std::multiset<Int>{-7, -3, -2});

    CHECK(graph_negative_definite(g));
    check_vertex_identities(nd, g);
    check_canonical_cycles_agree(g);
    CHECK(is_qhs_link(g, nd));
}

TEST_CASE("Oka graph of x^5 + x^2y^2 + y^7 + z^10")
{
    NewtonData nd = build(3, octant, {{5, 0, 0}, {2, 2, 0}, {0, 7, 0}, {0, 0, 10}});
    PlumbingGraph g = build_graph(nd);

    int n1 = node_of_normal(g, Vec{2, 3, 1});
    int n2 = node_of_normal(g, Vec{25, 10, 7});
    REQUIRE(n1 >= 0);
    REQUIRE(n2 >= 0);
    CHECK(g.vertices[n1].euler == -9);
    CHECK(g.vertices[n1].genus == 2);
    CHECK(g.vertices[n2].euler == -2);
    CHECK(g.vertices[n2].genus == 0);

    // two parallel bamboos of type 11/4 join the nodes: chains -3 -4
    int chains = 0;
    for (int v : g.neighbours_compact(n1))
        if (g.vertices[v].kind == VertexKind::Bamboo && g.vertices[v].euler == -3) {
            auto nb = g.neighbours_compact(v);
            for (int w : nb)
                if (g.vertices[w].kind == VertexKind::Bamboo && g.vertices[w].euler == -4)
                    ++chains;
        }
    CHECK(chains == 2);

    CHECK(graph_negative_definite(g));
    check_vertex_identities(nd, g);
    check_canonical_cycles_agree(g);
    CHECK_FALSE(is_qhs_link(g, nd)); // genus and a double contact
}

TEST_CASE("dual cycles against the inverse intersection matrix")
{
    NewtonData nd = build(3, octant, {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}});
    PlumbingGraph g = build_graph(nd);
    for (int v = 0; v < g.compact_count; ++v) {
        Cycle ev = dual_cycle(g, v);
        for (int w = 0; w < g.compact_count; ++w)
            CHECK(pairing(g, ev, w) == (w == v ? Rat(-1) : Rat(0)));
        CHECK(cycle_pairing(g, ev, ev) < 0);
    }
}

TEST_CASE("degenerate pair x^2 + y^2: two detached curves")
{
    NewtonData nd = build(3, octant, {{2, 0, 0}, {0, 2, 0}});
    PlumbingGraph g = build_graph(nd);
    CHECK(g.nodes().empty());
    CHECK(g.compact_count == 2);
    CHECK_FALSE(is_qhs_link(g, nd));
}

TEST_CASE("smooth pair x + y: a single rational curve")
{
    NewtonData nd = build(3, octant, {{1, 0, 0}, {0, 1, 0}});
    PlumbingGraph g = build_graph(nd);
    CHECK(g.nodes().empty());
    CHECK(g.compact_count == 1);
    CHECK(is_qhs_link(g, nd));
}

TEST_CASE("single monomial: empty graph")
{
    NewtonData nd = build(3, octant, {{4, 5, 6}});
    PlumbingGraph g = build_graph(nd);
    CHECK(g.compact_count == 0);
    CHECK(g.vertices.empty());
    CHECK(is_qhs_link(g, nd));
}

TEST_CASE("canonical cycle weight of the B1 example node")
{
    // x^3 + x y^3 + z^5 + y^10 z: the facet with normal (19,2,5) carries
    // m_n(Z_K - E) = -1
    NewtonData nd = build(3, octant, {{3, 0, 0}, {1, 3, 0}, {0, 0, 5}, {0, 10, 1}});
    PlumbingGraph g = build_graph(nd);
    check_vertex_identities(nd, g);
    check_canonical_cycles_agree(g);
    int n = node_of_normal(g, Vec{19, 2, 5});
    REQUIRE(n >= 0);
    Cycle zk = canonical_cycle_adjunction(g);
    CHECK(zk[n] - 1 == Rat(-1));
}

TEST_CASE("hand-built graph with a zero Euler number is not definite")
{
    PlumbingGraph g;
    g.compact_count = 1;
    PlumbingVertex v;
    v.id = 0;
    v.kind = VertexKind::Node;
    v.ell = Vec{1, 1, 1};
    v.m = 0;
    v.euler = 0;
    g.vertices.push_back(v);
    CHECK_FALSE(graph_negative_definite(g));
    CHECK_THROWS_AS(canonical_cycle_adjunction(g), hypothesis_error);
}

TEST_CASE("dual cycle closed forms on tiny graphs")
{
    // single -3 vertex: E* = (1/3) E
    PlumbingGraph g;
    g.compact_count = 1;
    PlumbingVertex v;
    v.id = 0;
    v.kind = VertexKind::Node;
    v.ell = Vec{1, 1, 1};
    v.m = 0;
    v.euler = -3;
    g.vertices.push_back(v);
    CHECK(dual_cycle(g, 0) == Cycle{Rat(1, 3)});

    // string of two -2 vertices: minus the inverse of [[-2,1],[1,-2]]
    PlumbingGraph s;
    s.compact_count = 2;
    for (int i = 0; i < 2; ++i) {
        PlumbingVertex w;
        w.id = i;
        w.kind = VertexKind::Node;
        w.ell = Vec{1, 0, 0};
        w.m = 0;
        w.euler = -2;
        s.vertices.push_back(w);
    }
    s.edges.emplace_back(0, 1);
    CHECK(dual_cycle(s, 0) == Cycle{Rat(2, 3), Rat(1, 3)});
    CHECK(dual_cycle(s, 1) == Cycle{Rat(1, 3), Rat(2, 3)});
}

TEST_CASE("compact facet area sum is translation invariant")
{
    std::vector<DualVec> sup{{5, 0, 0}, {2, 2, 0}, {0, 7, 0}, {0, 0, 10}};
    NewtonData nd = build(3, octant, sup);
    auto total = [](const NewtonData& d) {
        Int t = 0;
        for (int fi : d.compact_facets())
            t += d.face_of_facet(fi).area2;
        return t;
    };
    Int base = total(nd);
    CHECK(base == 12); // 10 + 2
    std::vector<DualVec> moved;
    for (const DualVec& p : sup)
        moved.push_back(add(p, Vec{2, 1, 3}));
    CHECK(total(build(3, octant, moved)) == base);
}
