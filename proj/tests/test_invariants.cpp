#include "ntoric/invariants.hpp"

#include <doctest.h>

using namespace ntoric;

namespace {

const std::vector<Vec> octant{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
const std::vector<Vec> quadrant{{1, 0}, {0, 1}};

} // namespace

TEST_CASE("curve invariants of the cusp x^2 + y^3")
{
    NewtonData nd = build(2, quadrant, {{2, 0}, {0, 3}});
    CurveReport rep = curve_invariants(nd);
    CHECK(rep.branches == 1);
    CHECK_FALSE(rep.smooth);
    REQUIRE(rep.multiplicity.has_value());
    CHECK(*rep.multiplicity == 2);
    REQUIRE(rep.delta.has_value());
    CHECK(*rep.delta == 1);
}

TEST_CASE("curve invariants of x^3 + y^5")
{
    NewtonData nd = build(2, quadrant, {{3, 0}, {0, 5}});
    CurveReport rep = curve_invariants(nd);
    CHECK(rep.branches == 1);
    CHECK(*rep.multiplicity == 3);
    CHECK(*rep.delta == 4);
}

TEST_CASE("smooth curve x + y")
{
    NewtonData nd = build(2, quadrant, {{1, 0}, {0, 1}});
    CurveReport rep = curve_invariants(nd);
    CHECK(rep.branches == 1);
    CHECK(rep.smooth);
    CHECK(*rep.multiplicity == 1);
    CHECK(*rep.delta == 0);
}

TEST_CASE("classical curve delta (a-1)(b-1)/2 on the quadrant")
{
    for (int a = 2; a <= 7; ++a)
        for (int b = a + 1; b <= 8; ++b) {
            Int g;
            Int ia = a, ib = b;
            mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
            if (g != 1)
                continue;
            NewtonData nd = build(2, quadrant, {{b, 0}, {0, a}});
            CurveReport rep = curve_invariants(nd);
            CHECK(rep.branches == 1);
            REQUIRE(rep.delta.has_value());
            CHECK(*rep.delta == Int((a - 1) * (b - 1) / 2));
        }
}

TEST_CASE("reducible and empty curve diagrams")
{
    NewtonData nd = build(2, quadrant, {{2, 0}, {0, 2}});
    CurveReport rep = curve_invariants(nd);
    CHECK(rep.branches == 2);
    CHECK_FALSE(rep.multiplicity.has_value());
    CHECK_FALSE(rep.delta.has_value());

    NewtonData pt = build(2, quadrant, {{3, 4}});
    CHECK(curve_invariants(pt).branches == 0);
}

TEST_CASE("curve invariants over a singular cone")
{
    // Sigma = <(0,1),(5,3)>: diagram dual to an interior sequence element is
    // smooth even though the ambient is a quotient singularity
    NewtonData nd = build(2, {{0, 1}, {5, 3}}, {{1, 0}, {0, 1}});
    // normal of the segment [(1,0),(0,1)]: l = (1,1), an interior element of
    // the canonical primitive sequence of Sigma
    CurveReport rep = curve_invariants(nd);
    CHECK(rep.branches == 1);
    CHECK(rep.smooth);
}

TEST_CASE("isolated: x^2 + y^3 + z^7")
{
    NewtonData nd = build(3, octant, {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}});
    IsolatedReport rep = isolated_test(nd);
    CHECK(rep.isolated);
    CHECK(isolated_via_transverse(nd));
}

TEST_CASE("not isolated: x^2 + y^2 and the umbrella")
{
    NewtonData nd = build(3, octant, {{2, 0, 0}, {0, 2, 0}});
    CHECK_FALSE(isolated_test(nd).isolated);
    CHECK_FALSE(isolated_via_transverse(nd));

    NewtonData um = build(3, octant, {{2, 0, 0}, {0, 2, 1}});
    CHECK_FALSE(isolated_test(um).isolated);
    CHECK_FALSE(isolated_via_transverse(um));
}

TEST_CASE("isolated test routes agree facewise on a mixed corpus")
{
    std::vector<std::vector<DualVec>> corpus = {
        {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}},
        {{5, 0, 0}, {2, 2, 0}, {0, 7, 0}, {0, 0, 10}},
        {{3, 0, 0}, {1, 3, 0}, {0, 0, 5}},
        {{3, 0, 0}, {1, 3, 0}, {0, 0, 5}, {0, 10, 1}},
        {{2, 0, 0}, {0, 2, 1}},
        {{2, 0, 0}, {0, 2, 0}},
        {{4, 4, 4}},
        {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
    };
    for (const auto& sup : corpus) {
        NewtonData nd = build(3, octant, sup);
        CHECK(isolated_test(nd).isolated == isolated_via_transverse(nd));
    }
}

TEST_CASE("pg count of x^2 + y^3 + z^7 is one")
{
    NewtonData nd = build(3, octant, {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}});
    CHECK(pg_count(nd) == 1);
    CHECK(pg_count_bruteforce(nd, 6) == 1);
}

TEST_CASE("pg count of the cyclic quotient example is zero")
{
    std::vector<Vec> rays{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    NewtonData nd = build(3, rays, {{0, 0, 2}, {1, 0, 1}, {0, 2, 0}, {1, 2, -1}});
    CHECK(pg_count(nd) == 0);
    CHECK(pg_count_bruteforce(nd, 6) == 0);
}

TEST_CASE("pg bounded enumeration equals large-box brute force")
{
    std::vector<std::vector<DualVec>> corpus = {
        {{5, 0, 0}, {2, 2, 0}, {0, 7, 0}, {0, 0, 10}},
        {{3, 0, 0}, {1, 3, 0}, {0, 0, 5}},
        {{3, 0, 0}, {1, 3, 0}, {0, 0, 5}, {0, 10, 1}},
        {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}},
        {{6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {1, 1, 1}},
    };
    for (const auto& sup : corpus) {
        NewtonData nd = build(3, octant, sup);
        CHECK(pg_count(nd) == pg_count_bruteforce(nd, 8));
    }
}

TEST_CASE("pg count is invariant under support translation")
{
    std::vector<DualVec> sup{{3, 0, 0}, {1, 3, 0}, {0, 0, 5}};
    NewtonData nd = build(3, octant, sup);
    Int base = pg_count(nd);
    for (const Vec& q : std::vector<Vec>{{1, 0, 0}, {2, 3, 1}, {0, 5, 2}}) {
        std::vector<DualVec> moved;
        for (const DualVec& p : sup)
            moved.push_back(add(p, q));
        CHECK(pg_count(build(3, octant, moved)) == base);
    }
}

TEST_CASE("single monomial: pg zero")
{
    NewtonData nd = build(3, octant, {{3, 1, 2}});
    CHECK(pg_count(nd) == 0);
}

TEST_CASE("boundary circle structure")
{
    std::vector<Vec> rays{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    NewtonData nd = build(3, rays, {{0, 0, 2}, {1, 0, 1}, {0, 2, 0}, {1, 2, -1}});
    BoundaryCircle bc = boundary_circle(nd);
    CHECK(bc.facet_ids.size() == 4);

    NewtonData e7 = build(3, octant, {{3, 0, 0}, {1, 3, 0}, {0, 0, 2}});
    BoundaryCircle bc7 = boundary_circle(e7);
    CHECK(bc7.facet_ids.size() == 4);
}

TEST_CASE("surface delta: normal cases are zero")
{
    std::vector<Vec> rays{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    NewtonData gor = build(3, rays, {{0, 0, 2}, {1, 0, 1}, {0, 2, 0}, {1, 2, -1}});
    DeltaResult d = surface_delta(gor);
    CHECK(d.finite);
    CHECK(d.value == 0);
    CHECK(is_normal_surface(gor));

    NewtonData e12 = build(3, octant, {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}});
    DeltaResult d2 = surface_delta(e12);
    CHECK(d2.finite);
    CHECK(d2.value == 0);
}

TEST_CASE("surface delta: non-isolated input is infinite")
{
    NewtonData um = build(3, octant, {{2, 0, 0}, {0, 2, 1}});
    DeltaResult d = surface_delta(um);
    CHECK_FALSE(d.finite);
    CHECK_FALSE(is_normal_surface(um));
}

TEST_CASE("full-circle points are exactly the pg points and contribute no delta")
{
    std::vector<std::vector<DualVec>> corpus = {
        {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}},
        {{3, 0, 0}, {1, 3, 0}, {0, 0, 5}},
    };
    for (const auto& sup : corpus) {
        NewtonData nd = build(3, octant, sup);
        BoundaryCircle bc = boundary_circle(nd);
        Int full_circle_points = 0;
        for (Int x = -2; x <= 12; ++x)
            for (Int y = -2; y <= 12; ++y)
                for (Int z = -2; z <= 12; ++z) {
                    Vec q{x, y, z};
                    bool strict_boundary = true;
                    bool outside_interior = false;
                    for (const Facet& f : nd.facets) {
                        Int v = dot(f.normal, q);
                        if (!f.compact && v <= f.m)
                            strict_boundary = false;
                        if (f.compact && v <= f.m)
                            outside_interior = true;
                    }
                    if (strict_boundary && outside_interior) {
                        ++full_circle_points;
                        CHECK(delta_contribution(nd, bc, q) == 0);
                    }
                }
        CHECK(full_circle_points == pg_count(nd));
    }
}

TEST_CASE("isolatedness routes agree on every single face")
{
    std::vector<std::vector<DualVec>> corpus = {
        {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}},
        {{5, 0, 0}, {2, 2, 0}, {0, 7, 0}, {0, 0, 10}},
        {{2, 0, 0}, {0, 2, 1}},
        {{2, 0, 0}, {0, 2, 0}},
        {{3, 0, 0}, {1, 3, 0}, {0, 0, 5}, {0, 10, 1}},
    };
    for (const auto& sup : corpus) {
        NewtonData nd = build(3, octant, sup);
        IsolatedReport rep = isolated_test(nd);
        for (const FaceDiagnostic& fd : rep.faces) {
            auto tp = transverse_projection(nd, fd.ray_a, fd.ray_b);
            bool smooth_or_absent = !tp || curve_invariants(*tp).smooth;
            CHECK(fd.pass == smooth_or_absent);
        }
    }
}
