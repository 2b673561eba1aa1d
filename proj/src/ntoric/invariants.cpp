#include "ntoric/invariants.hpp"

#include "ntoric/polygon.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ntoric {

namespace {

// enumeration box from exact vertex coordinates of a family of polytopes
struct Box {
    Vec lo, hi;
    bool empty = true;

    void absorb(const QVec& v)
    {
        size_t n = v.size();
        if (empty) {
            lo.assign(n, 0);
            hi.assign(n, 0);
            for (size_t i = 0; i < n; ++i) {
                lo[i] = rat_floor(v[i]);
                hi[i] = rat_ceil(v[i]);
            }
            empty = false;
            return;
        }
        for (size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], rat_floor(v[i]));
            hi[i] = std::max(hi[i], rat_ceil(v[i]));
        }
    }

    void inflate(const Int& d)
    {
        for (size_t i = 0; i < lo.size(); ++i) {
            lo[i] -= d;
            hi[i] += d;
        }
    }

    template <class F> void for_each_point(F&& f) const
    {
        if (empty)
            return;
        Vec q = lo;
        size_t n = lo.size();
        while (true) {
            f(q);
            size_t i = 0;
            while (i < n) {
                ++q[i];
                if (q[i] <= hi[i])
                    break;
                q[i] = lo[i];
                ++i;
            }
            if (i == n)
                return;
        }
    }
};

// vertices of {rows[i] . q >= / <= rhs[i]} via exhaustive square subsystems
std::vector<QVec> polytope_vertices(const Mat& rows, const std::vector<Int>& rhs,
                                    const std::vector<bool>& is_lower)
{
    size_t k = rows.size();
    size_t d = rows.empty() ? 0 : rows[0].size();
    std::vector<QVec> verts;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i)
        idx[i] = i;
    std::vector<size_t> pick(d);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t got) {
        if (got == d) {
            QMat a(d, QVec(d));
            QVec b(d);
            for (size_t i = 0; i < d; ++i) {
                for (size_t j = 0; j < d; ++j)
                    a[i][j] = Rat(rows[pick[i]][j]);
                b[i] = Rat(rhs[pick[i]]);
            }
            Mat am(d, Vec(d));
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    am[i][j] = rows[pick[i]][j];
            if (det(am) == 0)
                return;
            QVec x = solve_square(a, b);
            for (size_t i = 0; i < k; ++i) {
                Rat v = 0;
                for (size_t j = 0; j < d; ++j)
                    v += Rat(rows[i][j]) * x[j];
                if (is_lower[i] ? v > Rat(rhs[i]) : v < Rat(rhs[i]))
                    return;
            }
            verts.push_back(x);
            return;
        }
        for (size_t i = start; i + (d - got) <= k; ++i) {
            pick[got] = idx[i];
            rec(i + 1, got + 1);
        }
    };
    rec(0, 0);
    return verts;
}

} // namespace

CurveReport curve_invariants(const NewtonData& nd)
{
    if (nd.rank != 2)
        throw input_error("curve invariants need rank 2");
    CurveReport rep;
    std::vector<int> cf = nd.compact_facets();
    for (int fi : cf)
        rep.branches += nd.face_of_facet(fi).lattice_length;
    if (rep.branches == 0)
        return rep;
    if (rep.branches > 1 || cf.size() != 1)
        return rep; // reducible: multiplicity and delta are not reported

    const Vec& lsig = nd.facets[cf[0]].normal;
    PrimitiveSequence seq =
        canonical_primitive_sequence(nd.sigma.rays[0], nd.sigma.rays[1]);
    size_t s = seq.selfints.size();

    // smoothness: l_sigma on the boundary of conv(Sigma^o cap N)
    rep.smooth = false;
    for (size_t i = 1; i <= s; ++i)
        if (lsig == seq.vectors[i])
            rep.smooth = true;
    auto on_family = [&](const Vec& base, const Vec& dir) {
        // lsig = a*dir + base for some integer a >= 1
        Vec d = sub(lsig, base);
        if (is_zero(d))
            return false;
        // d = a * dir
        int k = 0;
        while (dir[k] == 0) {
            if (d[k] != 0)
                return false;
            ++k;
        }
        if (d[k] % dir[k] != 0)
            return false;
        Int a = d[k] / dir[k];
        return a >= 1 && smul(a, dir) == d;
    };
    if (on_family(seq.vectors[1], seq.vectors[0]))
        rep.smooth = true;
    if (on_family(seq.vectors[s], seq.vectors[s + 1]))
        rep.smooth = true;

    // multiplicity through the subdivided sector containing l_sigma
    for (size_t i = 0; i + 1 < seq.vectors.size(); ++i) {
        const Vec& u = seq.vectors[i];
        const Vec& v = seq.vectors[i + 1];
        Int dd = u[0] * v[1] - u[1] * v[0];
        Int a = lsig[0] * v[1] - lsig[1] * v[0];
        Int b = u[0] * lsig[1] - u[1] * lsig[0];
        if (dd < 0) {
            a = -a;
            b = -b;
            dd = -dd;
        }
        if (a < 0 || b < 0)
            continue;
        if (a % dd != 0 || b % dd != 0)
            throw internal_error("sector coordinates not integral");
        a /= dd;
        b /= dd;
        if (i == 0)
            rep.multiplicity = b;
        else if (i == s)
            rep.multiplicity = a;
        else
            rep.multiplicity = a + b;
        break;
    }
    if (!rep.multiplicity)
        throw internal_error("diagram normal outside the cone");

    // delta: unordered pairs l' + l'' = l_sigma with both in the open cone
    Mat rows;
    std::vector<Int> rhs;
    std::vector<bool> lower;
    for (const Vec& h : nd.sigma.dual_rays()) {
        rows.push_back(h);
        rhs.push_back(0);
        lower.push_back(false);
        rows.push_back(h);
        rhs.push_back(dot(h, lsig));
        lower.push_back(true);
    }
    Box box;
    for (const QVec& v : polytope_vertices(rows, rhs, lower))
        box.absorb(v);
    Int ordered = 0, selfs = 0;
    box.for_each_point([&](const Vec& q) {
        if (!nd.sigma.contains_interior(q))
            return;
        Vec r = sub(lsig, q);
        if (!nd.sigma.contains_interior(r))
            return;
        ++ordered;
        if (q == r)
            ++selfs;
    });
    rep.delta = (ordered + selfs) / 2;

    if (rep.smooth && (*rep.delta != 0 || *rep.multiplicity != 1))
        throw internal_error("smooth curve with nonzero delta or multiplicity");
    return rep;
}

IsolatedReport isolated_test(const NewtonData& nd)
{
    if (nd.rank != 3)
        throw input_error("isolated test needs rank 3");
    IsolatedReport rep;
    for (auto& [ra, rb] : sigma_two_faces(nd)) {
        FaceDiagnostic diag;
        diag.ray_a = ra;
        diag.ray_b = rb;
        SublatticeFrame frame = sublattice_frame(ra, rb);
        Vec a2 = frame.to_plane(ra), b2 = frame.to_plane(rb);
        Int dd = a2[0] * b2[1] - a2[1] * b2[0];
        std::vector<Vec> taus;
        for (const Facet& f : nd.facets) {
            if (f.normal == ra || f.normal == rb)
                continue;
            Mat span{ra, rb};
            span.push_back(f.normal);
            if (rank_of(span) != 2)
                continue;
            Vec c2 = frame.to_plane(f.normal);
            Int x = c2[0] * b2[1] - c2[1] * b2[0];
            Int y = a2[0] * c2[1] - a2[1] * c2[0];
            if (dd < 0) {
                x = -x;
                y = -y;
            }
            if (x > 0 && y > 0)
                taus.push_back(f.normal);
        }
        diag.subdividing_rays = (int)taus.size();
        if (taus.size() > 1) {
            diag.pass = false;
            diag.reason = "face subdivided by more than one ray";
        } else if (taus.size() == 1) {
            const Vec& tau = taus[0];
            PrimitiveSequence seq = canonical_primitive_sequence(ra, rb);
            size_t s = seq.selfints.size();
            bool shape = false;
            for (size_t i = 1; i <= s; ++i)
                if (tau == seq.vectors[i])
                    shape = true;
            auto family = [&](const Vec& base, const Vec& dir) {
                Vec d = sub(tau, base);
                if (is_zero(d))
                    return false;
                int k = 0;
                while (dir[k] == 0) {
                    if (d[k] != 0)
                        return false;
                    ++k;
                }
                if (d[k] % dir[k] != 0)
                    return false;
                Int t = d[k] / dir[k];
                return t >= 1 && smul(t, dir) == d;
            };
            if (family(seq.vectors[1], seq.vectors[0]))
                shape = true;
            if (family(seq.vectors[s], seq.vectors[s + 1]))
                shape = true;
            if (!shape) {
                diag.pass = false;
                diag.reason = "subdividing ray of inadmissible shape";
            } else {
                Int alpha1 = alpha_det(tau, ra);
                Int alpha2 = alpha_det(tau, rb);
                // e * tau + ra/alpha1 + rb/alpha2 = 0 must have a solution
                QVec w(3);
                for (int i = 0; i < 3; ++i)
                    w[i] = make_rat(ra[i], alpha1) + make_rat(rb[i], alpha2);
                int k = 0;
                while (tau[k] == 0)
                    ++k;
                Rat e = -w[k] / Rat(tau[k]);
                bool ok = true;
                for (int i = 0; i < 3; ++i)
                    ok &= e * Rat(tau[i]) + w[i] == 0;
                if (!ok) {
                    diag.pass = false;
                    diag.reason = "no scalar solves the ray equation";
                } else {
                    Rat lhs = e * Rat(nd.weight_of(tau)) +
                              make_rat(nd.weight_of(ra), alpha1) +
                              make_rat(nd.weight_of(rb), alpha2);
                    if (lhs != Rat(-1)) {
                        diag.pass = false;
                        diag.reason = "transverse length differs from one";
                    }
                }
            }
        }
        rep.isolated &= diag.pass;
        rep.faces.push_back(std::move(diag));
    }
    return rep;
}

bool isolated_via_transverse(const NewtonData& nd)
{
    for (auto& [ra, rb] : sigma_two_faces(nd)) {
        auto tp = transverse_projection(nd, ra, rb);
        if (!tp)
            continue;
        CurveReport rep = curve_invariants(*tp);
        if (!rep.smooth)
            return false;
    }
    return true;
}

Int pg_count(const NewtonData& nd)
{
    std::vector<int> interior = nd.compact_facets();
    if (interior.empty())
        return 0;
    std::vector<int> boundary;
    for (size_t i = 0; i < nd.facets.size(); ++i)
        if (!nd.facets[i].compact)
            boundary.push_back((int)i);

    Box box;
    for (int fi : interior) {
        Mat rows;
        std::vector<Int> rhs;
        std::vector<bool> lower;
        for (int b : boundary) {
            rows.push_back(nd.facets[b].normal);
            rhs.push_back(nd.facets[b].m);
            lower.push_back(false);
        }
        rows.push_back(nd.facets[fi].normal);
        rhs.push_back(nd.facets[fi].m);
        lower.push_back(true);
        for (const QVec& v : polytope_vertices(rows, rhs, lower))
            box.absorb(v);
    }

    Int count = 0;
    box.for_each_point([&](const Vec& q) {
        for (int b : boundary)
            if (dot(nd.facets[b].normal, q) <= nd.facets[b].m)
                return;
        for (int fi : interior)
            if (dot(nd.facets[fi].normal, q) <= nd.facets[fi].m) {
                ++count;
                return;
            }
    });
    return count;
}

Int pg_count_bruteforce(const NewtonData& nd, const Int& margin)
{
    std::vector<int> interior = nd.compact_facets();
    if (interior.empty())
        return 0;
    Box box;
    for (const DualVec& v : nd.gvertices) {
        QVec q;
        for (const Int& x : v)
            q.emplace_back(x);
        box.absorb(q);
    }
    box.inflate(margin);
    Int count = 0;
    box.for_each_point([&](const Vec& q) {
        for (const Facet& f : nd.facets)
            if (!f.compact && dot(f.normal, q) <= f.m)
                return;
        for (int fi : interior)
            if (dot(nd.facets[fi].normal, q) <= nd.facets[fi].m) {
                ++count;
                return;
            }
    });
    return count;
}

BoundaryCircle boundary_circle(const NewtonData& nd)
{
    if (nd.rank != 3)
        throw input_error("boundary circle needs rank 3");
    // unbounded edges pair up the noncompact facets into a cycle
    std::map<int, std::vector<int>> link; // noncompact facet -> partners
    for (const EdgeRec& e : nd.edges) {
        if (e.compact)
            continue;
        link[e.f1].push_back(e.f2);
        link[e.f2].push_back(e.f1);
    }
    for (auto& [f, ps] : link)
        if (ps.size() != 2)
            throw internal_error("noncompact facet without two unbounded edges");
    BoundaryCircle bc;
    int start = link.begin()->first;
    int prev = -1, cur = start;
    do {
        bc.facet_ids.push_back(cur);
        auto& ps = link[cur];
        int nxt = (ps[0] == prev) ? ps[1] : ps[0];
        prev = cur;
        cur = nxt;
    } while (cur != start);
    if (bc.facet_ids.size() != link.size())
        throw internal_error("boundary cells do not close into one circle");
    return bc;
}

namespace {

bool delta_guard(const NewtonData& nd, const DualVec& q)
{
    for (const Facet& f : nd.facets) {
        Int v = dot(f.normal, q);
        if (v < f.m)
            return true;
        if (f.compact && v == f.m)
            return true;
    }
    for (const EdgeRec& e : nd.edges)
        if (e.compact && dot(nd.facets[e.f1].normal, q) == nd.facets[e.f1].m &&
            dot(nd.facets[e.f2].normal, q) == nd.facets[e.f2].m)
            return true;
    for (const DualVec& v : nd.gvertices)
        if (v == q)
            return true;
    return false;
}

} // namespace

Int delta_contribution(const NewtonData& nd, const BoundaryCircle& bc, const DualVec& q)
{
    if (!delta_guard(nd, q))
        return 0;
    size_t n = bc.facet_ids.size();
    std::vector<bool> above(n);
    for (size_t i = 0; i < n; ++i) {
        const Facet& f = nd.facets[bc.facet_ids[i]];
        above[i] = dot(f.normal, q) > f.m;
    }
    // cells live between consecutive rays; cell i is in A(q) iff both ends
    // are strictly above their weights
    std::vector<bool> cell(n);
    for (size_t i = 0; i < n; ++i)
        cell[i] = above[i] && above[(i + 1) % n];
    // count cyclic runs
    size_t comps = 0;
    for (size_t i = 0; i < n; ++i)
        if (cell[i] && !cell[(i + n - 1) % n])
            ++comps;
    if (comps == 0 && cell[0])
        comps = 1; // full circle
    return comps > 1 ? Int((long)comps - 1) : Int(0);
}

DeltaResult surface_delta(const NewtonData& nd, int shell_cap)
{
    if (nd.rank != 3)
        throw input_error("surface delta needs rank 3");
    if (!isolated_test(nd).isolated)
        return {false, 0};
    BoundaryCircle bc = boundary_circle(nd);

    Box base;
    for (const DualVec& v : nd.gvertices) {
        QVec q;
        for (const Int& x : v)
            q.emplace_back(x);
        base.absorb(q);
    }
    Int total = 0;
    int quiet = 0;
    for (int shell = 0; shell <= shell_cap; ++shell) {
        Box cur = base;
        cur.inflate(shell);
        Int found = 0;
        cur.for_each_point([&](const Vec& q) {
            if (shell > 0) {
                // only the new shell
                bool inside_prev = true;
                for (size_t i = 0; i < q.size(); ++i)
                    inside_prev &= q[i] > base.lo[i] - shell && q[i] < base.hi[i] + shell;
                if (inside_prev)
                    return;
            }
            found += delta_contribution(nd, bc, q);
        });
        total += found;
        quiet = (found == 0) ? quiet + 1 : 0;
        if (shell >= 1 && quiet >= 2)
            return {true, total};
    }
    throw cap_error("unbounded enumeration: delta shells did not stabilize");
}

bool is_normal_surface(const NewtonData& nd, int shell_cap)
{
    DeltaResult d = surface_delta(nd, shell_cap);
    return d.finite && d.value == 0;
}

} // namespace ntoric
