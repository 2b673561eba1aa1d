#include "ntoric/cones.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ntoric {

namespace {

// Primitive normal of the hyperplane spanned by the given vectors, or empty
// when they do not span a hyperplane.
Vec hyperplane_normal(const std::vector<Vec>& span, size_t d)
{
    Mat m(span.begin(), span.end());
    std::vector<Vec> ker = kernel_basis(m);
    // kernel of the span viewed as row space: vectors x with span_i . x = 0
    if (ker.size() != 1)
        return {};
    (void)d;
    return primitive(ker[0]);
}

void subsets_rec(size_t n, size_t k, size_t start, std::vector<size_t>& cur,
                 const std::function<void(const std::vector<size_t>&)>& f)
{
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, f);
        cur.pop_back();
    }
}

void for_each_subset(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& f)
{
    std::vector<size_t> cur;
    subsets_rec(n, k, 0, cur, f);
}

} // namespace

std::vector<Vec> cone_facet_normals(const std::vector<Vec>& gens)
{
    if (gens.empty())
        return {};
    size_t d = gens[0].size();
    std::set<Vec> out;
    for_each_subset(gens.size(), d - 1, [&](const std::vector<size_t>& idx) {
        std::vector<Vec> span;
        for (size_t i : idx)
            span.push_back(gens[i]);
        Vec h = hyperplane_normal(span, d);
        if (h.empty())
            return;
        bool pos = false, negv = false;
        for (const Vec& g : gens) {
            int s = sgn(dot(h, g));
            pos |= s > 0;
            negv |= s < 0;
        }
        if (pos && negv)
            return; // not supporting
        if (negv)
            h = neg(h);
        if (!pos && !negv)
            return; // all generators inside the hyperplane: cone not full-dim here
        out.insert(h);
    });
    return {out.begin(), out.end()};
}

std::vector<Vec> cone_extreme_rays(const std::vector<Vec>& gens)
{
    std::vector<Vec> prim;
    std::set<Vec> seen;
    for (const Vec& g : gens) {
        if (is_zero(g))
            continue;
        Vec p = primitive(g);
        if (seen.insert(p).second)
            prim.push_back(p);
    }
    if (prim.size() <= 1)
        return prim;
    std::vector<Vec> facets = cone_facet_normals(prim);
    // A generator is extreme iff its active facet set cuts it out: the facets
    // vanishing on it intersect in a 1-dimensional subspace.
    std::vector<Vec> out;
    for (const Vec& g : prim) {
        Mat active;
        for (const Vec& h : facets)
            if (dot(h, g) == 0)
                active.push_back(h);
        if (!active.empty() && kernel_basis(active).size() == 1)
            out.push_back(g);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool Cone::contains(const Vec& v) const
{
    for (const Vec& h : dual_rays())
        if (dot(h, v) < 0)
            return false;
    return true;
}

bool Cone::contains_interior(const Vec& v) const
{
    for (const Vec& h : dual_rays())
        if (dot(h, v) <= 0)
            return false;
    return true;
}

const std::vector<Vec>& Cone::dual_rays() const
{
    if (dual_.empty())
        dual_ = cone_facet_normals(rays);
    return dual_;
}

Cone make_cone(int rank, std::vector<Vec> gens)
{
    for (const Vec& g : gens)
        if ((int)g.size() != rank)
            throw input_error("cone generator has wrong length");
    std::vector<Vec> rays = cone_extreme_rays(gens);
    Mat m(rays.begin(), rays.end());
    if (rank_of(m) != (size_t)rank)
        throw input_error("cone is not full-dimensional");
    std::vector<Vec> facets = cone_facet_normals(rays);
    Mat fm(facets.begin(), facets.end());
    if (rank_of(fm) != (size_t)rank)
        throw input_error("cone is not strictly convex");

    Cone c;
    c.rank = rank;
    if (rank == 3 && rays.size() >= 3) {
        // cyclic boundary order: facets of a 3-cone pair up adjacent rays
        std::vector<std::vector<size_t>> adj(rays.size());
        for (const Vec& h : facets) {
            std::vector<size_t> on;
            for (size_t i = 0; i < rays.size(); ++i)
                if (dot(h, rays[i]) == 0)
                    on.push_back(i);
            if (on.size() != 2)
                throw internal_error("cone facet with ray count != 2");
            adj[on[0]].push_back(on[1]);
            adj[on[1]].push_back(on[0]);
        }
        std::vector<Vec> ordered;
        std::vector<bool> used(rays.size(), false);
        size_t cur = 0;
        for (size_t k = 0; k < rays.size(); ++k) {
            ordered.push_back(rays[cur]);
            used[cur] = true;
            if (adj[cur].size() != 2)
                throw internal_error("boundary traversal failed");
            size_t nxt = adj[cur][0];
            if (used[nxt])
                nxt = adj[cur][1];
            if (used[nxt] && k + 1 < rays.size())
                throw internal_error("boundary traversal failed");
            cur = nxt;
        }
        // fix the rotation and direction so the order is canonical
        size_t lo = 0;
        for (size_t i = 1; i < ordered.size(); ++i)
            if (lex_less(ordered[i], ordered[lo]))
                lo = i;
        std::vector<Vec> rot;
        for (size_t i = 0; i < ordered.size(); ++i)
            rot.push_back(ordered[(lo + i) % ordered.size()]);
        if (rot.size() > 2 && lex_less(rot[rot.size() - 1], rot[1]))
            std::reverse(rot.begin() + 1, rot.end());
        c.rays = rot;
    } else {
        c.rays = rays;
    }
    return c;
}

} // namespace ntoric
