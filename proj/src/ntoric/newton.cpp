#include "ntoric/newton.hpp"

#include "ntoric/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ntoric {

namespace {

// 2D lattice coordinates on the affine hull of a dim-2 face with normal l:
// a basis of the direction lattice {q : l(q) = 0} plus an origin.
struct PlaneFrame {
    Vec origin;
    std::vector<Vec> basis;

    Vec coords(const Vec& p) const
    {
        Vec d = sub(p, origin);
        Mat a(d.size(), Vec(2));
        for (size_t i = 0; i < d.size(); ++i) {
            a[i][0] = basis[0][i];
            a[i][1] = basis[1][i];
        }
        auto sol = solve_integral(a, d);
        if (!sol)
            throw internal_error("point not in face plane lattice");
        return *sol;
    }
};

PlaneFrame plane_frame(const Vec& normal, const Vec& origin)
{
    std::vector<Vec> basis = kernel_basis(Mat{normal});
    if (basis.size() != 2)
        throw internal_error("face plane frame: kernel rank != 2");
    return PlaneFrame{origin, basis};
}

} // namespace

Int NewtonData::weight_of(const Vec& l) const
{
    bool first = true;
    Int m = 0;
    for (const DualVec& p : support) {
        Int v = dot(l, p);
        if (first || v < m) {
            m = v;
            first = false;
        }
    }
    return m;
}

bool NewtonData::single_point_diagram() const
{
    for (const Facet& f : facets)
        if (f.compact || f.cls > 0)
            return false;
    return true;
}

std::vector<int> NewtonData::compact_facets() const
{
    std::vector<int> out;
    for (size_t i = 0; i < facets.size(); ++i)
        if (facets[i].compact)
            out.push_back((int)i);
    return out;
}

std::vector<int> NewtonData::facet_edges(int f) const
{
    std::vector<int> out;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].f1 == f || edges[i].f2 == f)
            out.push_back((int)i);
    return out;
}

FaceData NewtonData::face_of_facet(int fi) const
{
    const Facet& f = facets[fi];
    FaceData fd;
    for (int v : f.verts)
        fd.vertices.push_back(gvertices[v]);
    std::sort(fd.vertices.begin(), fd.vertices.end(), lex_less);
    for (int r : f.recs)
        fd.rec_rays.push_back(dual_rays[r]);
    fd.dim = rank - 1;
    fd.compact = f.compact;
    if (rank == 2) {
        if (f.compact)
            fd.lattice_length = content(sub(fd.vertices[1], fd.vertices[0]));
        return fd;
    }
    if (f.compact) {
        PlaneFrame frame = plane_frame(f.normal, fd.vertices[0]);
        std::vector<Vec> pts;
        for (const Vec& v : fd.vertices)
            pts.push_back(frame.coords(v));
        std::vector<Vec> h = hull2(pts);
        fd.area2 = area2(h);
        fd.boundary_points = boundary_lattice_points(h);
        fd.interior_points = interior_lattice_points(h);
    }
    return fd;
}

FaceData NewtonData::face_of_edge(const EdgeRec& e) const
{
    FaceData fd;
    fd.dim = 1;
    fd.compact = e.compact;
    fd.vertices.push_back(gvertices[e.v1]);
    if (e.compact) {
        fd.vertices.push_back(gvertices[e.v2]);
        std::sort(fd.vertices.begin(), fd.vertices.end(), lex_less);
        fd.lattice_length = e.length;
    } else {
        fd.rec_rays.push_back(dual_rays[e.rec]);
    }
    return fd;
}

NewtonData build(int rank, const std::vector<Vec>& cone_rays, const std::vector<DualVec>& support)
{
    if (rank < 2 || rank > 3)
        throw input_error("rank must be 2 or 3");
    if (support.empty())
        throw input_error("support is empty");
    for (const DualVec& p : support)
        if ((int)p.size() != rank)
            throw input_error("support vector has wrong length");

    NewtonData nd;
    nd.rank = rank;
    nd.sigma = make_cone(rank, cone_rays);
    nd.dual_rays = nd.sigma.dual_rays();

    std::set<Vec> sup(support.begin(), support.end());
    nd.support.assign(sup.begin(), sup.end());

    // Facets of Gamma+ = conv(support) + Sigma^vee through homogenization:
    // generators (p,1) and (w,0); a facet normal (l,-m) gives l(u) >= m.
    std::vector<Vec> hgens;
    for (const DualVec& p : nd.support) {
        Vec h = p;
        h.push_back(1);
        hgens.push_back(h);
    }
    for (const Vec& w : nd.dual_rays) {
        Vec h = w;
        h.push_back(0);
        hgens.push_back(h);
    }
    for (const Vec& hn : cone_facet_normals(hgens)) {
        Vec l(hn.begin(), hn.end() - 1);
        if (is_zero(l))
            continue;
        Facet f;
        f.normal = l;
        f.m = -hn.back();
        nd.facets.push_back(f);
    }
    std::sort(nd.facets.begin(), nd.facets.end(),
              [](const Facet& a, const Facet& b) { return lex_less(a.normal, b.normal); });

    // vertices: support points whose active facet normals span full rank
    for (const DualVec& p : nd.support) {
        Mat act;
        for (const Facet& f : nd.facets)
            if (dot(f.normal, p) == f.m)
                act.push_back(f.normal);
        if (rank_of(act) == (size_t)rank)
            nd.gvertices.push_back(p);
    }

    for (Facet& f : nd.facets) {
        for (size_t v = 0; v < nd.gvertices.size(); ++v)
            if (dot(f.normal, nd.gvertices[v]) == f.m)
                f.verts.push_back((int)v);
        for (size_t r = 0; r < nd.dual_rays.size(); ++r)
            if (dot(f.normal, nd.dual_rays[r]) == 0)
                f.recs.push_back((int)r);
        f.compact = f.recs.empty();
    }

    // edges: facet pairs whose common face is 1-dimensional
    for (size_t i = 0; i < nd.facets.size(); ++i)
        for (size_t j = i + 1; j < nd.facets.size(); ++j) {
            std::vector<int> cv, cr;
            std::set_intersection(nd.facets[i].verts.begin(), nd.facets[i].verts.end(),
                                  nd.facets[j].verts.begin(), nd.facets[j].verts.end(),
                                  std::back_inserter(cv));
            std::set_intersection(nd.facets[i].recs.begin(), nd.facets[i].recs.end(),
                                  nd.facets[j].recs.begin(), nd.facets[j].recs.end(),
                                  std::back_inserter(cr));
            if (cv.empty())
                continue;
            EdgeRec e;
            e.f1 = (int)i;
            e.f2 = (int)j;
            if (cv.size() == 2 && cr.empty()) {
                e.v1 = cv[0];
                e.v2 = cv[1];
                e.compact = true;
                e.length = content(sub(nd.gvertices[cv[1]], nd.gvertices[cv[0]]));
                nd.edges.push_back(e);
            } else if (cv.size() == 1 && cr.size() == 1) {
                e.v1 = cv[0];
                e.rec = cr[0];
                e.compact = false;
                nd.edges.push_back(e);
            } else if (cv.size() == 1 && cr.empty()) {
                continue; // shared vertex only
            } else {
                throw internal_error("unexpected facet intersection");
            }
        }

    for (Facet& f : nd.facets)
        f.cls = f.compact ? rank - 1 : 0;
    for (const EdgeRec& e : nd.edges)
        if (e.compact) {
            for (int fi : {e.f1, e.f2})
                if (!nd.facets[fi].compact && nd.facets[fi].cls < 1)
                    nd.facets[fi].cls = 1;
        }

    // every ray of Sigma must reappear as a facet normal of Gamma+
    for (const Vec& r : nd.sigma.rays) {
        bool found = false;
        for (const Facet& f : nd.facets)
            found |= f.normal == r;
        if (!found)
            throw internal_error("ray of Sigma is not a facet normal");
    }
    return nd;
}

DualFan dual_fan(const NewtonData& nd)
{
    DualFan fan;
    for (size_t i = 0; i < nd.facets.size(); ++i) {
        const Facet& f = nd.facets[i];
        DualFanRay r;
        r.l = f.normal;
        r.m = f.m;
        r.on_boundary = !f.compact;
        r.cls = f.cls;
        r.face = nd.face_of_facet((int)i);
        fan.rays.push_back(std::move(r));
    }
    for (const EdgeRec& e : nd.edges)
        fan.two_cones.emplace_back(e.f1, e.f2);
    return fan;
}

std::pair<Int, FaceData> weight(const NewtonData& nd, const Vec& l)
{
    if (!nd.sigma.contains(l))
        throw input_error("functional not in Sigma");
    Int m = nd.weight_of(l);
    FaceData fd;
    for (const DualVec& v : nd.gvertices)
        if (dot(l, v) == m)
            fd.vertices.push_back(v);
    for (const Vec& w : nd.dual_rays)
        if (dot(l, w) == 0)
            fd.rec_rays.push_back(w);
    fd.compact = fd.rec_rays.empty();
    // affine dimension of the face
    Mat dirs;
    for (size_t i = 1; i < fd.vertices.size(); ++i)
        dirs.push_back(sub(fd.vertices[i], fd.vertices[0]));
    for (const Vec& w : fd.rec_rays)
        dirs.push_back(w);
    fd.dim = (int)rank_of(dirs);
    if (fd.dim == 1 && fd.compact)
        fd.lattice_length = content(sub(fd.vertices[1], fd.vertices[0]));
    if (fd.dim == 2 && fd.compact) {
        PlaneFrame frame = plane_frame(l, fd.vertices[0]);
        std::vector<Vec> pts;
        for (const Vec& v : fd.vertices)
            pts.push_back(frame.coords(v));
        std::vector<Vec> h = hull2(pts);
        fd.area2 = area2(h);
        fd.boundary_points = boundary_lattice_points(h);
        fd.interior_points = interior_lattice_points(h);
    }
    return {m, fd};
}

namespace {

std::optional<QVec> solve_pointed(const Mat& rows, const std::vector<Int>& rhs, bool integral)
{
    if (integral) {
        Vec b(rhs.begin(), rhs.end());
        auto sol = solve_integral(rows, b);
        if (!sol)
            return std::nullopt;
        QVec q;
        for (const Int& x : *sol)
            q.emplace_back(x);
        return q;
    }
    QVec b;
    for (const Int& x : rhs)
        b.emplace_back(x);
    return solve_rational(rows, b);
}

} // namespace

std::optional<QVec> pointed_at(const NewtonData& nd, bool integral)
{
    Mat rows;
    std::vector<Int> rhs;
    for (const Vec& r : nd.sigma.rays) {
        rows.push_back(r);
        rhs.push_back(nd.weight_of(r));
    }
    return solve_pointed(rows, rhs, integral);
}

std::optional<QVec> gorenstein_pointed_at(const NewtonData& nd, bool integral)
{
    Mat rows;
    std::vector<Int> rhs;
    for (const Facet& f : nd.facets)
        if (!f.compact && f.cls == 1) {
            rows.push_back(f.normal);
            rhs.push_back(f.m + 1);
        }
    if (rows.empty())
        return std::nullopt;
    return solve_pointed(rows, rhs, integral);
}

TropCone tropicalization_cone(const NewtonData& nd)
{
    std::vector<Vec> gens;
    for (const Facet& f : nd.facets)
        if (f.cls >= 1)
            gens.push_back(f.normal);
    TropCone tc;
    tc.rays = cone_extreme_rays(gens);
    Mat m(tc.rays.begin(), tc.rays.end());
    tc.full_dim = rank_of(m) == (size_t)nd.rank;
    return tc;
}

std::vector<std::pair<Vec, Vec>> sigma_two_faces(const NewtonData& nd)
{
    std::vector<std::pair<Vec, Vec>> out;
    const std::vector<Vec>& rays = nd.sigma.rays;
    if (nd.rank == 2) {
        out.emplace_back(rays[0], rays[1]);
        return out;
    }
    // rays are in cyclic order; consecutive rays bound a 2-face
    for (size_t i = 0; i < rays.size(); ++i)
        out.emplace_back(rays[i], rays[(i + 1) % rays.size()]);
    return out;
}

std::optional<NewtonData> transverse_projection(const NewtonData& nd, const Vec& ray_a, const Vec& ray_b)
{
    if (nd.rank != 3)
        throw input_error("transverse projection needs rank 3");
    // validate that the two rays bound a 2-face of Sigma
    bool is_face = false;
    for (const Vec& h : nd.sigma.facet_normals())
        if (dot(h, ray_a) == 0 && dot(h, ray_b) == 0)
            is_face = true;
    if (!is_face)
        throw input_error("rays do not span a face of Sigma");

    // the orbit lies in the divisor iff the dual fan subdivides the face
    SublatticeFrame frame = sublattice_frame(ray_a, ray_b);
    Vec a2 = frame.to_plane(ray_a), b2 = frame.to_plane(ray_b);
    bool subdivided = false;
    for (const Facet& f : nd.facets) {
        if (f.normal == ray_a || f.normal == ray_b)
            continue;
        // f.normal strictly inside cone(ray_a, ray_b)?
        Mat span{ray_a, ray_b};
        span.push_back(f.normal);
        if (rank_of(span) != 2)
            continue;
        Vec c2 = frame.to_plane(f.normal);
        Int d = a2[0] * b2[1] - a2[1] * b2[0];
        Int x = (c2[0] * b2[1] - c2[1] * b2[0]);
        Int y = (a2[0] * c2[1] - a2[1] * c2[0]);
        if (d < 0) {
            x = -x;
            y = -y;
        }
        if (x > 0 && y > 0)
            subdivided = true;
    }
    if (!subdivided)
        return std::nullopt;

    std::vector<DualVec> psupport;
    for (const DualVec& p : nd.support)
        psupport.push_back(Vec{dot(p, frame.basis[0]), dot(p, frame.basis[1])});
    return build(2, {a2, b2}, psupport);
}

} // namespace ntoric
