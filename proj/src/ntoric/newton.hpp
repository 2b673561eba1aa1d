#pragma once

#include "ntoric/cones.hpp"
#include "ntoric/lattice.hpp"

namespace ntoric {

// A face of the Newton polyhedron. Compact faces carry their lattice data;
// noncompact faces additionally record recession directions.
struct FaceData {
    std::vector<DualVec> vertices; // lattice vertices, sorted
    std::vector<Vec> rec_rays;     // primitive recession directions
    int dim = 0;
    bool compact = true;
    Int lattice_length = 0;  // dim 1, compact: #lattice points - 1
    Int area2 = 0;           // dim 2, compact: doubled normalized area
    Int interior_points = 0; // dim 2, compact
    Int boundary_points = 0; // dim 2, compact
};

// A facet of Gamma+ together with its dual-fan ray data. Facet normals are
// exactly the rays of the dual fan.
struct Facet {
    Vec normal; // primitive, lies in Sigma
    Int m;      // min of the normal over the support
    std::vector<int> verts; // indices into NewtonData::gvertices
    std::vector<int> recs;  // indices into NewtonData::dual_rays
    bool compact = false;
    int cls = 0; // d in the (1,d) classification: dim of the compact part
};

struct EdgeRec {
    int f1, f2;   // the two adjacent facets
    int v1;       // a vertex index
    int v2 = -1;  // second vertex for compact edges
    int rec = -1; // recession ray index for unbounded edges
    bool compact = false;
    Int length = 0; // lattice length of compact edges
};

struct NewtonData {
    int rank = 0;
    Cone sigma;
    std::vector<Vec> dual_rays;     // extreme rays of Sigma^vee
    std::vector<DualVec> support;   // deduplicated, sorted
    std::vector<DualVec> gvertices; // vertices of Gamma+
    std::vector<Facet> facets;
    std::vector<EdgeRec> edges;

    Int weight_of(const Vec& l) const; // min over support, any l
    bool single_point_diagram() const; // Gamma+ = p + Sigma^vee
    std::vector<int> compact_facets() const;
    std::vector<int> facet_edges(int f) const;
    FaceData face_of_facet(int f) const;
    FaceData face_of_edge(const EdgeRec& e) const;
};

NewtonData build(int rank, const std::vector<Vec>& cone_rays, const std::vector<DualVec>& support);

// Dual fan view: rays with weights, minimal faces, boundary flags and the
// (i,d) classification; ray adjacency through shared edges of Gamma+.
struct DualFanRay {
    Vec l;
    Int m;
    bool on_boundary;
    int cls; // d of (1,d)
    FaceData face;
};

struct DualFan {
    std::vector<DualFanRay> rays;              // rays[i] belongs to facet i
    std::vector<std::pair<int, int>> two_cones; // facet pairs sharing an edge
};

DualFan dual_fan(const NewtonData& nd);

// Weight of a functional l in Sigma and its minimal face.
std::pair<Int, FaceData> weight(const NewtonData& nd, const Vec& l);

// Simultaneous solution p of l_sigma(p) = m_sigma over the rays of Sigma;
// integral or rational per flag. Empty when no solution exists.
std::optional<QVec> pointed_at(const NewtonData& nd, bool integral);

// Solution of l_sigma(p) = m_sigma + 1 over the boundary rays of class (1,1).
std::optional<QVec> gorenstein_pointed_at(const NewtonData& nd, bool integral);

struct TropCone {
    std::vector<Vec> rays; // extreme rays of the cone generated by T(f)
    bool full_dim;
};

TropCone tropicalization_cone(const NewtonData& nd);

// Generic transverse Newton data along the orbit of a 2-face of Sigma
// (given by two adjacent rays of Sigma). Empty when the orbit is not
// contained in the divisor.
std::optional<NewtonData> transverse_projection(const NewtonData& nd, const Vec& ray_a, const Vec& ray_b);

// Adjacent ray pairs of Sigma (its 2-faces), in boundary order.
std::vector<std::pair<Vec, Vec>> sigma_two_faces(const NewtonData& nd);

} // namespace ntoric
