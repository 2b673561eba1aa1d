#include "ntoric/report.hpp"

#include "ntoric/b1.hpp"
#include "ntoric/compseq.hpp"
#include "ntoric/invariants.hpp"

#include <json.hpp>

#include <sstream>

namespace ntoric {

using ordered_json = nlohmann::ordered_json;

namespace {

Vec parse_vec(const ordered_json& j, int rank, const char* what)
{
    if (!j.is_array() || (int)j.size() != rank)
        throw input_error(std::string(what) + " must be an array of length " +
                          std::to_string(rank));
    Vec v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.emplace_back((long)x.get<long long>());
        else if (x.is_string())
            v.emplace_back(Int(x.get<std::string>()));
        else
            throw input_error(std::string(what) + " entries must be integers");
    }
    return v;
}

ordered_json vec_json(const Vec& v)
{
    ordered_json a = ordered_json::array();
    for (const Int& x : v)
        a.push_back(x.get_str());
    return a;
}

ordered_json qvec_json(const QVec& v)
{
    ordered_json a = ordered_json::array();
    for (const Rat& x : v)
        a.push_back(rat_str(x));
    return a;
}

ordered_json cycle_json(const Cycle& z)
{
    ordered_json a = ordered_json::array();
    for (const Rat& x : z)
        a.push_back(rat_str(x));
    return a;
}

ordered_json face_json(const FaceData& fd)
{
    ordered_json j;
    j["dim"] = fd.dim;
    j["compact"] = fd.compact;
    ordered_json vs = ordered_json::array();
    for (const DualVec& v : fd.vertices)
        vs.push_back(vec_json(v));
    j["vertices"] = vs;
    if (!fd.rec_rays.empty()) {
        ordered_json rs = ordered_json::array();
        for (const Vec& r : fd.rec_rays)
            rs.push_back(vec_json(r));
        j["recession_rays"] = rs;
    }
    if (fd.dim == 1 && fd.compact)
        j["lattice_length"] = fd.lattice_length.get_str();
    if (fd.dim == 2 && fd.compact) {
        j["doubled_area"] = fd.area2.get_str();
        j["interior_points"] = fd.interior_points.get_str();
        j["boundary_points"] = fd.boundary_points.get_str();
    }
    return j;
}

ordered_json fan_block(const NewtonData& nd)
{
    DualFan fan = dual_fan(nd);
    ordered_json j;
    ordered_json rays = ordered_json::array();
    for (const DualFanRay& r : fan.rays) {
        ordered_json rj;
        rj["l"] = vec_json(r.l);
        rj["m"] = r.m.get_str();
        rj["on_boundary"] = r.on_boundary;
        rj["class"] = ordered_json::array({1, r.cls});
        rj["face"] = face_json(r.face);
        rays.push_back(rj);
    }
    j["rays"] = rays;
    ordered_json tc = ordered_json::array();
    for (auto [a, b] : fan.two_cones)
        tc.push_back(ordered_json::array({a, b}));
    j["two_cones"] = tc;
    ordered_json sig = ordered_json::array();
    for (const Vec& r : nd.sigma.rays)
        sig.push_back(vec_json(r));
    j["sigma_rays"] = sig;
    return j;
}

ordered_json graph_block(const PlumbingGraph& g)
{
    ordered_json j;
    ordered_json vs = ordered_json::array();
    for (const PlumbingVertex& v : g.vertices) {
        ordered_json vj;
        vj["id"] = v.id;
        vj["kind"] = v.kind == VertexKind::Node     ? "node"
                     : v.kind == VertexKind::Bamboo ? "bamboo"
                                                    : "extended";
        vj["l"] = vec_json(v.ell);
        vj["m"] = v.m.get_str();
        if (v.kind != VertexKind::Extended) {
            vj["euler"] = v.euler.get_str();
            vj["genus"] = v.genus.get_str();
        }
        vs.push_back(vj);
    }
    j["vertices"] = vs;
    ordered_json es = ordered_json::array();
    for (auto [a, b] : g.edges)
        es.push_back(ordered_json::array({a, b}));
    j["edges"] = es;
    j["compact_count"] = g.compact_count;
    return j;
}

ordered_json pointed_block(const NewtonData& nd)
{
    ordered_json j;
    auto zi = pointed_at(nd, true);
    auto zq = pointed_at(nd, false);
    j["integral"] = zi ? qvec_json(*zi) : ordered_json(nullptr);
    j["rational"] = zq ? qvec_json(*zq) : ordered_json(nullptr);
    return j;
}

ordered_json gorenstein_block(const NewtonData& nd)
{
    ordered_json j;
    auto zi = gorenstein_pointed_at(nd, true);
    auto zq = gorenstein_pointed_at(nd, false);
    j["integral"] = zi ? qvec_json(*zi) : ordered_json(nullptr);
    j["rational"] = zq ? qvec_json(*zq) : ordered_json(nullptr);
    return j;
}

ordered_json error_block(const std::string& code, const std::string& message)
{
    ordered_json j;
    j["error"] = ordered_json{{"code", code}, {"message", message}};
    return j;
}

template <class F> ordered_json guarded(F&& f)
{
    try {
        return f();
    } catch (const input_error& e) {
        return error_block("input", e.what());
    } catch (const hypothesis_error& e) {
        return error_block("hypothesis", e.what());
    } catch (const cap_error& e) {
        return error_block("cap", e.what());
    } catch (const internal_error& e) {
        return error_block("internal", e.what());
    }
}

NewtonData build_spec(const InputSpec& spec)
{
    return build(spec.rank, spec.cone, spec.support);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json seq_block(const InputSpec& spec, const NewtonData& nd)
{
    PgSequenceResult res = pg_from_sequence(nd, spec.root, spec.delta_shell_cap);
    const DiagonalRun& run = res.run;

    ordered_json j;
    j["bound"] = run.bound.get_str();
    j["kbar"] = run.kbar;
    j["kbar_prime"] = run.kbar_prime;
    ordered_json steps = ordered_json::array();
    for (const SequenceStep& st : run.steps) {
        ordered_json sj;
        sj["vertex"] = st.vertex;
        sj["d"] = rat_str(st.d);
        sj["contribution"] = st.contribution.get_str();
        sj["diagonal"] = st.diagonal;
        steps.push_back(sj);
    }
    j["steps"] = steps;
    j["start"] = cycle_json(run.start);
    j["end"] = cycle_json(run.end);
    j["preconditions_met"] = res.preconditions_met;
    ordered_json fails = ordered_json::array();
    for (const std::string& f : res.failures)
        fails.push_back(f);
    j["unmet_preconditions"] = fails;
    ordered_json log = ordered_json::array();
    for (const std::string& l : res.reduction_log)
        log.push_back(l);
    j["reduction_log"] = log;
    return j;
}

ordered_json invariants_block(const InputSpec& spec, const NewtonData& nd)
{
    ordered_json j;
    if (nd.rank == 2) {
        CurveReport rep = curve_invariants(nd);
        j["branches"] = rep.branches.get_str();
        j["smooth"] = rep.smooth;
        j["multiplicity"] =
            rep.multiplicity ? ordered_json(rep.multiplicity->get_str()) : ordered_json(nullptr);
        j["delta"] = rep.delta ? ordered_json(rep.delta->get_str()) : ordered_json(nullptr);
        j["pg_count"] = pg_count(nd).get_str();
        return j;
    }
    IsolatedReport iso = isolated_test(nd);
    j["isolated"] = iso.isolated;
    ordered_json faces = ordered_json::array();
    for (const FaceDiagnostic& fd : iso.faces) {
        ordered_json fj;
        fj["ray_a"] = vec_json(fd.ray_a);
        fj["ray_b"] = vec_json(fd.ray_b);
        fj["subdividing_rays"] = fd.subdividing_rays;
        fj["pass"] = fd.pass;
        if (!fd.reason.empty())
            fj["reason"] = fd.reason;
        faces.push_back(fj);
    }
    j["isolated_faces"] = faces;
    DeltaResult d = surface_delta(nd, spec.delta_shell_cap);
    j["delta"] = d.finite ? ordered_json(d.value.get_str()) : ordered_json("infinite");
    j["normal"] = d.finite && d.value == 0;
    j["pg_count"] = pg_count(nd).get_str();
    return j;
}

} // namespace

InputSpec parse_input(const std::string& json_text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed input document: ") + e.what());
    }
    if (!j.is_object())
        throw input_error("input document must be a JSON object");
    InputSpec spec;
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw input_error("missing integer field \"rank\"");
    spec.rank = j["rank"].get<int>();
    if (spec.rank < 2 || spec.rank > 3)
        throw input_error("rank must be 2 or 3");
    if (!j.contains("cone") || !j["cone"].is_array() || j["cone"].empty())
        throw input_error("missing nonempty array field \"cone\"");
    for (const auto& r : j["cone"])
        spec.cone.push_back(parse_vec(r, spec.rank, "cone ray"));
    if (!j.contains("support") || !j["support"].is_array() || j["support"].empty())
        throw input_error("missing nonempty array field \"support\"");
    for (const auto& p : j["support"])
        spec.support.push_back(parse_vec(p, spec.rank, "support vector"));
    if (j.contains("options")) {
        const auto& o = j["options"];
        if (!o.is_object())
            throw input_error("\"options\" must be an object");
        if (o.contains("delta_shell_cap"))
            spec.delta_shell_cap = o["delta_shell_cap"].get<int>();
        if (o.contains("root"))
            spec.root = o["root"].get<int>();
    }
    for (const auto& [key, val] : j.items()) {
        (void)val;
        if (key != "rank" && key != "cone" && key != "support" && key != "options")
            throw input_error("unknown field \"" + key + "\"");
    }
    // surface validation happens in build(); reject obvious problems here
    build(spec.rank, spec.cone, spec.support);
    return spec;
}

std::string serialize_input(const InputSpec& spec)
{
    ordered_json j;
    j["rank"] = spec.rank;
    ordered_json cone = ordered_json::array();
    for (const Vec& r : spec.cone) {
        ordered_json rr = ordered_json::array();
        for (const Int& x : r)
            rr.push_back((long)x.get_si());
        cone.push_back(rr);
    }
    j["cone"] = cone;
    ordered_json sup = ordered_json::array();
    for (const DualVec& p : spec.support) {
        ordered_json pp = ordered_json::array();
        for (const Int& x : p)
            pp.push_back((long)x.get_si());
        sup.push_back(pp);
    }
    j["support"] = sup;
    ordered_json opts;
    opts["delta_shell_cap"] = spec.delta_shell_cap;
    opts["root"] = spec.root;
    j["options"] = opts;
    return dump(j);
}

std::string cmd_fan(const InputSpec& spec)
{
    NewtonData nd = build_spec(spec);
    return dump(fan_block(nd));
}

std::string cmd_graph(const InputSpec& spec)
{
    NewtonData nd = build_spec(spec);
    PlumbingGraph g = build_graph(nd);
    ordered_json j = graph_block(g);
    j["negative_definite"] = graph_negative_definite(g);
    if (j["negative_definite"].get<bool>()) {
        Mat m = intersection_form(g);
        j["intersection_determinant"] = det(m).get_str();
        j["canonical_cycle"] = guarded([&] {
            ordered_json c;
            c["adjunction"] = cycle_json(canonical_cycle_adjunction(g));
            c["formula"] = cycle_json(canonical_cycle_formula(g));
            return c;
        });
    }
    j["qhs"] = guarded([&] { return ordered_json(is_qhs_link(g, nd)); });
    j["normal_form"] = guarded([&] { return graph_block(graph_normal_form(g)); });
    return dump(j);
}

std::string cmd_invariants(const InputSpec& spec)
{
    NewtonData nd = build_spec(spec);
    return dump(invariants_block(spec, nd));
}

std::string cmd_seq(const InputSpec& spec)
{
    NewtonData nd = build_spec(spec);
    if (nd.rank != 3)
        throw hypothesis_error("the sequence pipeline needs rank 3");
    return dump(seq_block(spec, nd));
}

std::string cmd_reduce(const InputSpec& spec)
{
    NewtonData nd = build_spec(spec);
    if (nd.rank != 3)
        throw hypothesis_error("reduction needs rank 3");
    ReduceResult rr = reduce_to_nonnegative_zk(nd, spec.delta_shell_cap);
    ordered_json j;
    j["changed"] = rr.changed;
    ordered_json log = ordered_json::array();
    for (const std::string& l : rr.log)
        log.push_back(l);
    j["log"] = log;
    ordered_json sup = ordered_json::array();
    for (const DualVec& p : rr.nd.support)
        sup.push_back(vec_json(p));
    j["support"] = sup;
    ordered_json rays = ordered_json::array();
    for (const Vec& r : rr.nd.sigma.rays)
        rays.push_back(vec_json(r));
    j["sigma_rays"] = rays;
    return dump(j);
}

std::string cmd_report(const InputSpec& spec)
{
    NewtonData nd = build_spec(spec);
    ordered_json j;
    j["input"] = ordered_json::parse(serialize_input(spec));
    j["fan"] = guarded([&] { return fan_block(nd); });
    j["pointed"] = guarded([&] { return pointed_block(nd); });
    j["gorenstein_pointed"] = guarded([&] { return gorenstein_block(nd); });
    j["invariants"] = guarded([&] { return invariants_block(spec, nd); });
    if (nd.rank == 3) {
        j["graph"] = guarded([&] { return ordered_json::parse(cmd_graph(spec)); });
        j["tropicalization"] = guarded([&] {
            TropCone tc = tropicalization_cone(nd);
            ordered_json t;
            ordered_json rays = ordered_json::array();
            for (const Vec& r : tc.rays)
                rays.push_back(vec_json(r));
            t["rays"] = rays;
            t["full_dim"] = tc.full_dim;
            return t;
        });
        j["sequence"] = guarded([&] { return seq_block(spec, nd); });
    }
    return dump(j);
}

std::string export_dot(const PlumbingGraph& g)
{
    std::ostringstream os;
    os << "graph plumbing {\n";
    os << "  node [shape=circle];\n";
    for (const PlumbingVertex& v : g.vertices) {
        if (v.kind == VertexKind::Extended) {
            os << "  v" << v.id << " [label=\"" << to_string(v.ell)
               << "\", shape=box, style=dashed];\n";
        } else {
            os << "  v" << v.id << " [label=\"" << v.euler.get_str();
            if (v.genus != 0)
                os << " [" << v.genus.get_str() << "]";
            os << "\"];\n";
        }
    }
    for (auto [a, b] : g.edges)
        os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string cmd_dot(const InputSpec& spec)
{
    NewtonData nd = build_spec(spec);
    if (nd.rank != 3)
        throw hypothesis_error("the plumbing graph needs rank 3");
    return export_dot(build_graph(nd));
}

} // namespace ntoric
