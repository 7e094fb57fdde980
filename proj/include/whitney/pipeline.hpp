#pragma once

// JSON reports for every stage and the full check pipeline.

#include <optional>
#include <string>
#include <vector>

#include "whitney/complex.hpp"
#include "whitney/cx2.hpp"
#include "whitney/fattening.hpp"
#include "whitney/local_surfaces.hpp"
#include "whitney/rotation.hpp"
#include "whitney/topology.hpp"

namespace whitney {

inline ojson summary_to_json(const Complex2& x) {
    ojson j;
    j["vertices"] = x.vertex_count();
    j["edges"] = x.edge_count();
    j["faces"] = x.face_count();
    j["euler_characteristic"] = euler_characteristic(x);
    j["simplicial"] = x.is_simplicial();
    j["connected"] = x.is_connected();
    return j;
}

inline ojson whitney_to_json(const Complex2& x, const WhitneyReport& r) {
    ojson j;
    j["is_whitney"] = r.is_whitney;
    ojson links = ojson::array();
    for (const auto& l : r.links) {
        ojson e;
        e["vertex"] = x.name(l.vertex);
        e["in_F"] = l.in_F;
        e["clause"] = l.clause;
        e["embedding"] = to_string(l.tag);
        links.push_back(std::move(e));
    }
    j["links"] = std::move(links);
    ojson g;
    g["vertices"] = r.g_vertices;
    g["edges"] = r.g_edges;
    g["components"] = r.g_components;
    g["connected"] = r.g_connected;
    j["G"] = std::move(g);
    ojson witnesses = ojson::array();
    for (VertexId v : r.failing_links()) witnesses.push_back("link of " + x.name(v) + ": " + r.links[v].clause);
    if (!r.g_connected) witnesses.push_back("G(X) has " + std::to_string(r.g_components) + " components");
    j["witnesses"] = std::move(witnesses);
    return j;
}

inline ojson homology_to_json(const SimpleConnectivity& s) {
    ojson j;
    j["h1"] = s.h1.to_string();
    j["h1_rank"] = s.h1.rank;
    j["h1_torsion"] = s.h1.torsion;
    j["verdict"] = to_string(s.verdict);
    j["generators"] = s.generators;
    j["remaining_generators"] = s.remaining_generators;
    j["tietze_moves"] = s.moves;
    return j;
}

inline ojson enumeration_to_json(const Complex2& x, const Enumeration& e) {
    ojson j;
    j["method"] = to_string(e.method);
    j["count"] = e.systems.size();
    j["planar_total"] = e.planar_total;
    if (e.method == EnumerationMethod::Oracle) j["nodes_visited"] = e.nodes_visited;
    if (!e.witness.empty()) j["witness"] = e.witness;
    ojson systems = ojson::array();
    for (const auto& s : e.systems) systems.push_back(rotation_to_json(x, s));
    j["systems"] = std::move(systems);
    return j;
}

inline ojson directed_face_to_json(const Complex2& x, DirectedFaceId d) {
    ojson seq = ojson::array();
    for (VertexId v : directed_sequence(x, d)) seq.push_back(x.name(v));
    return seq;
}

inline ojson stats_to_json(const SurfaceStats& st) {
    ojson j;
    j["V"] = st.disks;
    j["E"] = st.pairs;
    j["F"] = st.faces;
    j["chi"] = st.euler;
    j["one_disk_per_vertex"] = st.one_disk_per_vertex;
    j["all_disks_are_disks"] = st.all_disks_are_disks;
    j["sphere"] = st.sphere;
    return j;
}

inline ojson surfaces_to_json(const Complex2& x, const RotationSystem& sigma) {
    const LocalPairing pairing(x, sigma);
    ojson out = ojson::array();
    for (const auto& s : local_surfaces(pairing)) {
        ojson j;
        ojson faces = ojson::array();
        for (DirectedFaceId d : s.faces) faces.push_back(directed_face_to_json(x, d));
        j["directed_faces"] = s.faces;
        j["faces"] = std::move(faces);
        j["stats"] = stats_to_json(surface_stats(pairing, s));
        out.push_back(std::move(j));
    }
    return out;
}

inline ojson fat_report_to_json(const FatComplex& fat, const FatReport& r) {
    const Complex2& c = fat.carrier;
    ojson j;
    j["counts"] = {{"vertices", c.vertex_count()}, {"edges", c.edge_count()}, {"faces", c.face_count()}};
    j["disks"] = fat.disks.size();
    j["rectangles"] = fat.rectangles.size();
    auto names = [&](const std::vector<VertexId>& vs) {
        ojson a = ojson::array();
        for (VertexId v : vs) a.push_back(c.name(v));
        return a;
    };
    j["links_unique"] = r.bad_links.empty();
    j["bad_links"] = names(r.bad_links);
    j["disk_links_are_wheels"] = r.bad_wheels.empty();
    j["bad_wheels"] = names(r.bad_wheels);
    ojson thin = ojson::array();
    for (EdgeId e : r.thin_edges) thin.push_back(c.name(c.edge(e).a) + "-" + c.name(c.edge(e).b));
    j["edges_in_three_faces"] = r.thin_edges.empty();
    j["thin_edges"] = std::move(thin);
    j["disks_ok"] = r.disks_ok;
    j["classified"] = r.classified;
    j["base_simply_connected"] = r.base_simply_connected;
    j["spheres_ok"] = r.spheres_ok;
    j["census"] = {{"S_fat", r.s_fat}, {"T_f", r.t_f}, {"directed_faces", r.directed_faces_covered}};
    ojson surfaces = ojson::array();
    for (const auto& s : r.surfaces) {
        ojson e;
        e["type"] = to_string(s.type.tag);
        e["anchor"] = s.type.anchor;
        e["stats"] = stats_to_json(s.stats);
        surfaces.push_back(std::move(e));
    }
    j["surfaces"] = std::move(surfaces);
    j["carrier_whitney"] = r.carrier_whitney;
    j["ok"] = r.ok();
    return j;
}

/// Sidecar mapping every new cell of the fattening back to what it came from in X.
inline ojson provenance_to_json(const FatComplex& fat) {
    const Complex2& x = fat.base;
    const Complex2& c = fat.carrier;
    ojson j;
    j["format"] = "cx2-provenance";
    j["version"] = kCx2Version;
    ojson disks = ojson::array();
    for (std::size_t i = 0; i < fat.disks.size(); ++i) {
        const auto& d = fat.disks[i];
        ojson e;
        e["vertex"] = c.name(fat.disk_vertex[i]);
        e["anchor"] = x.name(d.anchor);
        e["directed_faces"] = d.faces;
        ojson med = ojson::array();
        for (VertexId m : d.mediators) med.push_back(x.name(m));
        e["mediators"] = std::move(med);
        disks.push_back(std::move(e));
    }
    j["disk_vertices"] = std::move(disks);
    ojson mirrors = ojson::array();
    for (std::size_t d = 0; d < fat.mirror_face.size(); ++d)
        mirrors.push_back({{"face", fat.mirror_face[d]}, {"directed_face", d}});
    j["mirror_faces"] = std::move(mirrors);
    ojson rects = ojson::array();
    for (const auto& r : fat.rectangles) {
        ojson e;
        e["face"] = r.face;
        e["f"] = r.f;
        e["h"] = r.h;
        e["edge"] = {x.name(r.u), x.name(r.w)};
        e["disks"] = {c.name(fat.disk_vertex[r.disk_u]), c.name(fat.disk_vertex[r.disk_w])};
        rects.push_back(std::move(e));
    }
    j["rectangles"] = std::move(rects);
    return j;
}

struct CheckOptions {
    bool oracle = false;
    int max_tietze = kDefaultTietzeBudget;
    std::size_t oracle_budget = kDefaultOracleBudget;
};

struct CheckResult {
    ojson report;
    int exit_code = 2;
};

/// Oracle for non-Whitney input or on request; propagation otherwise.
inline Enumeration enumerate_for(const Complex2& x, bool whitney, const CheckOptions& opts) {
    const auto method = (opts.oracle || !whitney) ? EnumerationMethod::Oracle : EnumerationMethod::Propagation;
    return enumerate_planar_rotation_systems(x, method, opts.oracle_budget);
}

/// Whitney recognition, simple connectivity, rotation systems, local surfaces and fattening.
/// Exit code 0 iff Whitney, simply connected (Proven) and exactly one rotation system.
inline CheckResult run_check(const Cx2Document& doc, const CheckOptions& opts = {}) {
    const Complex2& x = doc.complex;
    CheckResult out;
    ojson& rep = out.report;
    rep["complex"] = summary_to_json(x);

    const auto whitney = check_whitney(x);
    rep["whitney"] = whitney_to_json(x, whitney);

    std::optional<SimpleConnectivity> sc;
    if (x.is_connected()) {
        sc = is_simply_connected(x, opts.max_tietze);
        rep["simple_connectivity"] = homology_to_json(*sc);
    } else {
        rep["simple_connectivity"] = {{"verdict", to_string(Verdict::Unknown)}, {"reason", "complex is disconnected"}};
    }

    std::optional<Enumeration> en;
    try {
        en = enumerate_for(x, whitney.is_whitney, opts);
        rep["rotation_systems"] = enumeration_to_json(x, *en);
    } catch (const Error& e) {
        rep["rotation_systems"] = {{"count", nullptr}, {"error", e.what()}};
    }

    std::optional<RotationSystem> sigma = doc.rotation;
    if (!sigma && en && !en->systems.empty()) sigma = en->systems.front();
    if (sigma) {
        rep["surfaces"] = {{"rotation", doc.rotation ? "file" : "enumerated"}, {"list", surfaces_to_json(x, *sigma)}};
    } else {
        rep["surfaces"] = {{"status", "skipped"}, {"reason", "no planar rotation system"}};
    }

    std::string blocker;
    if (!x.is_simplicial()) blocker = "complex is not simplicial";
    else if (!whitney.is_whitney) blocker = "complex is not Whitney";
    else if (!sigma) blocker = "no planar rotation system";
    if (blocker.empty()) {
        try {
            const auto fat = fatten(x, *sigma);
            const auto sigma_fat = induced_fat_rotation(fat);
            const auto base = sc ? std::optional<Verdict>(sc->verdict) : std::nullopt;
            auto fj = fat_report_to_json(fat, verify_fat(fat, sigma_fat, base));
            fj["status"] = "verified";
            rep["fattening"] = std::move(fj);
        } catch (const Error& e) {
            rep["fattening"] = {{"status", "failed"}, {"reason", e.what()}};
        }
    } else {
        rep["fattening"] = {{"status", "skipped"}, {"reason", blocker}};
    }

    const bool ok = whitney.is_whitney && sc && sc->verdict == Verdict::Proven && en && en->systems.size() == 1;
    out.exit_code = ok ? 0 : 2;
    rep["exit_status"] = out.exit_code;
    return out;
}

} // namespace whitney
