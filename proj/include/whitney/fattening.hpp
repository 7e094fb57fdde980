#pragma once

// The fattening fat(X, sigma): one vertex per local disk, a mirror triangle per directed face
// and a quadrilateral per locally related pair, with its induced rotation system and checks.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "whitney/complex.hpp"
#include "whitney/error.hpp"
#include "whitney/graphkit.hpp"
#include "whitney/local_surfaces.hpp"
#include "whitney/rotation.hpp"
#include "whitney/topology.hpp"

namespace whitney {

enum class FatFaceKind { Original, Mirror, Rectangle };

constexpr const char* to_string(FatFaceKind k) {
    switch (k) {
        case FatFaceKind::Original: return "original";
        case FatFaceKind::Mirror: return "mirror";
        case FatFaceKind::Rectangle: return "rectangle";
    }
    return "?";
}

/// Original: face of X. Mirror: directed face of X. Rectangle: index into FatComplex::rectangles.
struct FatFaceOrigin {
    FatFaceKind kind = FatFaceKind::Original;
    int index = 0;
};

/// R = [u, w, v_{D'}, v_D] for the related pair (f, h) across the edge uw, where u is the tail
/// of f's slot, D the disk at u containing f and D' the disk at w containing h.
struct FatRectangle {
    DirectedFaceId f = 0;
    DirectedFaceId h = 0;
    EdgeId edge = 0;
    VertexId u = 0;
    VertexId w = 0;
    int disk_u = 0;
    int disk_w = 0;
    FaceId face = 0;
};

struct FatComplex {
    Complex2 base;
    RotationSystem base_rotation;
    Complex2 carrier;
    std::vector<LocalDisk> disks;             // in id order: by anchor, then smallest directed face
    std::vector<VertexId> disk_vertex;        // disk -> v_D
    std::vector<int> vertex_disk;             // carrier vertex -> disk, or -1 for original vertices
    std::vector<FaceId> mirror_face;          // directed face f of X -> h_f
    std::vector<FatRectangle> rectangles;     // sorted by (edge, f, h)
    std::vector<FatFaceOrigin> face_origin;   // carrier face -> what it stands for
};

inline FatComplex fatten(const Complex2& x, const RotationSystem& sigma) {
    if (!x.is_simplicial()) throw Error(ErrorCode::NotSimplicial, "fattening needs a simplicial complex");
    if (!is_locally_2_connected(x))
        throw Error(ErrorCode::NotLocally2Connected, "fattening needs every link graph to be 2-connected");
    if (!is_planar_rotation_system(x, sigma).planar)
        throw Error(ErrorCode::NonPlanarRotation, "fattening needs a planar rotation system");

    FatComplex fat;
    fat.base = x;
    fat.base_rotation = sigma;
    const LocalPairing pairing(x, sigma);
    fat.disks = all_disk_walks(pairing);

    std::vector<std::string> names = x.vertex_names();
    std::set<std::string> taken(names.begin(), names.end());
    fat.vertex_disk.assign(x.vertex_count(), -1);
    std::map<std::pair<VertexId, DirectedFaceId>, int> disk_of;
    for (int i = 0; i < static_cast<int>(fat.disks.size()); ++i) {
        const auto& disk = fat.disks[i];
        for (DirectedFaceId d : disk.faces) disk_of[{disk.anchor, d}] = i;
        const DirectedFaceId smallest = *std::min_element(disk.faces.begin(), disk.faces.end());
        auto name = detail::fresh_name("d:" + x.name(disk.anchor) + ":" + std::to_string(smallest), taken);
        taken.insert(name);
        fat.disk_vertex.push_back(static_cast<VertexId>(names.size()));
        fat.vertex_disk.push_back(i);
        names.push_back(std::move(name));
    }

    std::vector<std::vector<VertexId>> faces = x.faces();
    for (FaceId f = 0; f < x.face_count(); ++f) fat.face_origin.push_back({FatFaceKind::Original, f});

    for (DirectedFaceId d = 0; d < pairing.directed_face_count(); ++d) {
        std::vector<VertexId> h;
        for (VertexId v : directed_sequence(x, d)) h.push_back(fat.disk_vertex[disk_of.at({v, d})]);
        fat.mirror_face.push_back(static_cast<FaceId>(faces.size()));
        fat.face_origin.push_back({FatFaceKind::Mirror, d});
        faces.push_back(std::move(h));
    }

    for (DirectedFaceId d = 0; d < pairing.directed_face_count(); ++d) {
        for (int j = 0; j < pairing.slot_count(d); ++j) {
            const Slot s{d, j};
            const Slot p = pairing.partner(s);
            if (!(s < p)) continue;
            FatRectangle r;
            r.f = d;
            r.h = p.face;
            r.edge = pairing.edge(s);
            std::tie(r.u, r.w) = pairing.slot_vertices(s);
            r.disk_u = disk_of.at({r.u, r.f});
            r.disk_w = disk_of.at({r.w, r.h});
            fat.rectangles.push_back(r);
        }
    }
    std::sort(fat.rectangles.begin(), fat.rectangles.end(), [](const FatRectangle& a, const FatRectangle& b) {
        return std::tie(a.edge, a.f, a.h) < std::tie(b.edge, b.f, b.h);
    });
    for (int i = 0; i < static_cast<int>(fat.rectangles.size()); ++i) {
        auto& r = fat.rectangles[i];
        r.face = static_cast<FaceId>(faces.size());
        fat.face_origin.push_back({FatFaceKind::Rectangle, i});
        faces.push_back({r.u, r.w, fat.disk_vertex[r.disk_w], fat.disk_vertex[r.disk_u]});
    }

    fat.carrier = Complex2::from_indices(std::move(names), std::move(faces));
    return fat;
}

/// The rotation system sigma' on the carrier:
///   original edge u->w: sigma_{u->w} with the rectangle between each consecutive pair inserted;
///   h-edge v_D->v_D' (D at the tail of f's slot): (h_f, h_h, R);
///   vertical edge v_D->u: the rectangles met by D's walk, in walk order.
inline RotationSystem induced_fat_rotation(const FatComplex& fat) {
    const Complex2& x = fat.base;
    std::map<std::tuple<EdgeId, DirectedFaceId, DirectedFaceId>, int> rect_of;
    for (int i = 0; i < static_cast<int>(fat.rectangles.size()); ++i) {
        const auto& r = fat.rectangles[i];
        rect_of[{r.edge, std::min(r.f, r.h), std::max(r.f, r.h)}] = i;
    }
    auto rectangle = [&](EdgeId e, DirectedFaceId a, DirectedFaceId b) -> const FatRectangle& {
        return fat.rectangles[rect_of.at({e, std::min(a, b), std::max(a, b)})];
    };
    // the orientation of face f in which a comes right before b
    auto directed_with = [&](FaceId f, VertexId a, VertexId b) {
        const auto& seq = x.face(f);
        const int k = static_cast<int>(seq.size());
        return directed_face(f, seq[(x.position_in_face(f, a) + 1) % k] == b ? 0 : 1);
    };

    RawRotation raw;
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        const VertexId a = x.edge(e).a;
        const VertexId b = x.edge(e).b;
        const auto cyc = fat.base_rotation.cycle(x, a, b);
        std::vector<FaceId> out;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const FaceId next = cyc[(i + 1) % cyc.size()];
            out.push_back(cyc[i]);
            out.push_back(rectangle(e, directed_with(cyc[i], a, b), directed_with(next, b, a)).face);
        }
        raw[{a, b}] = std::move(out);
    }
    for (const auto& r : fat.rectangles) {
        raw[{fat.disk_vertex[r.disk_u], fat.disk_vertex[r.disk_w]}] = {fat.mirror_face[r.f], fat.mirror_face[r.h],
                                                                       r.face};
    }
    for (int i = 0; i < static_cast<int>(fat.disks.size()); ++i) {
        const auto& disk = fat.disks[i];
        const int s = static_cast<int>(disk.faces.size());
        std::vector<FaceId> out;
        for (int j = 0; j < s; ++j) {
            const EdgeId e = x.edge_between(disk.anchor, disk.mediators[j]);
            out.push_back(rectangle(e, disk.faces[j], disk.faces[(j + 1) % s]).face);
        }
        raw[{fat.disk_vertex[i], disk.anchor}] = std::move(out);
    }

    auto sigma = validate_rotation(fat.carrier, raw);
    if (!is_planar_rotation_system(fat.carrier, sigma).planar)
        throw Error(ErrorCode::PlanarityPostconditionFailed, "induced rotation system of the fattening is not planar");
    return sigma;
}

// ---------------------------------------------------------------------------------------
// Verification

enum class FatSurfaceTag { SFat, TF, Unclassified };

constexpr const char* to_string(FatSurfaceTag t) {
    switch (t) {
        case FatSurfaceTag::SFat: return "S_fat";
        case FatSurfaceTag::TF: return "T_f";
        case FatSurfaceTag::Unclassified: return "unclassified";
    }
    return "?";
}

/// anchor: index of the local surface of (X, sigma) for S_fat, the directed face of X for T_f.
struct FatSurfaceType {
    FatSurfaceTag tag = FatSurfaceTag::Unclassified;
    int anchor = -1;
};

/// The face sets of S_fat = {h_f : f in S} and T_f = {f, h_f^-1, R_{f,g} : g related to f},
/// each in the direction the classification expects.
inline std::map<std::vector<DirectedFaceId>, FatSurfaceType> expected_fat_surfaces(const FatComplex& fat) {
    std::map<std::vector<DirectedFaceId>, FatSurfaceType> out;
    const auto base_surfaces = local_surfaces(fat.base, fat.base_rotation);
    for (int i = 0; i < static_cast<int>(base_surfaces.size()); ++i) {
        std::vector<DirectedFaceId> set;
        for (DirectedFaceId d : base_surfaces[i].faces) set.push_back(directed_face(fat.mirror_face[d], 0));
        std::sort(set.begin(), set.end());
        out[set] = {FatSurfaceTag::SFat, i};
    }
    const int dfs = 2 * fat.base.face_count();
    std::vector<std::vector<DirectedFaceId>> t(dfs);
    for (DirectedFaceId d = 0; d < dfs; ++d) t[d] = {d, directed_face(fat.mirror_face[d], 1)};
    for (const auto& r : fat.rectangles) {
        t[r.f].push_back(directed_face(r.face, 1));
        t[r.h].push_back(directed_face(r.face, 0));
    }
    for (DirectedFaceId d = 0; d < dfs; ++d) {
        std::sort(t[d].begin(), t[d].end());
        out[t[d]] = {FatSurfaceTag::TF, d};
    }
    return out;
}

/// A wheel: one hub adjacent to every other vertex, the rest forming a single cycle of length >= 3.
inline bool is_wheel(const Multigraph& g, int hub) {
    const int n = g.vertex_count();
    if (n < 4 || !g.is_simple() || g.degree(hub) != n - 1) return false;
    Multigraph rim(0);
    std::vector<int> index(n, -1);
    for (int v = 0; v < n; ++v)
        if (v != hub) index[v] = rim.add_vertex(g.label(v));
    for (const auto& e : g.edges())
        if (e.u != hub && e.v != hub) rim.add_edge(index[e.u], index[e.v]);
    if (!is_connected(rim) || rim.edge_count() != rim.vertex_count()) return false;
    for (int v = 0; v < rim.vertex_count(); ++v)
        if (rim.degree(v) != 2) return false;
    return true;
}

struct FatSurfaceCheck {
    FatSurfaceType type;
    SurfaceStats stats;
    int directed_faces = 0;
};

struct FatReport {
    std::vector<LinkVerdict> links;
    std::vector<VertexId> bad_links;       // (a) not UniqueA or theta
    std::vector<VertexId> bad_wheels;      // (a) disk vertices whose link is not a wheel
    std::vector<EdgeId> thin_edges;        // (b) edges in fewer than 3 faces
    std::vector<FatSurfaceCheck> surfaces;
    bool disks_ok = true;                  // (c)
    bool classified = true;                // (d)
    bool base_simply_connected = false;
    bool spheres_ok = true;                // (e), vacuous unless the base is simply connected
    int s_fat = 0;
    int t_f = 0;
    int directed_faces_covered = 0;
    bool carrier_whitney = false;

    bool ok() const {
        return bad_links.empty() && bad_wheels.empty() && thin_edges.empty() && disks_ok && classified && spheres_ok;
    }
};

inline FatReport verify_fat(const FatComplex& fat, const RotationSystem& sigma_fat,
                            std::optional<Verdict> base_verdict = std::nullopt) {
    const Complex2& c = fat.carrier;
    FatReport report;
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
        auto verdict = classify_link(c, v);
        const bool good = verdict.in_F && (verdict.clause == "3-connected-planar" || verdict.clause == "theta");
        if (!good) report.bad_links.push_back(v);
        if (fat.vertex_disk[v] >= 0) {
            const auto link = link_graph(c, v);
            if (!is_wheel(link.graph, link.link_vertex.at(fat.disks[fat.vertex_disk[v]].anchor))) report.bad_wheels.push_back(v);
        }
        report.links.push_back(std::move(verdict));
    }
    for (EdgeId e = 0; e < c.edge_count(); ++e)
        if (c.faces_on_edge(e).size() < 3) report.thin_edges.push_back(e);

    if (!base_verdict) base_verdict = is_simply_connected(fat.base).verdict;
    report.base_simply_connected = *base_verdict == Verdict::Proven;

    const auto expected = expected_fat_surfaces(fat);
    const LocalPairing pairing(c, sigma_fat);
    for (const auto& s : local_surfaces(pairing)) {
        FatSurfaceCheck check;
        check.stats = surface_stats(pairing, s);
        check.directed_faces = static_cast<int>(s.faces.size());
        if (auto it = expected.find(s.faces); it != expected.end()) check.type = it->second;
        report.disks_ok = report.disks_ok && check.stats.all_disks_are_disks && check.stats.one_disk_per_vertex;
        report.classified = report.classified && check.type.tag != FatSurfaceTag::Unclassified;
        if (report.base_simply_connected) report.spheres_ok = report.spheres_ok && check.stats.euler == 2;
        report.s_fat += check.type.tag == FatSurfaceTag::SFat;
        report.t_f += check.type.tag == FatSurfaceTag::TF;
        report.directed_faces_covered += check.directed_faces;
        report.surfaces.push_back(check);
    }
    report.carrier_whitney = check_whitney(c).is_whitney;
    return report;
}

} // namespace whitney
