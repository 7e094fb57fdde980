#pragma once

// Local relatedness of directed faces, local surfaces, local disks and surface statistics.

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "whitney/complex.hpp"
#include "whitney/disjoint_set.hpp"
#include "whitney/rotation.hpp"

namespace whitney {

/// Directed face ids: 2f for face f in its stored cyclic direction, 2f+1 for the reverse.
using DirectedFaceId = int;

constexpr DirectedFaceId directed_face(FaceId f, int orientation) { return 2 * f + orientation; }
constexpr FaceId face_of(DirectedFaceId d) { return d / 2; }
constexpr int orientation_of(DirectedFaceId d) { return d % 2; }
constexpr DirectedFaceId reverse_directed(DirectedFaceId d) { return d ^ 1; }

/// Vertex sequence of a directed face: <x1..xk> or <xk..x1>.
inline std::vector<VertexId> directed_sequence(const Complex2& x, DirectedFaceId d) {
    auto seq = x.face(face_of(d));
    if (orientation_of(d) == 1) std::reverse(seq.begin(), seq.end());
    return seq;
}

/// Boundary slot `index` of a directed face: its vertices index and index+1.
struct Slot {
    DirectedFaceId face = 0;
    int index = 0;

    auto operator<=>(const Slot&) const = default;
};

/// For every slot (u, v) of a directed face f, the unique partner f' with v right before u and
/// f right before f' at u->v. The partner map is an involution on slots.
class LocalPairing {
public:
    LocalPairing(const Complex2& x, const RotationSystem& sigma) : x_(&x) {
        const int dfs = 2 * x.face_count();
        offset_.resize(dfs + 1, 0);
        for (DirectedFaceId d = 0; d < dfs; ++d)
            offset_[d + 1] = offset_[d] + static_cast<int>(x.face(face_of(d)).size());
        partner_.resize(offset_.back());
        edge_.resize(offset_.back());
        for (DirectedFaceId d = 0; d < dfs; ++d) {
            const auto seq = directed_sequence(x, d);
            const int k = static_cast<int>(seq.size());
            for (int j = 0; j < k; ++j) {
                const VertexId a = seq[j];
                const VertexId b = seq[(j + 1) % k];
                const FaceId g = sigma.successor(x, a, b, face_of(d));
                const auto& gs = x.face(g);
                const int kg = static_cast<int>(gs.size());
                const int pb = x.position_in_face(g, b);
                // orientation of g in which b comes right before a
                const int orient = (gs[(pb + 1) % kg] == a) ? 0 : 1;
                const DirectedFaceId gd = directed_face(g, orient);
                const auto gseq = directed_sequence(x, gd);
                const int slot = static_cast<int>(std::find(gseq.begin(), gseq.end(), b) - gseq.begin());
                partner_[offset_[d] + j] = {gd, slot};
                edge_[offset_[d] + j] = x.edge_between(a, b);
            }
        }
    }

    const Complex2& complex() const { return *x_; }
    int directed_face_count() const { return static_cast<int>(offset_.size()) - 1; }
    int slot_count(DirectedFaceId d) const { return offset_[d + 1] - offset_[d]; }

    Slot partner(Slot s) const { return partner_[offset_[s.face] + s.index]; }
    EdgeId edge(Slot s) const { return edge_[offset_[s.face] + s.index]; }

    std::pair<VertexId, VertexId> slot_vertices(Slot s) const {
        const auto seq = directed_sequence(*x_, s.face);
        return {seq[s.index], seq[(s.index + 1) % seq.size()]};
    }

    /// The slot of d whose tail is v, or -1 if v is not on d.
    int out_slot(DirectedFaceId d, VertexId v) const {
        const auto seq = directed_sequence(*x_, d);
        auto it = std::find(seq.begin(), seq.end(), v);
        return it == seq.end() ? -1 : static_cast<int>(it - seq.begin());
    }

private:
    const Complex2* x_;
    std::vector<int> offset_;
    std::vector<Slot> partner_;
    std::vector<EdgeId> edge_;
};

struct RelatedPair {
    DirectedFaceId first = 0;
    DirectedFaceId second = 0;
    EdgeId edge = 0;
};

/// An equivalence class of directed faces under local relatedness.
struct LocalSurface {
    std::vector<DirectedFaceId> faces;  // sorted
    std::vector<RelatedPair> pairs;     // each unordered related pair once

    bool contains(DirectedFaceId d) const { return std::binary_search(faces.begin(), faces.end(), d); }
};

/// Classes ordered by their smallest directed face.
inline std::vector<LocalSurface> local_surfaces(const LocalPairing& pairing) {
    const int dfs = pairing.directed_face_count();
    DisjointSet ds(dfs);
    for (DirectedFaceId d = 0; d < dfs; ++d)
        for (int j = 0; j < pairing.slot_count(d); ++j) ds.merge(d, pairing.partner({d, j}).face);

    std::map<int, int> class_of_root;
    std::vector<LocalSurface> out;
    for (DirectedFaceId d = 0; d < dfs; ++d) {
        auto [it, fresh] = class_of_root.emplace(ds.find(d), static_cast<int>(out.size()));
        if (fresh) out.emplace_back();
        out[it->second].faces.push_back(d);
    }
    for (DirectedFaceId d = 0; d < dfs; ++d) {
        for (int j = 0; j < pairing.slot_count(d); ++j) {
            const Slot s{d, j};
            const Slot p = pairing.partner(s);
            if (s < p) out[class_of_root.at(ds.find(d))].pairs.push_back({d, p.face, pairing.edge(s)});
        }
    }
    return out;
}

inline std::vector<LocalSurface> local_surfaces(const Complex2& x, const RotationSystem& sigma) {
    return local_surfaces(LocalPairing(x, sigma));
}

// ---------------------------------------------------------------------------------------
// Local disks

/// A closed walk f1..fs of directed faces around `anchor`; f_i and f_{i+1} are related via
/// the edge anchor-mediators[i].
struct LocalDisk {
    VertexId anchor = 0;
    std::vector<DirectedFaceId> faces;
    std::vector<VertexId> mediators;
};

/// Walks partitioning the directed faces at w. From f, take u right after w in f and move to
/// the partner across slot (w, u).
inline std::vector<LocalDisk> disk_walks_at(const LocalPairing& pairing, VertexId w) {
    const Complex2& x = pairing.complex();
    std::vector<DirectedFaceId> at_w;
    for (FaceId f : x.faces_at(w)) {
        at_w.push_back(directed_face(f, 0));
        at_w.push_back(directed_face(f, 1));
    }
    std::sort(at_w.begin(), at_w.end());
    std::set<DirectedFaceId> visited;
    std::vector<LocalDisk> out;
    for (DirectedFaceId start : at_w) {
        if (visited.count(start)) continue;
        LocalDisk disk;
        disk.anchor = w;
        DirectedFaceId cur = start;
        // The step is a permutation of the directed faces at w, so the walk returns to start.
        while (visited.insert(cur).second) {
            const Slot s{cur, pairing.out_slot(cur, w)};
            disk.faces.push_back(cur);
            disk.mediators.push_back(pairing.slot_vertices(s).second);
            cur = pairing.partner(s).face;
        }
        out.push_back(std::move(disk));
    }
    return out;
}

inline std::vector<LocalDisk> disk_walks_at(const Complex2& x, const RotationSystem& sigma, VertexId w) {
    return disk_walks_at(LocalPairing(x, sigma), w);
}

/// Pairwise distinct mediating vertices and pairwise distinct faces.
inline bool is_disk(const LocalDisk& d) {
    auto m = d.mediators;
    std::sort(m.begin(), m.end());
    auto f = d.faces;
    std::sort(f.begin(), f.end());
    return std::adjacent_find(m.begin(), m.end()) == m.end() && std::adjacent_find(f.begin(), f.end()) == f.end();
}

/// Every disk walk of the complex, grouped by anchor vertex in vertex order.
inline std::vector<LocalDisk> all_disk_walks(const LocalPairing& pairing) {
    std::vector<LocalDisk> out;
    for (VertexId w = 0; w < pairing.complex().vertex_count(); ++w)
        for (auto& d : disk_walks_at(pairing, w)) out.push_back(std::move(d));
    return out;
}

// ---------------------------------------------------------------------------------------
// Surface statistics

struct SurfaceStats {
    int disks = 0;     // V_S
    int pairs = 0;     // E_S
    int faces = 0;     // F_S
    int euler = 0;     // V_S - E_S + F_S
    bool all_disks_are_disks = true;
    bool one_disk_per_vertex = true;
    bool sphere = false;
};

inline SurfaceStats surface_stats(const LocalPairing& pairing, const LocalSurface& s) {
    const Complex2& x = pairing.complex();
    SurfaceStats st;
    st.faces = static_cast<int>(s.faces.size());
    int slots = 0;
    std::set<VertexId> vertices;
    for (DirectedFaceId d : s.faces) {
        slots += pairing.slot_count(d);
        for (VertexId v : x.face(face_of(d))) vertices.insert(v);
    }
    st.pairs = slots / 2;
    for (VertexId v : vertices) {
        int here = 0;
        for (const auto& disk : disk_walks_at(pairing, v)) {
            if (!s.contains(disk.faces.front())) continue;
            ++here;
            st.all_disks_are_disks = st.all_disks_are_disks && is_disk(disk);
        }
        st.disks += here;
        st.one_disk_per_vertex = st.one_disk_per_vertex && here == 1;
    }
    st.euler = st.disks - st.pairs + st.faces;
    st.sphere = st.all_disks_are_disks && st.one_disk_per_vertex && st.euler == 2;
    return st;
}

inline SurfaceStats surface_stats(const Complex2& x, const RotationSystem& sigma, const LocalSurface& s) {
    return surface_stats(LocalPairing(x, sigma), s);
}

} // namespace whitney
