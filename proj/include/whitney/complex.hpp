#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "whitney/error.hpp"
#include "whitney/graphkit.hpp"
#include "whitney/multigraph.hpp"

namespace whitney {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

/// Undirected 1-cell with a < b (vertex indices).
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    auto operator<=>(const Edge&) const = default;
};

/// A finite regular 2-complex. Faces are simple cyclic vertex sequences; the 1-skeleton is
/// derived from consecutive pairs and is always a simple graph. Immutable once built.
class Complex2 {
public:
    Complex2() = default;

    /// Validates raw named input. Vertices keep their declared order; faces keep input order.
    static Complex2 build(std::vector<std::string> vertex_names,
                          const std::vector<std::vector<std::string>>& faces) {
        std::unordered_map<std::string, VertexId> index;
        for (std::size_t i = 0; i < vertex_names.size(); ++i) {
            if (!index.emplace(vertex_names[i], static_cast<VertexId>(i)).second)
                throw Error(ErrorCode::DuplicateVertex, "vertex '" + vertex_names[i] + "' declared twice");
        }
        std::vector<std::vector<VertexId>> ids;
        ids.reserve(faces.size());
        for (const auto& f : faces) {
            std::vector<VertexId> row;
            row.reserve(f.size());
            for (const auto& name : f) {
                auto it = index.find(name);
                if (it == index.end()) throw Error(ErrorCode::UnknownVertex, "face references '" + name + "'");
                row.push_back(it->second);
            }
            ids.push_back(std::move(row));
        }
        return from_indices(std::move(vertex_names), std::move(ids));
    }

    static Complex2 from_indices(std::vector<std::string> vertex_names, std::vector<std::vector<VertexId>> faces) {
        Complex2 x;
        x.names_ = std::move(vertex_names);
        x.faces_ = std::move(faces);
        x.derive();
        return x;
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::string& name(VertexId v) const { return names_[v]; }
    const std::vector<std::string>& vertex_names() const { return names_; }

    std::optional<VertexId> find_vertex(std::string_view name) const {
        for (VertexId v = 0; v < vertex_count(); ++v)
            if (names_[v] == name) return v;
        return std::nullopt;
    }

    const std::vector<std::vector<VertexId>>& faces() const { return faces_; }
    const std::vector<VertexId>& face(FaceId f) const { return faces_[f]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
        const Edge key{std::min(u, v), std::max(u, v)};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key) return std::nullopt;
        return static_cast<EdgeId>(it - edges_.begin());
    }

    EdgeId edge_between(VertexId u, VertexId v) const {
        auto e = find_edge(u, v);
        if (!e) throw Error(ErrorCode::UnknownEdge, names_[u] + "-" + names_[v]);
        return *e;
    }

    /// Faces containing edge e, increasing.
    std::span<const FaceId> faces_on_edge(EdgeId e) const { return edge_faces_[e]; }
    /// Faces containing v, increasing.
    std::span<const FaceId> faces_at(VertexId v) const { return vertex_faces_[v]; }
    /// Neighbours of v in the 1-skeleton, increasing.
    std::span<const VertexId> neighbours(VertexId v) const { return neighbours_[v]; }

    /// Position of v in face f, or -1.
    int position_in_face(FaceId f, VertexId v) const {
        const auto& seq = faces_[f];
        auto it = std::find(seq.begin(), seq.end(), v);
        return it == seq.end() ? -1 : static_cast<int>(it - seq.begin());
    }

    /// All faces are triangles and no two faces share their vertex set.
    bool is_simplicial() const {
        std::set<std::vector<VertexId>> seen;
        for (const auto& f : faces_) {
            if (f.size() != 3) return false;
            auto key = f;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) return false;
        }
        return true;
    }

    bool is_connected() const {
        DisjointSet ds(vertex_count());
        for (const auto& e : edges_) ds.merge(e.a, e.b);
        return ds.set_count() <= 1;
    }

private:
    void derive() {
        const int n = vertex_count();
        std::vector<char> used(n, 0);
        std::set<Edge> edge_set;
        for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
            const auto& f = faces_[fi];
            const std::string tag = "face " + std::to_string(fi);
            if (f.size() < 3) throw Error(ErrorCode::FaceTooShort, tag + " has fewer than 3 vertices");
            for (VertexId v : f)
                if (v < 0 || v >= n) throw Error(ErrorCode::UnknownVertex, tag + " references an unknown vertex");
            for (std::size_t i = 0; i < f.size(); ++i)
                if (f[i] == f[(i + 1) % f.size()])
                    throw Error(ErrorCode::LoopEdge, tag + " repeats " + names_[f[i]] + " consecutively");
            auto sorted = f;
            std::sort(sorted.begin(), sorted.end());
            if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
                throw Error(ErrorCode::RepeatedVertexInFace, tag + " visits " + names_[*dup] + " twice");
            for (std::size_t i = 0; i < f.size(); ++i) {
                const VertexId u = f[i];
                const VertexId v = f[(i + 1) % f.size()];
                edge_set.insert({std::min(u, v), std::max(u, v)});
                used[u] = 1;
            }
        }
        for (VertexId v = 0; v < n; ++v)
            if (!used[v]) throw Error(ErrorCode::IsolatedVertex, "vertex '" + names_[v] + "' lies in no face");

        edges_.assign(edge_set.begin(), edge_set.end());
        edge_faces_.assign(edges_.size(), {});
        vertex_faces_.assign(n, {});
        neighbours_.assign(n, {});
        for (FaceId fi = 0; fi < face_count(); ++fi) {
            const auto& f = faces_[fi];
            for (std::size_t i = 0; i < f.size(); ++i) {
                vertex_faces_[f[i]].push_back(fi);
                edge_faces_[*find_edge(f[i], f[(i + 1) % f.size()])].push_back(fi);
            }
        }
        for (const auto& e : edges_) {
            neighbours_[e.a].push_back(e.b);
            neighbours_[e.b].push_back(e.a);
        }
        for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
    }

    std::vector<std::string> names_;
    std::vector<std::vector<VertexId>> faces_;
    std::vector<Edge> edges_;
    std::vector<std::vector<FaceId>> edge_faces_;
    std::vector<std::vector<FaceId>> vertex_faces_;
    std::vector<std::vector<VertexId>> neighbours_;
};

inline int euler_characteristic(const Complex2& x) {
    return x.vertex_count() - x.edge_count() + x.face_count();
}

// ---------------------------------------------------------------------------------------
// Link graphs

/// L_X(v): one link vertex per neighbour of v, one link edge uw per face in which u, v, w are
/// consecutive.
struct LinkGraph {
    VertexId center = 0;
    Multigraph graph;
    std::vector<VertexId> vertex_of;        // link vertex -> vertex of X
    std::vector<FaceId> face_of_edge;       // link edge index -> face of X
    std::map<VertexId, int> link_vertex;    // vertex of X -> link vertex

    /// The link edge contributed by face f (each face passes through v at most once).
    int edge_of_face(FaceId f) const {
        auto it = std::find(face_of_edge.begin(), face_of_edge.end(), f);
        return it == face_of_edge.end() ? -1 : static_cast<int>(it - face_of_edge.begin());
    }
};

inline LinkGraph link_graph(const Complex2& x, VertexId v) {
    if (v < 0 || v >= x.vertex_count()) throw Error(ErrorCode::UnknownVertex, "link_graph: vertex out of range");
    LinkGraph out;
    out.center = v;
    for (VertexId u : x.neighbours(v)) {
        out.link_vertex[u] = out.graph.add_vertex(x.name(u));
        out.vertex_of.push_back(u);
    }
    for (FaceId f : x.faces_at(v)) {
        const auto& seq = x.face(f);
        const int k = static_cast<int>(seq.size());
        const int i = x.position_in_face(f, v);
        const VertexId prev = seq[(i + k - 1) % k];
        const VertexId next = seq[(i + 1) % k];
        out.graph.add_edge(out.link_vertex.at(prev), out.link_vertex.at(next), f);
        out.face_of_edge.push_back(f);
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// G(X), Y(X) and the Whitney test

/// Edges of X lying in at least three faces. Link-style provenance: vertex labels are the
/// names in X, edge ids are the edge indices of X.
struct SubgraphOfX {
    Multigraph graph;
    std::vector<VertexId> vertex_of;
};

inline SubgraphOfX g_subgraph(const Complex2& x) {
    SubgraphOfX out;
    std::map<VertexId, int> index;
    auto vertex = [&](VertexId v) {
        auto [it, fresh] = index.emplace(v, 0);
        if (fresh) {
            it->second = out.graph.add_vertex(x.name(v));
            out.vertex_of.push_back(v);
        }
        return it->second;
    };
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        if (x.faces_on_edge(e).size() >= 3) {
            const int a = vertex(x.edge(e).a);
            const int b = vertex(x.edge(e).b);
            out.graph.add_edge(a, b, e);
        }
    }
    return out;
}

inline std::vector<VertexId> y_vertices(const Complex2& x) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        const auto link = link_graph(x, v);
        for (int u = 0; u < link.graph.vertex_count(); ++u) {
            if (link.graph.degree(u) >= 3) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

struct LinkVerdict {
    VertexId vertex = 0;
    bool in_F = false;
    std::string clause;  // matched clause, or the failure reason
    EmbeddingTag tag = EmbeddingTag::NotUnique;
};

struct WhitneyReport {
    std::vector<LinkVerdict> links;
    int g_vertices = 0;
    int g_edges = 0;
    int g_components = 0;
    bool g_connected = true;
    bool is_whitney = false;

    std::vector<VertexId> failing_links() const {
        std::vector<VertexId> out;
        for (const auto& l : links)
            if (!l.in_F) out.push_back(l.vertex);
        return out;
    }
};

inline LinkVerdict classify_link(const Complex2& x, VertexId v) {
    const auto link = link_graph(x, v);
    LinkVerdict verdict;
    verdict.vertex = v;
    if (!is_connected(link.graph)) {
        verdict.clause = "disconnected link";
        return verdict;
    }
    const auto f = is_in_F(link.graph);
    verdict.in_F = f.member;
    verdict.clause = f.clause;
    verdict.tag = f.classification.tag;
    return verdict;
}

/// Every link graph in F and G(X) connected. The empty G(X) counts as connected.
inline WhitneyReport check_whitney(const Complex2& x) {
    WhitneyReport report;
    bool all_links = true;
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        report.links.push_back(classify_link(x, v));
        all_links = all_links && report.links.back().in_F;
    }
    const auto g = g_subgraph(x);
    report.g_vertices = g.graph.vertex_count();
    report.g_edges = g.graph.edge_count();
    report.g_components = component_count(g.graph);
    report.g_connected = report.g_components <= 1;
    report.is_whitney = all_links && report.g_connected;
    return report;
}

inline bool is_locally_2_connected(const Complex2& x) {
    for (VertexId v = 0; v < x.vertex_count(); ++v)
        if (!is_k_connected(link_graph(x, v).graph, 2)) return false;
    return true;
}

// ---------------------------------------------------------------------------------------
// Barycentric subdivision

enum class CellKind { Vertex, Edge, Face };

struct CellRef {
    CellKind kind = CellKind::Vertex;
    int index = 0;

    auto operator<=>(const CellRef&) const = default;
};

struct Subdivision {
    Complex2 complex;
    std::vector<CellRef> vertex_origin;  // new vertex -> original cell it stands for
    std::vector<FaceId> face_origin;     // new face -> original face it lies in
};

namespace detail {
inline std::string fresh_name(std::string candidate, const std::set<std::string>& taken) {
    while (taken.count(candidate)) candidate += "'";
    return candidate;
}
} // namespace detail

/// Subdivides every edge once and cones every k-gon from a new center into 2k triangles.
inline Subdivision barycentric_subdivision(const Complex2& x) {
    Subdivision out;
    std::vector<std::string> names = x.vertex_names();
    std::set<std::string> taken(names.begin(), names.end());
    for (VertexId v = 0; v < x.vertex_count(); ++v) out.vertex_origin.push_back({CellKind::Vertex, v});

    std::vector<VertexId> midpoint(x.edge_count());
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        auto name = detail::fresh_name("m(" + x.name(x.edge(e).a) + "," + x.name(x.edge(e).b) + ")", taken);
        taken.insert(name);
        midpoint[e] = static_cast<VertexId>(names.size());
        names.push_back(std::move(name));
        out.vertex_origin.push_back({CellKind::Edge, e});
    }
    std::vector<std::vector<VertexId>> faces;
    for (FaceId f = 0; f < x.face_count(); ++f) {
        auto name = detail::fresh_name("c(" + std::to_string(f) + ")", taken);
        taken.insert(name);
        const VertexId center = static_cast<VertexId>(names.size());
        names.push_back(std::move(name));
        out.vertex_origin.push_back({CellKind::Face, f});

        const auto& seq = x.face(f);
        std::vector<VertexId> ring;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            ring.push_back(seq[i]);
            ring.push_back(midpoint[x.edge_between(seq[i], seq[(i + 1) % seq.size()])]);
        }
        for (std::size_t i = 0; i < ring.size(); ++i) {
            faces.push_back({center, ring[i], ring[(i + 1) % ring.size()]});
            out.face_origin.push_back(f);
        }
    }
    out.complex = Complex2::from_indices(std::move(names), std::move(faces));
    return out;
}

} // namespace whitney
