#pragma once

// Multigraph algorithms: connectivity, k-connectivity, face tracing, planar embedding,
// degree-2 suppression and the unique-embeddability classifier.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "whitney/disjoint_set.hpp"
#include "whitney/error.hpp"
#include "whitney/multigraph.hpp"

namespace whitney {

namespace detail {

// Connectivity of g with the vertices flagged in `removed` deleted. Loops never matter.
inline bool connected_without(const Multigraph& g, const std::vector<char>& removed) {
    DisjointSet ds(g.vertex_count());
    for (const auto& e : g.edges())
        if (!removed[e.u] && !removed[e.v]) ds.merge(e.u, e.v);
    int root = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed[v]) continue;
        if (root < 0) root = ds.find(v);
        else if (ds.find(v) != root) return false;
    }
    return true;
}

inline void require_connected(const Multigraph& g, const char* where);

} // namespace detail

/// An empty graph and K1 count as connected.
inline bool is_connected(const Multigraph& g) {
    return detail::connected_without(g, std::vector<char>(g.vertex_count(), 0));
}

inline int component_count(const Multigraph& g) {
    DisjointSet ds(g.vertex_count());
    for (const auto& e : g.edges()) ds.merge(e.u, e.v);
    return ds.set_count();
}

namespace detail {
inline void require_connected(const Multigraph& g, const char* where) {
    if (!is_connected(g)) throw Error(ErrorCode::DisconnectedInput, std::string(where) + " needs a connected graph");
}
} // namespace detail

/// k-connectivity: at least k vertices and connected after deleting any set of at most k-1
/// vertices. Two vertices joined by a single edge are not 2-connected; joined by two or more
/// parallel edges they are.
inline bool is_k_connected(const Multigraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1) throw Error(ErrorCode::SchemaError, "k must be at least 1");
    if (n < k) return false;
    if (k == 2 && n == 2) {
        int joins = 0;
        for (const auto& e : g.edges()) joins += !e.is_loop();
        return joins >= 2;
    }
    std::vector<char> removed(n, 0);
    for (int size = 0; size < k; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int p : pick) removed[p] = 1;
            if (!detail::connected_without(g, removed)) return false;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;
}

/// A vertex whose removal disconnects the rest, if any.
inline std::optional<int> find_cut_vertex(const Multigraph& g) {
    std::vector<char> removed(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        removed[v] = 1;
        if (!detail::connected_without(g, removed)) return v;
        removed[v] = 0;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------------------
// Face tracing

struct FaceTrace {
    int faces = 0;
    int genus = 0;
};

namespace detail {

// successor[d.index()] = next dart after d in the rotation at its vertex.
inline std::vector<Dart> rotation_successors(const Multigraph& g, const GraphRotation& rot) {
    if (static_cast<int>(rot.cycles.size()) != g.vertex_count())
        throw Error(ErrorCode::SchemaError, "rotation has the wrong number of vertex cycles");
    std::vector<Dart> succ(2 * static_cast<std::size_t>(g.edge_count()), Dart{-1, -1});
    std::vector<char> seen(succ.size(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& cyc = rot.cycles[v];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Dart d = cyc[i];
            if (d.edge < 0 || d.edge >= g.edge_count() || d.side < 0 || d.side > 1 || g.endpoint(d) != v)
                throw Error(ErrorCode::SchemaError, "rotation lists a dart at the wrong vertex");
            if (seen[d.index()]++) throw Error(ErrorCode::SchemaError, "rotation lists a dart twice");
            succ[d.index()] = cyc[(i + 1) % cyc.size()];
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw Error(ErrorCode::SchemaError, "rotation misses a dart");
    return succ;
}

// Orbits of the face permutation d -> succ(opposite(d)).
inline int count_face_orbits(const std::vector<Dart>& succ) {
    std::vector<char> done(succ.size(), 0);
    int orbits = 0;
    for (std::size_t start = 0; start < succ.size(); ++start) {
        if (done[start]) continue;
        ++orbits;
        Dart d{static_cast<int>(start / 2), static_cast<int>(start % 2)};
        while (!done[d.index()]) {
            done[d.index()] = 1;
            d = succ[d.opposite().index()];
        }
    }
    return orbits;
}

} // namespace detail

/// Traces the faces of the surface embedding defined by `rot`; genus from V - E + F = 2 - 2g.
inline FaceTrace face_trace_genus(const Multigraph& g, const GraphRotation& rot) {
    detail::require_connected(g, "face_trace_genus");
    const auto succ = detail::rotation_successors(g, rot);
    if (g.edge_count() == 0) return {g.vertex_count() == 0 ? 0 : 1, 0};
    const int faces = detail::count_face_orbits(succ);
    return {faces, (2 - g.vertex_count() + g.edge_count() - faces) / 2};
}

/// Sum of genera over connected components; zero iff every component is embedded in the sphere.
inline int rotation_genus(const Multigraph& g, const GraphRotation& rot) {
    const auto succ = detail::rotation_successors(g, rot);
    const int components = component_count(g);
    int isolated = 0;
    for (int v = 0; v < g.vertex_count(); ++v) isolated += rot.cycles[v].empty();
    const int faces = detail::count_face_orbits(succ) + isolated;
    return (2 * components - g.vertex_count() + g.edge_count() - faces) / 2;
}

// ---------------------------------------------------------------------------------------
// Planarity

/// A planar rotation of g, or nullopt when g is not planar.
///
/// Every edge is subdivided twice so the underlying simple-graph planarity test also covers
/// loops and parallel edges; the embedding of the subdivided graph is read back as an order
/// of darts around each original vertex.
inline std::optional<GraphRotation> planar_embedding(const Multigraph& g) {
    detail::require_connected(g, "planar_embedding");
    const int n = g.vertex_count();
    GraphRotation rot;
    rot.cycles.resize(n);
    if (g.edge_count() == 0) return rot;

    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
    BGraph bg(n + 2 * g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const int a = n + 2 * i;
        const int b = a + 1;
        boost::add_edge(g.edge(i).u, a, bg);
        boost::add_edge(a, b, bg);
        boost::add_edge(b, g.edge(i).v, bg);
    }
    int next_index = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(boost::edge_index, bg, *it, next_index++);

    using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding(boost::num_vertices(bg));
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;

    for (int v = 0; v < n; ++v) {
        for (const auto& e : embedding[v]) {
            const int s = static_cast<int>(boost::source(e, bg));
            const int t = static_cast<int>(boost::target(e, bg));
            const int other = (s == v) ? t : s;
            const int slot = other - n;
            rot.cycles[v].push_back({slot / 2, slot % 2});
        }
    }
    if (face_trace_genus(g, rot).genus != 0)
        throw Error(ErrorCode::PlanarityPostconditionFailed, "extracted embedding does not trace to the sphere");
    return rot;
}

// ---------------------------------------------------------------------------------------
// Degree-2 suppression

struct Suppression {
    /// Every vertex has degree 2: the graph is a cycle and `graph` is left empty.
    bool cycle = false;
    Multigraph graph;
    std::vector<int> vertex_origin;       // suppressed vertex -> input vertex
    std::vector<std::vector<int>> paths;  // suppressed edge -> input edge indices, in walk order
};

/// Replaces every maximal path whose internal vertices have degree 2 by one edge. The new edge
/// keeps the smallest id among the edges it replaces.
inline Suppression suppress_degree2(const Multigraph& g) {
    detail::require_connected(g, "suppress_degree2");
    Suppression out;
    const int n = g.vertex_count();
    std::vector<int> deg(n, 0);
    for (const auto& e : g.edges()) ++deg[e.u], ++deg[e.v];

    std::vector<int> new_index(n, -1);
    for (int v = 0; v < n; ++v) {
        if (deg[v] != 2) {
            new_index[v] = out.graph.add_vertex(g.label(v));
            out.vertex_origin.push_back(v);
        }
    }
    if (out.vertex_origin.empty()) {
        out.cycle = true;
        return out;
    }

    const auto darts = g.darts_by_vertex();
    struct Pending {
        int id;
        int from;
        int to;
        std::vector<int> path;
    };
    std::vector<Pending> pending;
    std::vector<char> used(g.edge_count(), 0);
    for (int x : out.vertex_origin) {
        for (Dart d : darts[x]) {
            if (used[d.edge]) continue;
            Pending p{g.edge(d.edge).id, x, -1, {}};
            Dart arrive = d.opposite();
            p.path.push_back(d.edge);
            used[d.edge] = 1;
            int at = g.endpoint(arrive);
            while (deg[at] == 2) {
                const auto& two = darts[at];
                const Dart leave = (two[0] == arrive) ? two[1] : two[0];
                p.path.push_back(leave.edge);
                used[leave.edge] = 1;
                p.id = std::min(p.id, g.edge(leave.edge).id);
                arrive = leave.opposite();
                at = g.endpoint(arrive);
            }
            p.to = at;
            pending.push_back(std::move(p));
        }
    }
    std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) { return a.id < b.id; });
    for (auto& p : pending) {
        out.graph.add_edge(new_index[p.from], new_index[p.to], p.id);
        out.paths.push_back(std::move(p.path));
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// Unique embeddability

enum class EmbeddingTag { UniqueA, UniqueB, NotUnique };

constexpr const char* to_string(EmbeddingTag t) {
    switch (t) {
        case EmbeddingTag::UniqueA: return "UniqueA";
        case EmbeddingTag::UniqueB: return "UniqueB";
        case EmbeddingTag::NotUnique: return "NotUnique";
    }
    return "?";
}

struct EmbeddingClass {
    EmbeddingTag tag = EmbeddingTag::NotUnique;
    /// Which clause matched: "3-connected-planar", "cycle", "isolated-vertex", "edge", "theta",
    /// "K1,3", "C2vK2"; empty for NotUnique.
    std::string shape;
    Suppression witness;
};

namespace detail {

// The shapes a suppressed graph can take in clause B. A cycle is handled before this point.
inline std::string small_unique_shape(const Multigraph& h) {
    const int n = h.vertex_count();
    const int m = h.edge_count();
    int loops = 0;
    for (const auto& e : h.edges()) loops += e.is_loop();
    std::vector<int> deg(n, 0);
    for (const auto& e : h.edges()) ++deg[e.u], ++deg[e.v];
    std::sort(deg.begin(), deg.end());

    if (n == 1 && m == 0) return "isolated-vertex";
    if (n == 2 && m == 1 && loops == 0) return "edge";
    if (n == 2 && m == 3 && loops == 0) return "theta";
    if (n == 4 && m == 3 && loops == 0 && deg == std::vector<int>{1, 1, 1, 3}) return "K1,3";
    // C2 v K2 after suppression: a loop at y plus a pendant edge yz.
    if (n == 2 && m == 2 && loops == 1 && deg == std::vector<int>{1, 3}) return "C2vK2";
    return {};
}

} // namespace detail

/// Whether g has an essentially unique embedding in the sphere: after suppressing degree-2
/// vertices it is a 3-connected planar simple graph (A) or one of the small multigraphs
/// K1, K2, a cycle, the theta multigraph, K1,3 or C2 v K2 (B).
inline EmbeddingClass classify_unique_embeddability(const Multigraph& g) {
    EmbeddingClass out;
    out.witness = suppress_degree2(g);
    if (out.witness.cycle) {
        out.tag = EmbeddingTag::UniqueB;
        out.shape = "cycle";
        return out;
    }
    const Multigraph& h = out.witness.graph;
    if (h.is_simple() && is_k_connected(h, 3) && planar_embedding(h)) {
        out.tag = EmbeddingTag::UniqueA;
        out.shape = "3-connected-planar";
        return out;
    }
    if (auto shape = detail::small_unique_shape(h); !shape.empty()) {
        out.tag = EmbeddingTag::UniqueB;
        out.shape = std::move(shape);
    }
    return out;
}

struct FMembership {
    bool member = false;
    /// "cycle", "theta" or "3-connected-planar" for members; otherwise the reason.
    std::string clause;
    EmbeddingClass classification;
};

/// Membership in F: cycles, theta subdivisions and subdivisions of 3-connected planar simple
/// graphs (the 2-connected graphs with an essentially unique planar embedding).
inline FMembership is_in_F(const Multigraph& g) {
    FMembership out;
    out.classification = classify_unique_embeddability(g);
    const auto& c = out.classification;
    if (!is_k_connected(g, 2)) {
        if (auto cut = find_cut_vertex(g); cut && g.vertex_count() > 2)
            out.clause = "cut vertex " + g.label(*cut);
        else
            out.clause = "not 2-connected";
        return out;
    }
    if (c.shape == "cycle" || c.shape == "theta" || c.tag == EmbeddingTag::UniqueA) {
        out.member = true;
        out.clause = c.shape;
        return out;
    }
    out.clause = planar_embedding(g) ? "not uniquely embeddable" : "nonplanar";
    return out;
}

} // namespace whitney
