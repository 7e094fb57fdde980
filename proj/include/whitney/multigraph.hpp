#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <string>
#include <vector>

#include "whitney/error.hpp"

namespace whitney {

/// An undirected edge of a multigraph. Loops (u == v) and parallel edges are allowed.
struct MultiEdge {
    int id = 0;
    int u = 0;
    int v = 0;

    bool is_loop() const { return u == v; }
};

/// One end of an edge: side 0 sits at `u`, side 1 at `v`. A loop contributes two darts
/// at the same vertex.
struct Dart {
    int edge = 0;  // index into Multigraph::edges(), not the edge id
    int side = 0;

    auto operator<=>(const Dart&) const = default;

    Dart opposite() const { return {edge, 1 - side}; }
    int index() const { return 2 * edge + side; }
};

class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count) : labels_(static_cast<std::size_t>(vertex_count)) {
        for (int i = 0; i < vertex_count; ++i) labels_[i] = std::to_string(i);
    }

    int add_vertex(std::string label) {
        labels_.push_back(std::move(label));
        return vertex_count() - 1;
    }

    /// Adds an edge and returns its index. Without an explicit id the next free id is used.
    int add_edge(int u, int v, int id = -1) {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
        if (id < 0) id = next_id_;
        next_id_ = std::max(next_id_, id + 1);
        edges_.push_back({id, u, v});
        return edge_count() - 1;
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<MultiEdge>& edges() const { return edges_; }
    const MultiEdge& edge(int index) const { return edges_[index]; }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    int endpoint(Dart d) const { return d.side == 0 ? edges_[d.edge].u : edges_[d.edge].v; }

    int degree(int v) const {
        int deg = 0;
        for (const auto& e : edges_) deg += (e.u == v) + (e.v == v);
        return deg;
    }

    /// Darts at every vertex, in edge order (side 0 before side 1).
    std::vector<std::vector<Dart>> darts_by_vertex() const {
        std::vector<std::vector<Dart>> out(labels_.size());
        for (int i = 0; i < edge_count(); ++i) {
            out[edges_[i].u].push_back({i, 0});
            out[edges_[i].v].push_back({i, 1});
        }
        return out;
    }

    /// Neighbour lists (with multiplicity, loops listed twice).
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(labels_.size());
        for (const auto& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        return adj;
    }

    bool is_simple() const {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : edges_) {
            if (e.is_loop()) return false;
            pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        }
        std::sort(pairs.begin(), pairs.end());
        return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
    }

private:
    std::vector<std::string> labels_;
    std::vector<MultiEdge> edges_;
    int next_id_ = 0;
};

/// Cyclic order of darts around each vertex.
struct GraphRotation {
    std::vector<std::vector<Dart>> cycles;

    GraphRotation reversed() const {
        GraphRotation r = *this;
        for (auto& c : r.cycles)
            if (c.size() > 1) std::reverse(c.begin() + 1, c.end());
        return r;
    }

    /// Rotates every cycle so that its smallest dart comes first; equality is then syntactic.
    GraphRotation canonical() const {
        GraphRotation r = *this;
        for (auto& c : r.cycles)
            if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        return r;
    }

    bool operator==(const GraphRotation& other) const {
        return canonical().cycles == other.canonical().cycles;
    }
};

} // namespace whitney
