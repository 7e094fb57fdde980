#pragma once

// Rotation systems of 2-complexes: cyclic orders of the faces around every directed edge.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "whitney/complex.hpp"
#include "whitney/error.hpp"
#include "whitney/graphkit.hpp"

namespace whitney {

/// Rotates a cyclic sequence so its smallest element comes first.
inline std::vector<FaceId> canonical_cycle(std::vector<FaceId> c) {
    if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    return c;
}

/// The same cycle traversed backwards, kept in canonical rotation.
inline std::vector<FaceId> reverse_cycle(std::vector<FaceId> c) {
    c = canonical_cycle(std::move(c));
    if (c.size() > 1) std::reverse(c.begin() + 1, c.end());
    return c;
}

/// Stores, for every edge a-b (a < b), the cycle at the directed edge a->b. The cycle at b->a
/// is its reverse by construction.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(std::vector<std::vector<FaceId>> cycles) : cycles_(std::move(cycles)) {
        for (auto& c : cycles_) c = canonical_cycle(std::move(c));
    }

    const std::vector<std::vector<FaceId>>& cycles() const { return cycles_; }
    const std::vector<FaceId>& canonical(EdgeId e) const { return cycles_[e]; }

    std::vector<FaceId> cycle(const Complex2& x, VertexId tail, VertexId head) const {
        const EdgeId e = x.edge_between(tail, head);
        return tail < head ? cycles_[e] : reverse_cycle(cycles_[e]);
    }

    /// The face right after f in the cycle at tail->head.
    FaceId successor(const Complex2& x, VertexId tail, VertexId head, FaceId f) const {
        const auto& c = cycles_[x.edge_between(tail, head)];
        const auto it = std::find(c.begin(), c.end(), f);
        if (it == c.end()) throw Error(ErrorCode::ForeignFace, "face not incident with edge");
        const std::size_t i = static_cast<std::size_t>(it - c.begin());
        const std::size_t k = c.size();
        return tail < head ? c[(i + 1) % k] : c[(i + k - 1) % k];
    }

    RotationSystem reversed() const {
        RotationSystem r;
        r.cycles_.reserve(cycles_.size());
        for (const auto& c : cycles_) r.cycles_.push_back(reverse_cycle(c));
        return r;
    }

    /// The smaller of this system and its reversal; identifies the class up to reversal.
    RotationSystem reversal_class_representative() const {
        auto r = reversed();
        return r < *this ? r : *this;
    }

    auto operator<=>(const RotationSystem&) const = default;

private:
    std::vector<std::vector<FaceId>> cycles_;
};

/// Cycles keyed by directed edge (tail, head). At least one direction per edge.
using RawRotation = std::map<std::pair<VertexId, VertexId>, std::vector<FaceId>>;

/// Checks incidence and the reversal law, completing unspecified edges whose cyclic order is
/// forced (at most two incident faces).
inline RotationSystem validate_rotation(const Complex2& x, const RawRotation& raw) {
    std::vector<std::optional<std::vector<FaceId>>> chosen(x.edge_count());
    for (const auto& [key, cyc] : raw) {
        const auto [tail, head] = key;
        if (tail < 0 || head < 0 || tail >= x.vertex_count() || head >= x.vertex_count())
            throw Error(ErrorCode::UnknownVertex, "rotation references an unknown vertex");
        const auto e = x.find_edge(tail, head);
        if (!e) throw Error(ErrorCode::UnknownEdge, x.name(tail) + "->" + x.name(head));
        const auto incident = x.faces_on_edge(*e);
        std::vector<FaceId> seen;
        for (FaceId f : cyc) {
            if (std::find(incident.begin(), incident.end(), f) == incident.end())
                throw Error(ErrorCode::ForeignFace, "face " + std::to_string(f) + " is not incident with " +
                                                        x.name(tail) + "-" + x.name(head));
            if (std::find(seen.begin(), seen.end(), f) != seen.end())
                throw Error(ErrorCode::ForeignFace, "face " + std::to_string(f) + " listed twice at " +
                                                        x.name(tail) + "->" + x.name(head));
            seen.push_back(f);
        }
        if (seen.size() != incident.size())
            throw Error(ErrorCode::MissingFace, "cycle at " + x.name(tail) + "->" + x.name(head) +
                                                    " omits an incident face");
        auto forward = tail < head ? canonical_cycle(cyc) : reverse_cycle(cyc);
        if (chosen[*e] && *chosen[*e] != forward)
            throw Error(ErrorCode::ReversalViolation, "cycles at " + x.name(tail) + "->" + x.name(head) +
                                                          " and its reverse are not mutually reversed");
        chosen[*e] = std::move(forward);
    }
    std::vector<std::vector<FaceId>> cycles;
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        if (chosen[e]) {
            cycles.push_back(*chosen[e]);
        } else if (x.faces_on_edge(e).size() <= 2) {
            cycles.emplace_back(x.faces_on_edge(e).begin(), x.faces_on_edge(e).end());
        } else {
            throw Error(ErrorCode::MissingEdge, "no cycle given for " + x.name(x.edge(e).a) + "-" +
                                                    x.name(x.edge(e).b));
        }
    }
    return RotationSystem(std::move(cycles));
}

/// The unique rotation system of a complex whose edges all lie in at most two faces.
inline std::optional<RotationSystem> forced_rotation(const Complex2& x) {
    std::vector<std::vector<FaceId>> cycles;
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        if (x.faces_on_edge(e).size() > 2) return std::nullopt;
        cycles.emplace_back(x.faces_on_edge(e).begin(), x.faces_on_edge(e).end());
    }
    return RotationSystem(std::move(cycles));
}

// ---------------------------------------------------------------------------------------
// Induced link rotations

struct InducedLinkRotation {
    LinkGraph link;
    GraphRotation rotation;
};

namespace detail {

using CycleLookup = std::function<std::vector<FaceId>(VertexId tail, VertexId head)>;

// The rotation at link vertex u is the cycle at v->u with every face replaced by the link
// edge it contributes.
inline GraphRotation induced_rotation(const LinkGraph& link, const CycleLookup& cycle_at) {
    GraphRotation rot;
    rot.cycles.resize(link.graph.vertex_count());
    for (int i = 0; i < link.graph.vertex_count(); ++i) {
        for (FaceId f : cycle_at(link.center, link.vertex_of[i])) {
            const int le = link.edge_of_face(f);
            rot.cycles[i].push_back({le, link.graph.edge(le).u == i ? 0 : 1});
        }
    }
    return rot;
}

} // namespace detail

inline InducedLinkRotation induce_link_rotation(const Complex2& x, const RotationSystem& sigma, VertexId v) {
    InducedLinkRotation out{link_graph(x, v), {}};
    out.rotation = detail::induced_rotation(
        out.link, [&](VertexId t, VertexId h) { return sigma.cycle(x, t, h); });
    return out;
}

struct PlanarityReport {
    bool planar = true;
    std::vector<int> link_genus;  // per vertex of X
};

/// Planar iff every induced link rotation traces to genus 0 on each component.
inline PlanarityReport is_planar_rotation_system(const Complex2& x, const RotationSystem& sigma) {
    PlanarityReport report;
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        const auto induced = induce_link_rotation(x, sigma, v);
        report.link_genus.push_back(rotation_genus(induced.link.graph, induced.rotation));
        report.planar = report.planar && report.link_genus.back() == 0;
    }
    return report;
}

// ---------------------------------------------------------------------------------------
// Enumeration of planar rotation systems

enum class EnumerationMethod { Propagation, Oracle };

constexpr const char* to_string(EnumerationMethod m) {
    return m == EnumerationMethod::Propagation ? "propagation" : "oracle";
}

struct Enumeration {
    EnumerationMethod method = EnumerationMethod::Propagation;
    /// One representative per class up to global reversal, sorted.
    std::vector<RotationSystem> systems;
    /// Planar systems counted without identifying reversals.
    std::size_t planar_total = 0;
    /// Why no system exists, when `systems` is empty.
    std::string witness;
    std::size_t nodes_visited = 0;
};

namespace detail {

using CyclesByNeighbour = std::map<VertexId, std::vector<FaceId>>;

// Cycles at v->u for every neighbour u, read off a rotation of L_X(v).
inline CyclesByNeighbour cycles_from_link(const LinkGraph& link, const GraphRotation& rot) {
    CyclesByNeighbour out;
    for (int i = 0; i < link.graph.vertex_count(); ++i) {
        std::vector<FaceId> c;
        for (Dart d : rot.cycles[i]) c.push_back(link.face_of_edge[d.edge]);
        out[link.vertex_of[i]] = canonical_cycle(std::move(c));
    }
    return out;
}

inline Enumeration propagate(const Complex2& x) {
    Enumeration out;
    out.method = EnumerationMethod::Propagation;
    if (!check_whitney(x).is_whitney) throw Error(ErrorCode::NotWhitney, "propagation needs a Whitney complex");

    const auto ys = y_vertices(x);
    std::map<VertexId, std::array<CyclesByNeighbour, 2>> options;
    for (VertexId v : ys) {
        const auto link = link_graph(x, v);
        const auto emb = planar_embedding(link.graph);
        if (!emb) {
            out.witness = "link of " + x.name(v) + " is not planar";
            return out;
        }
        options[v] = {cycles_from_link(link, *emb), cycles_from_link(link, emb->reversed())};
    }

    std::map<VertexId, CyclesByNeighbour> chosen;
    if (!ys.empty()) {
        const VertexId root = ys.front();
        auto& opts = options.at(root);
        chosen[root] = opts[1] < opts[0] ? opts[1] : opts[0];

        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop();
            for (VertexId w : x.neighbours(v)) {
                if (x.faces_on_edge(x.edge_between(v, w)).size() < 3 || chosen.count(w)) continue;
                const auto need = reverse_cycle(chosen[v].at(w));
                const auto& wopts = options.at(w);
                if (wopts[0].at(v) == need) {
                    chosen[w] = wopts[0];
                } else if (wopts[1].at(v) == need) {
                    chosen[w] = wopts[1];
                } else {
                    out.witness = "edge " + x.name(v) + "-" + x.name(w) +
                                  ": no reflection of the link embedding matches";
                    return out;
                }
                queue.push(w);
            }
        }
        for (EdgeId e = 0; e < x.edge_count(); ++e) {
            const auto [a, b] = x.edge(e);
            if (x.faces_on_edge(e).size() < 3) continue;
            if (chosen.at(a).at(b) != reverse_cycle(chosen.at(b).at(a))) {
                out.witness = "edge " + x.name(a) + "-" + x.name(b) + ": propagated orientations disagree";
                return out;
            }
        }
    }

    std::vector<std::vector<FaceId>> cycles;
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        const auto [a, b] = x.edge(e);
        if (auto it = chosen.find(a); it != chosen.end()) {
            cycles.push_back(it->second.at(b));
        } else if (auto jt = chosen.find(b); jt != chosen.end()) {
            cycles.push_back(reverse_cycle(jt->second.at(a)));
        } else {
            cycles.emplace_back(x.faces_on_edge(e).begin(), x.faces_on_edge(e).end());
        }
    }
    RotationSystem sigma(std::move(cycles));
    if (!is_planar_rotation_system(x, sigma).planar) {
        out.witness = "assembled rotation system is not planar";
        return out;
    }
    out.planar_total = (sigma == sigma.reversed()) ? 1 : 2;
    out.systems.push_back(sigma.reversal_class_representative());
    return out;
}

// Exhaustive search over every cyclic order at every edge. A vertex is checked as soon as all
// of its edges are assigned, which prunes without changing the result.
class OracleSearch {
public:
    OracleSearch(const Complex2& x, std::size_t budget) : x_(x), budget_(budget) {
        std::vector<char> placed(x.edge_count(), 0);
        for (VertexId v = 0; v < x.vertex_count(); ++v) {
            for (VertexId u : x.neighbours(v)) {
                const EdgeId e = x.edge_between(v, u);
                if (!placed[e]) {
                    placed[e] = 1;
                    order_.push_back(e);
                }
            }
        }
        std::vector<int> position(x.edge_count());
        for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = static_cast<int>(i);
        ready_at_.resize(order_.size());
        for (VertexId v = 0; v < x.vertex_count(); ++v) {
            int last = -1;
            for (VertexId u : x.neighbours(v)) last = std::max(last, position[x.edge_between(v, u)]);
            if (last >= 0) ready_at_[last].push_back(v);
            links_.push_back(link_graph(x, v));
        }
        ever_passed_.assign(x.vertex_count(), 0);
        current_.resize(x.edge_count());
    }

    Enumeration run() {
        Enumeration out;
        out.method = EnumerationMethod::Oracle;
        assign(0);
        out.nodes_visited = nodes_;
        out.planar_total = found_.size();
        std::set<RotationSystem> classes;
        for (const auto& s : found_) classes.insert(s.reversal_class_representative());
        out.systems.assign(classes.begin(), classes.end());
        if (out.systems.empty()) {
            out.witness = "no planar rotation system";
            for (VertexId v = 0; v < x_.vertex_count(); ++v) {
                if (!ever_passed_[v]) {
                    out.witness = "link of " + x_.name(v) + " admits no planar induced rotation";
                    break;
                }
            }
        }
        return out;
    }

private:
    std::vector<FaceId> cycle_at(VertexId t, VertexId h) const {
        const auto& c = current_[x_.edge_between(t, h)];
        return t < h ? c : reverse_cycle(c);
    }

    bool vertex_ok(VertexId v) {
        const auto rot = induced_rotation(links_[v], [&](VertexId t, VertexId h) { return cycle_at(t, h); });
        const bool ok = rotation_genus(links_[v].graph, rot) == 0;
        if (ok) ever_passed_[v] = 1;
        return ok;
    }

    void assign(std::size_t i) {
        if (i == order_.size()) {
            found_.emplace_back(current_);
            return;
        }
        const EdgeId e = order_[i];
        const auto incident = x_.faces_on_edge(e);
        std::vector<FaceId> rest(incident.begin() + 1, incident.end());
        do {
            if (++nodes_ > budget_)
                throw Error(ErrorCode::TooLarge, "oracle enumeration exceeded its node budget");
            current_[e].assign(1, incident.front());
            current_[e].insert(current_[e].end(), rest.begin(), rest.end());
            bool ok = true;
            for (VertexId v : ready_at_[i]) {
                if (!vertex_ok(v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign(i + 1);
        } while (rest.size() > 1 && std::next_permutation(rest.begin(), rest.end()));
    }

    const Complex2& x_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<EdgeId> order_;
    std::vector<std::vector<VertexId>> ready_at_;
    std::vector<LinkGraph> links_;
    std::vector<char> ever_passed_;
    std::vector<std::vector<FaceId>> current_;
    std::vector<RotationSystem> found_;
};

} // namespace detail

inline constexpr std::size_t kDefaultOracleBudget = 20'000'000;

/// All planar rotation systems of x, one per class up to global reversal.
///
/// Propagation fixes the embedding of the root link in Y(X) and pushes the reflection choice
/// along G(X); it needs a Whitney complex and yields at most one class. The oracle enumerates
/// every combination of cyclic orders and works on any complex within the node budget.
inline Enumeration enumerate_planar_rotation_systems(const Complex2& x, EnumerationMethod method,
                                                     std::size_t oracle_budget = kDefaultOracleBudget) {
    if (method == EnumerationMethod::Propagation) return detail::propagate(x);
    return detail::OracleSearch(x, oracle_budget).run();
}

} // namespace whitney
