#pragma once

// Evidence for simple connectivity: integer H1 via Smith normal form and a fundamental-group
// presentation simplified by bounded Tietze moves.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <string>
#include <vector>

#include "whitney/complex.hpp"
#include "whitney/error.hpp"

namespace whitney {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Chain complex of X over the integers. Edges are oriented from the lower to the higher
/// vertex index; faces follow their stored cyclic direction.
struct ChainComplexZ {
    IntMatrix d2;  // faces x edges
    IntMatrix d1;  // edges x vertices
};

inline ChainComplexZ chain_complex(const Complex2& x) {
    ChainComplexZ c;
    c.d1.assign(x.edge_count(), std::vector<std::int64_t>(x.vertex_count(), 0));
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        c.d1[e][x.edge(e).a] -= 1;
        c.d1[e][x.edge(e).b] += 1;
    }
    c.d2.assign(x.face_count(), std::vector<std::int64_t>(x.edge_count(), 0));
    for (FaceId f = 0; f < x.face_count(); ++f) {
        const auto& seq = x.face(f);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const VertexId a = seq[i];
            const VertexId b = seq[(i + 1) % seq.size()];
            c.d2[f][x.edge_between(a, b)] += (a < b) ? 1 : -1;
        }
    }
    return c;
}

namespace detail {

inline std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
    std::int64_t prod = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
        throw Error(ErrorCode::TooLarge, "integer overflow during Smith normal form");
    return out;
}

inline void row_op(IntMatrix& m, std::size_t target, std::size_t source, std::int64_t q) {
    for (std::size_t j = 0; j < m[target].size(); ++j) m[target][j] = checked_sub_mul(m[target][j], q, m[source][j]);
}

inline void col_op(IntMatrix& m, std::size_t target, std::size_t source, std::int64_t q) {
    for (auto& row : m) row[target] = checked_sub_mul(row[target], q, row[source]);
}

} // namespace detail

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
inline std::vector<std::int64_t> invariant_factors(IntMatrix m) {
    std::vector<std::int64_t> out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero entry in the trailing block becomes the pivot
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) pr = i, pc = j;
            if (pr == rows) return out;
            std::swap(m[t], m[pr]);
            for (auto& row : m) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                detail::row_op(m, i, t, m[i][t] / m[t][t]);
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                detail::col_op(m, j, t, m[t][j] / m[t][t]);
                clean = clean && m[t][j] == 0;
            }
            if (!clean) continue;

            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            detail::row_op(m, t, bad, -1);
        }
        out.push_back(std::llabs(m[t][t]));
    }
    return out;
}

struct HomologyGroup {
    int rank = 0;
    std::vector<std::int64_t> torsion;  // invariant factors greater than 1

    bool trivial() const { return rank == 0 && torsion.empty(); }

    std::string to_string() const {
        if (trivial()) return "0";
        std::string s;
        if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
        for (auto t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
        return s;
    }
};

/// H1 = ker d1 / im d2. Torsion comes from d2 alone because ker d1 is a direct summand.
inline HomologyGroup h1(const Complex2& x) {
    if (!x.is_connected()) throw Error(ErrorCode::DisconnectedInput, "h1 needs a connected complex");
    const auto c = chain_complex(x);
    const auto f1 = invariant_factors(c.d1);
    const auto f2 = invariant_factors(c.d2);
    HomologyGroup g;
    g.rank = x.edge_count() - static_cast<int>(f1.size()) - static_cast<int>(f2.size());
    for (auto v : f2)
        if (v > 1) g.torsion.push_back(v);
    return g;
}

// ---------------------------------------------------------------------------------------
// Fundamental group

/// Generators are the edges outside a BFS spanning tree of the 1-skeleton; each face gives
/// one relator. Letter +(g+1) is generator g, -(g+1) its inverse.
struct GroupPresentation {
    int generator_count = 0;
    std::vector<EdgeId> generator_edge;
    std::vector<std::vector<int>> relators;
};

inline std::vector<int> free_reduce(const std::vector<int>& word) {
    std::vector<int> out;
    for (int l : word) {
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

/// Free reduction followed by cancelling letters across the cyclic seam.
inline std::vector<int> cyclic_reduce(const std::vector<int>& word) {
    auto w = free_reduce(word);
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) ++lo, --hi;
    return {w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi)};
}

inline std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

inline GroupPresentation fundamental_group_presentation(const Complex2& x) {
    if (!x.is_connected()) throw Error(ErrorCode::DisconnectedInput, "presentation needs a connected complex");
    std::vector<char> in_tree(x.edge_count(), 0);
    std::vector<char> seen(x.vertex_count(), 0);
    std::queue<VertexId> queue;
    if (x.vertex_count() > 0) {
        queue.push(0);
        seen[0] = 1;
    }
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        for (VertexId u : x.neighbours(v)) {
            if (seen[u]) continue;
            seen[u] = 1;
            in_tree[x.edge_between(v, u)] = 1;
            queue.push(u);
        }
    }
    GroupPresentation p;
    std::vector<int> generator_of(x.edge_count(), -1);
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        if (in_tree[e]) continue;
        generator_of[e] = p.generator_count++;
        p.generator_edge.push_back(e);
    }
    for (FaceId f = 0; f < x.face_count(); ++f) {
        const auto& seq = x.face(f);
        std::vector<int> word;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const VertexId a = seq[i];
            const VertexId b = seq[(i + 1) % seq.size()];
            const int g = generator_of[x.edge_between(a, b)];
            if (g >= 0) word.push_back(a < b ? g + 1 : -(g + 1));
        }
        p.relators.push_back(cyclic_reduce(word));
    }
    return p;
}

struct TietzeResult {
    GroupPresentation presentation;  // what is left
    int remaining_generators = 0;
    int moves = 0;
    bool trivial = false;
};

inline constexpr int kDefaultTietzeBudget = 10'000;

/// Repeatedly picks the shortest relator in which some generator occurs exactly once, solves
/// for that generator, substitutes it everywhere and drops both. Each elimination and each
/// substitution into a relator costs one move.
inline TietzeResult simplify_presentation(GroupPresentation p, int max_moves = kDefaultTietzeBudget,
                                          std::size_t max_relator_length = 100'000) {
    TietzeResult out;
    std::vector<char> alive(p.generator_count, 1);
    int remaining = p.generator_count;
    while (true) {
        std::vector<std::vector<int>> kept;
        for (auto& r : p.relators) {
            auto c = cyclic_reduce(r);
            if (!c.empty()) kept.push_back(std::move(c));
        }
        p.relators = std::move(kept);
        if (remaining == 0) break;

        std::vector<std::size_t> by_length(p.relators.size());
        for (std::size_t i = 0; i < by_length.size(); ++i) by_length[i] = i;
        std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
            return p.relators[a].size() < p.relators[b].size();
        });
        std::size_t pick = p.relators.size();
        int letter_pos = -1;
        for (std::size_t ri : by_length) {
            const auto& r = p.relators[ri];
            std::vector<int> count(p.generator_count, 0);
            for (int l : r) ++count[std::abs(l) - 1];
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (count[std::abs(r[i]) - 1] == 1) {
                    letter_pos = static_cast<int>(i);
                    break;
                }
            }
            if (letter_pos >= 0) {
                pick = ri;
                break;
            }
        }
        if (pick == p.relators.size()) break;
        if (out.moves + 1 > max_moves) break;
        ++out.moves;

        auto r = p.relators[pick];
        std::rotate(r.begin(), r.begin() + letter_pos, r.end());
        const int letter = r.front();
        const int g = std::abs(letter) - 1;
        const std::vector<int> rest(r.begin() + 1, r.end());
        // letter * rest = 1, so the generator equals rest^-1 (or rest, for an inverse letter)
        const std::vector<int> image = letter > 0 ? inverse_word(rest) : rest;
        const std::vector<int> image_inv = inverse_word(image);
        p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(pick));
        alive[g] = 0;
        --remaining;

        bool over_budget = false;
        for (auto& rel : p.relators) {
            if (std::none_of(rel.begin(), rel.end(), [&](int l) { return std::abs(l) - 1 == g; })) continue;
            if (out.moves + 1 > max_moves) {
                over_budget = true;
                break;
            }
            ++out.moves;
            std::vector<int> next;
            for (int l : rel) {
                if (l == g + 1) next.insert(next.end(), image.begin(), image.end());
                else if (l == -(g + 1)) next.insert(next.end(), image_inv.begin(), image_inv.end());
                else next.push_back(l);
            }
            rel = free_reduce(next);
            if (rel.size() > max_relator_length) over_budget = true;
        }
        if (over_budget) {
            // the elimination is incomplete; report the generator as still present
            alive[g] = 1;
            ++remaining;
            break;
        }
    }
    out.remaining_generators = remaining;
    out.trivial = remaining == 0;
    out.presentation = std::move(p);
    return out;
}

enum class Verdict { Proven, Disproven, Unknown };

constexpr const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Proven: return "Proven";
        case Verdict::Disproven: return "Disproven";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

struct SimpleConnectivity {
    Verdict verdict = Verdict::Unknown;
    HomologyGroup h1;
    int generators = 0;
    int remaining_generators = 0;
    int moves = 0;
};

/// Disproven when H1 is nontrivial; Proven when the presentation collapses within the move
/// budget; Unknown otherwise.
inline SimpleConnectivity is_simply_connected(const Complex2& x, int max_moves = kDefaultTietzeBudget) {
    SimpleConnectivity out;
    out.h1 = h1(x);
    auto p = fundamental_group_presentation(x);
    out.generators = p.generator_count;
    if (!out.h1.trivial()) {
        out.verdict = Verdict::Disproven;
        out.remaining_generators = p.generator_count;
        return out;
    }
    const auto t = simplify_presentation(std::move(p), max_moves);
    out.moves = t.moves;
    out.remaining_generators = t.remaining_generators;
    out.verdict = t.trivial ? Verdict::Proven : Verdict::Unknown;
    return out;
}

} // namespace whitney
