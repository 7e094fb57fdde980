#pragma once

// Named example complexes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whitney/complex.hpp"
#include "whitney/cx2.hpp"
#include "whitney/rotation.hpp"

namespace whitney::gallery {

inline Complex2 tetrahedron() {
    return Complex2::build({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "d", "b"}, {"a", "c", "d"}, {"b", "d", "c"}});
}

inline Complex2 octahedron() {
    return Complex2::build({"n", "s", "0", "1", "2", "3"},
                           {{"n", "0", "1"}, {"n", "1", "2"}, {"n", "2", "3"}, {"n", "3", "0"},
                            {"s", "1", "0"}, {"s", "2", "1"}, {"s", "3", "2"}, {"s", "0", "3"}});
}

/// Apex 0, upper ring 1..5, lower ring 6..10, bottom 11.
inline Complex2 icosahedron() {
    std::vector<std::string> names;
    for (int i = 0; i < 12; ++i) names.push_back(std::to_string(i));
    std::vector<std::vector<VertexId>> faces;
    auto up = [](int i) { return 1 + (i % 5); };
    auto low = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, up(i), up(i + 1)});
        faces.push_back({up(i), low(i), up(i + 1)});
        faces.push_back({up(i + 1), low(i), low(i + 1)});
        faces.push_back({11, low(i + 1), low(i)});
    }
    return Complex2::from_indices(std::move(names), std::move(faces));
}

/// Three triangles sharing the edge ab.
inline Complex2 book3() {
    return Complex2::build({"a", "b", "c", "d", "e"}, {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}});
}

/// Two tetrahedron boundaries glued along the edge uv.
inline Complex2 glued_tetrahedra() {
    return Complex2::build({"u", "v", "a", "b", "c", "d"},
                           {{"u", "v", "a"}, {"u", "v", "b"}, {"u", "a", "b"}, {"v", "a", "b"},
                            {"u", "v", "c"}, {"u", "v", "d"}, {"u", "c", "d"}, {"v", "c", "d"}});
}

/// At u->v the faces of one tetrahedron stay together: (uva, uvb, uvc, uvd).
inline RotationSystem glued_tetrahedra_rotation(const Complex2& x) {
    const VertexId u = *x.find_vertex("u");
    const VertexId v = *x.find_vertex("v");
    return validate_rotation(x, {{{u, v}, {0, 1, 4, 5}}});
}

/// Seven-vertex triangulation of the torus.
inline Complex2 csaszar_torus() {
    std::vector<std::string> names;
    for (int i = 0; i < 7; ++i) names.push_back(std::to_string(i));
    std::vector<std::vector<VertexId>> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return Complex2::from_indices(std::move(names), std::move(faces));
}

/// Cone over the complete graph on five vertices: link of the apex is K5.
inline Complex2 cone_k5() {
    std::vector<std::string> names{"o", "0", "1", "2", "3", "4"};
    std::vector<std::vector<VertexId>> faces;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) faces.push_back({0, i, j});
    return Complex2::from_indices(std::move(names), std::move(faces));
}

/// Two tetrahedron boundaries joined by a triangulated tube between the triangles a1a2a3 and
/// b1b2b3; G(X) is the two triangles, which are disjoint.
inline Complex2 tube_joined_spheres() {
    std::vector<std::string> names{"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"};
    std::vector<std::vector<VertexId>> faces{{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2},
                                             {4, 5, 6}, {4, 7, 5}, {4, 6, 7}, {5, 7, 6}};
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        faces.push_back({i, j, 4 + i});
        faces.push_back({j, 4 + j, 4 + i});
    }
    return Complex2::from_indices(std::move(names), std::move(faces));
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> all{"tetrahedron",  "octahedron",     "icosahedron", "book3",
                                              "glued-tetrahedra", "csaszar-torus", "cone-k5",
                                              "tube-joined-spheres"};
    return all;
}

/// The named complex with its fixed rotation system, if it carries one.
inline std::optional<Cx2Document> lookup(std::string_view name) {
    if (name == "tetrahedron") return Cx2Document{tetrahedron(), std::nullopt};
    if (name == "octahedron") return Cx2Document{octahedron(), std::nullopt};
    if (name == "icosahedron") return Cx2Document{icosahedron(), std::nullopt};
    if (name == "book3") return Cx2Document{book3(), std::nullopt};
    if (name == "glued-tetrahedra") {
        auto x = glued_tetrahedra();
        auto sigma = glued_tetrahedra_rotation(x);
        return Cx2Document{std::move(x), std::move(sigma)};
    }
    if (name == "csaszar-torus") return Cx2Document{csaszar_torus(), std::nullopt};
    if (name == "cone-k5") return Cx2Document{cone_k5(), std::nullopt};
    if (name == "tube-joined-spheres") return Cx2Document{tube_joined_spheres(), std::nullopt};
    return std::nullopt;
}

} // namespace whitney::gallery
