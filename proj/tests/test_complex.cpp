#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "whitney/complex.hpp"
#include "whitney/gallery.hpp"

using namespace whitney;

namespace {

ErrorCode build_error(std::vector<std::string> names, std::vector<std::vector<std::string>> faces) {
    try {
        Complex2::build(std::move(names), faces);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::SchemaError;
}

std::set<std::string> link_vertex_names(const LinkGraph& l) {
    return {l.graph.labels().begin(), l.graph.labels().end()};
}

} // namespace

TEST_CASE("building complexes") {
    SECTION("single triangle") {
        const auto x = Complex2::build({"a", "b", "c"}, {{"a", "b", "c"}});
        CHECK(x.edge_count() == 3);
        CHECK(x.face_count() == 1);
        CHECK(euler_characteristic(x) == 1);
    }
    SECTION("tetrahedron boundary") {
        const auto x = gallery::tetrahedron();
        CHECK(x.vertex_count() == 4);
        CHECK(x.edge_count() == 6);
        CHECK(x.face_count() == 4);
        CHECK(euler_characteristic(x) == 2);
        CHECK(x.is_simplicial());
    }
    SECTION("edges are sorted endpoint pairs") {
        const auto x = gallery::octahedron();
        for (EdgeId e = 0; e + 1 < x.edge_count(); ++e) {
            CHECK(x.edge(e).a < x.edge(e).b);
            CHECK(std::pair(x.edge(e).a, x.edge(e).b) < std::pair(x.edge(e + 1).a, x.edge(e + 1).b));
        }
    }
    SECTION("errors") {
        CHECK(build_error({"a", "b", "c"}, {{"a", "b", "a", "c"}}) == ErrorCode::RepeatedVertexInFace);
        CHECK(build_error({"a", "b", "c"}, {{"a", "a", "b"}}) == ErrorCode::LoopEdge);
        CHECK(build_error({"a", "b", "c"}, {{"a", "b", "z"}}) == ErrorCode::UnknownVertex);
        CHECK(build_error({"a", "b"}, {{"a", "b"}}) == ErrorCode::FaceTooShort);
        CHECK(build_error({"a", "a", "b"}, {{"a", "b", "a"}}) == ErrorCode::DuplicateVertex);
        CHECK(build_error({"a", "b", "c", "d"}, {{"a", "b", "c"}}) == ErrorCode::IsolatedVertex);
    }
    SECTION("non-simplicial regular complex") {
        // two triangles on the same vertex set
        const auto x = Complex2::build({"a", "b", "c"}, {{"a", "b", "c"}, {"a", "c", "b"}});
        CHECK_FALSE(x.is_simplicial());
        const auto sq = Complex2::build({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
        CHECK_FALSE(sq.is_simplicial());
    }
}

TEST_CASE("link graphs") {
    SECTION("tetrahedron: a triangle on the other three vertices") {
        const auto x = gallery::tetrahedron();
        for (VertexId v = 0; v < 4; ++v) {
            const auto l = link_graph(x, v);
            CHECK(l.graph.vertex_count() == 3);
            CHECK(l.graph.edge_count() == 3);
            CHECK(l.graph.is_simple());
            CHECK_FALSE(link_vertex_names(l).count(x.name(v)));
        }
    }
    SECTION("glued tetrahedra at u: two triangles sharing v") {
        const auto x = gallery::glued_tetrahedra();
        const auto l = link_graph(x, *x.find_vertex("u"));
        CHECK(l.graph.vertex_count() == 5);
        CHECK(l.graph.edge_count() == 6);
        const auto cut = find_cut_vertex(l.graph);
        REQUIRE(cut);
        CHECK(l.graph.label(*cut) == "v");
    }
    SECTION("single triangle at a: the edge bc") {
        const auto x = Complex2::build({"a", "b", "c"}, {{"a", "b", "c"}});
        const auto l = link_graph(x, 0);
        CHECK(l.graph.edge_count() == 1);
        CHECK(link_vertex_names(l) == std::set<std::string>{"b", "c"});
        CHECK(l.face_of_edge.front() == 0);
    }
    SECTION("unknown vertex") {
        CHECK_THROWS_AS(link_graph(gallery::tetrahedron(), 9), Error);
    }
    SECTION("handshake over links") {
        for (const auto& name : gallery::names()) {
            const auto x = gallery::lookup(name)->complex;
            int degree_sum = 0, boundary = 0;
            for (VertexId v = 0; v < x.vertex_count(); ++v) {
                const auto l = link_graph(x, v);
                for (int u = 0; u < l.graph.vertex_count(); ++u) degree_sum += l.graph.degree(u);
            }
            for (const auto& f : x.faces()) boundary += static_cast<int>(f.size());
            CHECK(degree_sum == 2 * boundary);
        }
    }
}

TEST_CASE("G(X) and Y(X)") {
    CHECK(g_subgraph(gallery::tetrahedron()).graph.edge_count() == 0);
    CHECK(y_vertices(gallery::tetrahedron()).empty());
    CHECK(y_vertices(gallery::csaszar_torus()).empty());

    const auto book = gallery::book3();
    const auto g = g_subgraph(book);
    CHECK(g.graph.edge_count() == 1);
    CHECK(y_vertices(book) == std::vector<VertexId>{0, 1});

    const auto tube = g_subgraph(gallery::tube_joined_spheres());
    CHECK(tube.graph.edge_count() == 6);
    CHECK(component_count(tube.graph) == 2);

    for (const auto& name : gallery::names()) {
        const auto x = gallery::lookup(name)->complex;
        const auto sub = g_subgraph(x);
        int heavy = 0;
        for (EdgeId e = 0; e < x.edge_count(); ++e) heavy += x.faces_on_edge(e).size() >= 3;
        CHECK(sub.graph.edge_count() == heavy);
        if (check_whitney(x).is_whitney) {
            auto ys = y_vertices(x);
            std::vector<VertexId> covered = sub.vertex_of;
            std::sort(covered.begin(), covered.end());
            CHECK(ys == covered);
        }
    }
}

TEST_CASE("Whitney recognition") {
    SECTION("tetrahedron") {
        const auto r = check_whitney(gallery::tetrahedron());
        CHECK(r.is_whitney);
        CHECK(r.g_edges == 0);
        CHECK(r.g_connected);
        for (const auto& l : r.links) CHECK(l.clause == "cycle");
    }
    SECTION("glued tetrahedra: cut vertex in the link of u and v") {
        const auto x = gallery::glued_tetrahedra();
        const auto r = check_whitney(x);
        CHECK_FALSE(r.is_whitney);
        const auto bad = r.failing_links();
        REQUIRE(bad.size() == 2);
        CHECK(r.links[bad[0]].clause == "cut vertex v");
        CHECK(r.links[bad[1]].clause == "cut vertex u");
    }
    SECTION("tube-joined spheres: links fine, G(X) disconnected") {
        const auto r = check_whitney(gallery::tube_joined_spheres());
        CHECK_FALSE(r.is_whitney);
        CHECK(r.failing_links().empty());
        CHECK(r.g_components == 2);
    }
    SECTION("cone over K5: apex link nonplanar") {
        const auto r = check_whitney(gallery::cone_k5());
        CHECK_FALSE(r.is_whitney);
        CHECK(r.links[0].clause == "nonplanar");
    }
    SECTION("book: spine links are stars") {
        const auto r = check_whitney(gallery::book3());
        CHECK_FALSE(r.is_whitney);
        CHECK(r.links[0].clause.rfind("cut vertex", 0) == 0);
    }
    SECTION("disconnected link") {
        // two triangles meeting only at a
        const auto x = Complex2::build({"a", "b", "c", "d", "e"}, {{"a", "b", "c"}, {"a", "d", "e"}});
        const auto r = check_whitney(x);
        CHECK(r.links[0].clause == "disconnected link");
        CHECK_FALSE(r.is_whitney);
    }
    SECTION("the gallery's Whitney members") {
        for (auto name : {"tetrahedron", "octahedron", "icosahedron", "csaszar-torus"})
            CHECK(check_whitney(gallery::lookup(name)->complex).is_whitney);
    }
}

TEST_CASE("local 2-connectivity") {
    CHECK(is_locally_2_connected(gallery::octahedron()));
    CHECK_FALSE(is_locally_2_connected(gallery::glued_tetrahedra()));
    CHECK_FALSE(is_locally_2_connected(gallery::book3()));
}

TEST_CASE("barycentric subdivision") {
    SECTION("single triangle") {
        const auto s = barycentric_subdivision(Complex2::build({"a", "b", "c"}, {{"a", "b", "c"}}));
        CHECK(s.complex.vertex_count() == 7);
        CHECK(s.complex.face_count() == 6);
        CHECK(s.complex.is_simplicial());
    }
    SECTION("tetrahedron") {
        const auto s = barycentric_subdivision(gallery::tetrahedron());
        CHECK(s.complex.vertex_count() == 14);
        CHECK(s.complex.face_count() == 24);
        CHECK(euler_characteristic(s.complex) == 2);
    }
    SECTION("a square face") {
        const auto s = barycentric_subdivision(Complex2::build({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}}));
        CHECK(s.complex.face_count() == 8);
        CHECK(s.vertex_origin[8] == CellRef{CellKind::Face, 0});
        CHECK(s.complex.name(4) == "m(a,b)");
    }
    SECTION("name collisions get primes") {
        const auto s = barycentric_subdivision(Complex2::build({"c(0)", "b", "x"}, {{"c(0)", "b", "x"}}));
        CHECK(s.complex.find_vertex("c(0)'"));
    }
    SECTION("gallery invariants") {
        for (const auto& name : gallery::names()) {
            const auto x = gallery::lookup(name)->complex;
            const auto s = barycentric_subdivision(x);
            CHECK(s.complex.is_simplicial());
            CHECK(euler_characteristic(s.complex) == euler_characteristic(x));
            CHECK(s.complex.vertex_count() == x.vertex_count() + x.edge_count() + x.face_count());
            CHECK(check_whitney(s.complex).is_whitney == check_whitney(x).is_whitney);
        }
    }
}
