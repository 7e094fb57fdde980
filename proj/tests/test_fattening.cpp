#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "whitney/fattening.hpp"
#include "whitney/gallery.hpp"

using namespace whitney;

namespace {

struct Recount {
    int related_pairs = 0;
    int disks = 0;
};

// Related pairs straight from the definition, and disks as orbits of the walk step at each vertex.
Recount recount(const Complex2& x, const RotationSystem& sigma) {
    Recount r;
    const int dfs = 2 * x.face_count();
    auto consecutive = [&](DirectedFaceId d, VertexId a, VertexId b) {
        const auto seq = directed_sequence(x, d);
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (seq[i] == a && seq[(i + 1) % seq.size()] == b) return true;
        return false;
    };
    auto related = [&](DirectedFaceId f, DirectedFaceId g, VertexId a, VertexId b) {
        return consecutive(f, a, b) && consecutive(g, b, a) && sigma.successor(x, a, b, face_of(f)) == face_of(g);
    };
    for (const auto& e : x.edges())
        for (DirectedFaceId f = 0; f < dfs; ++f)
            for (DirectedFaceId g = 0; g < dfs; ++g)
                for (auto [a, b] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) r.related_pairs += related(f, g, a, b);
    r.related_pairs /= 2;

    for (VertexId w = 0; w < x.vertex_count(); ++w) {
        std::set<DirectedFaceId> left;
        for (DirectedFaceId d = 0; d < dfs; ++d)
            for (VertexId v : x.face(face_of(d))) left.insert(v == w ? d : -1);
        left.erase(-1);
        while (!left.empty()) {
            ++r.disks;
            DirectedFaceId cur = *left.begin();
            while (left.erase(cur)) {
                const auto seq = directed_sequence(x, cur);
                const auto it = std::find(seq.begin(), seq.end(), w);
                const VertexId u = *(std::next(it) == seq.end() ? seq.begin() : std::next(it));
                for (DirectedFaceId g = 0; g < dfs; ++g)
                    if (related(cur, g, w, u)) cur = g;
            }
        }
    }
    return r;
}

std::set<std::pair<VertexId, VertexId>> boundary_pairs(const Complex2& c) {
    std::set<std::pair<VertexId, VertexId>> out;
    for (const auto& f : c.faces())
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto a = f[i], b = f[(i + 1) % f.size()];
            out.insert({std::min(a, b), std::max(a, b)});
        }
    return out;
}

FatComplex fat_of(const Complex2& x) {
    return fatten(x, enumerate_planar_rotation_systems(x, EnumerationMethod::Propagation).systems.at(0));
}

} // namespace

TEST_CASE("fattening counts") {
    SECTION("tetrahedron") {
        const auto fat = fat_of(gallery::tetrahedron());
        CHECK(fat.carrier.vertex_count() == 12);
        CHECK(fat.carrier.edge_count() == 26);
        CHECK(fat.carrier.face_count() == 24);
        CHECK(fat.disks.size() == 8);
        CHECK(fat.rectangles.size() == 12);
    }
    SECTION("octahedron") {
        const auto fat = fat_of(gallery::octahedron());
        CHECK(fat.carrier.vertex_count() == 18);
        CHECK(fat.carrier.edge_count() == 48);
        CHECK(fat.carrier.face_count() == 48);
    }
    SECTION("independent recount for the simplicial Whitney gallery") {
        for (auto name : {"tetrahedron", "octahedron", "icosahedron", "csaszar-torus"}) {
            const auto x = gallery::lookup(name)->complex;
            const auto fat = fat_of(x);
            const auto rc = recount(x, fat.base_rotation);
            INFO(name);
            CHECK(fat.carrier.vertex_count() == x.vertex_count() + rc.disks);
            CHECK(fat.carrier.face_count() == 3 * x.face_count() + rc.related_pairs);
            CHECK(static_cast<int>(boundary_pairs(fat.carrier).size()) ==
                  x.edge_count() + rc.related_pairs + rc.disks);
            CHECK(fat.carrier.edge_count() == static_cast<int>(boundary_pairs(fat.carrier).size()));
        }
    }
}

TEST_CASE("fattening provenance") {
    const auto x = gallery::tetrahedron();
    const auto fat = fat_of(x);
    const auto& c = fat.carrier;
    for (int i = 0; i < static_cast<int>(fat.disks.size()); ++i) {
        CHECK(fat.vertex_disk[fat.disk_vertex[i]] == i);
        CHECK(c.name(fat.disk_vertex[i]).rfind("d:", 0) == 0);
    }
    for (FaceId f = 0; f < x.face_count(); ++f) CHECK(c.face(f) == x.face(f));
    for (DirectedFaceId d = 0; d < 2 * x.face_count(); ++d) {
        const FaceId h = fat.mirror_face[d];
        CHECK(fat.face_origin[h].kind == FatFaceKind::Mirror);
        CHECK(fat.face_origin[h].index == d);
        // each corner of h_f is the disk vertex at the matching corner of f
        const auto seq = directed_sequence(x, d);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const auto& disk = fat.disks[fat.vertex_disk[c.face(h)[i]]];
            CHECK(disk.anchor == seq[i]);
            CHECK(std::count(disk.faces.begin(), disk.faces.end(), d) == 1);
        }
    }
    for (const auto& r : fat.rectangles) {
        CHECK(c.face(r.face) == std::vector<VertexId>{r.u, r.w, fat.disk_vertex[r.disk_w], fat.disk_vertex[r.disk_u]});
        CHECK(fat.disks[r.disk_u].anchor == r.u);
        CHECK(fat.disks[r.disk_w].anchor == r.w);
        CHECK(r.f < r.h);
    }
    for (std::size_t i = 1; i < fat.rectangles.size(); ++i) {
        const auto& a = fat.rectangles[i - 1];
        const auto& b = fat.rectangles[i];
        CHECK(std::tie(a.edge, a.f, a.h) < std::tie(b.edge, b.f, b.h));
    }
}

TEST_CASE("induced rotation of the fattening") {
    const auto fat = fat_of(gallery::tetrahedron());
    const auto& c = fat.carrier;
    const auto sigma = induced_fat_rotation(fat);
    const auto report = is_planar_rotation_system(c, sigma);
    CHECK(report.planar);
    CHECK(report.link_genus == std::vector<int>(12, 0));

    // original edge: (f, R, g, R')
    const auto orig = sigma.cycle(c, 0, 1);
    REQUIRE(orig.size() == 4);
    CHECK(fat.face_origin[orig[0]].kind == FatFaceKind::Original);
    CHECK(fat.face_origin[orig[1]].kind == FatFaceKind::Rectangle);
    CHECK(fat.face_origin[orig[2]].kind == FatFaceKind::Original);
    CHECK(fat.face_origin[orig[3]].kind == FatFaceKind::Rectangle);

    // vertical edge: three rectangles
    const auto vertical = sigma.cycle(c, fat.disk_vertex[0], fat.disks[0].anchor);
    CHECK(vertical.size() == 3);
    for (FaceId f : vertical) CHECK(fat.face_origin[f].kind == FatFaceKind::Rectangle);

    // h-edge: two mirrors and the rectangle
    const auto& r = fat.rectangles.front();
    const auto hcyc = sigma.cycle(c, fat.disk_vertex[r.disk_u], fat.disk_vertex[r.disk_w]);
    CHECK(hcyc.size() == 3);
    CHECK(std::count(hcyc.begin(), hcyc.end(), r.face) == 1);
    CHECK(std::count(hcyc.begin(), hcyc.end(), fat.mirror_face[r.f]) == 1);
    CHECK(std::count(hcyc.begin(), hcyc.end(), fat.mirror_face[r.h]) == 1);
}

TEST_CASE("verifying the fattening") {
    SECTION("tetrahedron") {
        const auto fat = fat_of(gallery::tetrahedron());
        const auto sigma = induced_fat_rotation(fat);
        const auto r = verify_fat(fat, sigma);
        CHECK(r.ok());
        CHECK(r.s_fat == 2);
        CHECK(r.t_f == 8);
        CHECK(r.directed_faces_covered == 48);
        CHECK(r.carrier_whitney);
        CHECK(r.base_simply_connected);
        for (const auto& s : r.surfaces) {
            CHECK(s.stats.sphere);
            if (s.type.tag == FatSurfaceTag::TF) {
                CHECK(s.stats.disks == 6);
                CHECK(s.stats.pairs == 9);
                CHECK(s.stats.faces == 5);
            }
        }
        const auto& c = fat.carrier;
        for (VertexId v = 0; v < c.vertex_count(); ++v) {
            const auto link = link_graph(c, v);
            if (fat.vertex_disk[v] >= 0) {
                // W3 = K4
                CHECK(link.graph.vertex_count() == 4);
                CHECK(link.graph.edge_count() == 6);
                CHECK(classify_unique_embeddability(link.graph).tag == EmbeddingTag::UniqueA);
            } else {
                // triangle plus two apexes joined to all of it
                CHECK(link.graph.vertex_count() == 5);
                CHECK(link.graph.edge_count() == 9);
                CHECK(is_k_connected(link.graph, 3));
            }
        }
    }
    SECTION("octahedron") {
        const auto fat = fat_of(gallery::octahedron());
        const auto r = verify_fat(fat, induced_fat_rotation(fat));
        CHECK(r.ok());
        CHECK(r.s_fat == 2);
        CHECK(r.t_f == 16);
        CHECK(r.carrier_whitney);
    }
    SECTION("torus: surfaces classify, spheres are not required") {
        const auto fat = fat_of(gallery::csaszar_torus());
        const auto r = verify_fat(fat, induced_fat_rotation(fat));
        CHECK_FALSE(r.base_simply_connected);
        CHECK(r.ok());
        CHECK(r.s_fat == 2);
        CHECK(r.t_f == 28);
        int torus_like = 0;
        for (const auto& s : r.surfaces) torus_like += s.stats.euler == 0;
        CHECK(torus_like == 2);
    }
    SECTION("wheels") {
        Multigraph w(5);
        for (int i = 1; i <= 4; ++i) w.add_edge(0, i), w.add_edge(i, i % 4 + 1);
        CHECK(is_wheel(w, 0));
        CHECK_FALSE(is_wheel(w, 1));
        Multigraph two_rims(7);
        for (int i = 1; i <= 6; ++i) two_rims.add_edge(0, i);
        for (int i : {1, 4}) two_rims.add_edge(i, i + 1), two_rims.add_edge(i + 1, i + 2), two_rims.add_edge(i + 2, i);
        CHECK_FALSE(is_wheel(two_rims, 0));
    }
}

TEST_CASE("fattening preconditions") {
    SECTION("not simplicial") {
        const auto sq = Complex2::build({"a", "b", "c", "d", "e"},
                                        {{"a", "b", "c", "d"}, {"a", "b", "e"}, {"b", "c", "e"}, {"c", "d", "e"},
                                         {"d", "a", "e"}});
        try {
            fatten(sq, *forced_rotation(sq));
            FAIL("expected NotSimplicial");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotSimplicial);
        }
    }
    SECTION("not locally 2-connected") {
        const auto doc = *gallery::lookup("glued-tetrahedra");
        try {
            fatten(doc.complex, *doc.rotation);
            FAIL("expected NotLocally2Connected");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotLocally2Connected);
        }
    }
    SECTION("non-planar rotation") {
        // two tetrahedra sharing the triangle abc, which stays as a face
        const auto x = Complex2::build({"a", "b", "c", "p", "q"}, {{"a", "b", "p"}, {"b", "c", "p"}, {"c", "a", "p"},
                                                                   {"a", "b", "q"}, {"b", "c", "q"}, {"c", "a", "q"},
                                                                   {"a", "b", "c"}});
        REQUIRE(is_locally_2_connected(x));
        std::optional<RotationSystem> bad;
        for (int mask = 0; mask < 8 && !bad; ++mask) {
            RawRotation raw;
            const std::vector<std::pair<std::pair<VertexId, VertexId>, std::vector<FaceId>>> spokes{
                {{0, 1}, {0, 3, 6}}, {{1, 2}, {1, 4, 6}}, {{0, 2}, {2, 5, 6}}};
            for (int i = 0; i < 3; ++i) {
                auto cyc = spokes[i].second;
                if (mask >> i & 1) std::swap(cyc[1], cyc[2]);
                raw[spokes[i].first] = cyc;
            }
            const auto sigma = validate_rotation(x, raw);
            if (!is_planar_rotation_system(x, sigma).planar) bad = sigma;
        }
        REQUIRE(bad);
        try {
            fatten(x, *bad);
            FAIL("expected NonPlanarRotation");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonPlanarRotation);
        }
    }
}
