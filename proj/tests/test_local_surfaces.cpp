#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "whitney/gallery.hpp"
#include "whitney/local_surfaces.hpp"

using namespace whitney;

namespace {

RotationSystem some_rotation(const Complex2& x) {
    return enumerate_planar_rotation_systems(x, EnumerationMethod::Oracle).systems.at(0);
}

} // namespace

TEST_CASE("directed face ids") {
    CHECK(directed_face(3, 1) == 7);
    CHECK(face_of(7) == 3);
    CHECK(orientation_of(7) == 1);
    CHECK(reverse_directed(7) == 6);
    const auto t = gallery::tetrahedron();
    CHECK(directed_sequence(t, 1) == std::vector<VertexId>{2, 1, 0});
}

TEST_CASE("pairing laws on the gallery") {
    for (const auto& name : gallery::names()) {
        const auto doc = *gallery::lookup(name);
        const auto& x = doc.complex;
        const auto en = enumerate_planar_rotation_systems(x, EnumerationMethod::Oracle);
        if (en.systems.empty()) continue;
        const auto sigma = doc.rotation ? *doc.rotation : en.systems.front();
        const LocalPairing p(x, sigma);
        INFO(name);
        std::set<DirectedFaceId> covered;
        for (DirectedFaceId d = 0; d < p.directed_face_count(); ++d) {
            for (int j = 0; j < p.slot_count(d); ++j) {
                const Slot s{d, j};
                const Slot q = p.partner(s);
                CHECK(p.partner(q) == s);
                // the partner runs along the same edge in the opposite direction
                const auto [a, b] = p.slot_vertices(s);
                const auto [c, e] = p.slot_vertices(q);
                CHECK(a == e);
                CHECK(b == c);
                CHECK(p.edge(s) == p.edge(q));
            }
        }
        const auto surfaces = local_surfaces(p);
        int total = 0;
        for (const auto& s : surfaces) {
            total += static_cast<int>(s.faces.size());
            for (auto d : s.faces) CHECK(covered.insert(d).second);
            for (const auto& pair : s.pairs) CHECK(s.contains(pair.second));
        }
        CHECK(total == 2 * x.face_count());
        for (std::size_t i = 1; i < surfaces.size(); ++i) CHECK(surfaces[i - 1].faces[0] < surfaces[i].faces[0]);

        for (VertexId w = 0; w < x.vertex_count(); ++w) {
            std::multiset<DirectedFaceId> seen;
            for (const auto& disk : disk_walks_at(p, w))
                for (auto d : disk.faces) seen.insert(d);
            CHECK(seen.size() == 2 * x.faces_at(w).size());
            CHECK(std::set<DirectedFaceId>(seen.begin(), seen.end()).size() == seen.size());
        }
    }
}

TEST_CASE("tetrahedron surfaces") {
    const auto t = gallery::tetrahedron();
    const auto sigma = *forced_rotation(t);
    const auto surfaces = local_surfaces(t, sigma);
    REQUIRE(surfaces.size() == 2);
    for (const auto& s : surfaces) {
        CHECK(s.faces.size() == 4);
        const auto st = surface_stats(t, sigma, s);
        CHECK(st.disks == 4);
        CHECK(st.pairs == 6);
        CHECK(st.faces == 4);
        CHECK(st.euler == 2);
        CHECK(st.sphere);
    }
    for (VertexId w = 0; w < 4; ++w) {
        const auto walks = disk_walks_at(t, sigma, w);
        REQUIRE(walks.size() == 2);
        for (const auto& d : walks) {
            CHECK(d.faces.size() == 3);
            CHECK(is_disk(d));
        }
    }
}

TEST_CASE("torus surfaces") {
    const auto x = gallery::csaszar_torus();
    const auto sigma = *forced_rotation(x);
    const auto surfaces = local_surfaces(x, sigma);
    REQUIRE(surfaces.size() == 2);
    for (const auto& s : surfaces) {
        const auto st = surface_stats(x, sigma, s);
        CHECK(st.disks == 7);
        CHECK(st.pairs == 21);
        CHECK(st.faces == 14);
        CHECK(st.euler == 0);
        CHECK(st.one_disk_per_vertex);
        CHECK_FALSE(st.sphere);
    }
}

TEST_CASE("glued tetrahedra: the exterior walk at the glued vertex is not a disk") {
    const auto doc = *gallery::lookup("glued-tetrahedra");
    const auto& x = doc.complex;
    const auto& sigma = *doc.rotation;
    const VertexId u = *x.find_vertex("u");
    const auto walks = disk_walks_at(x, sigma, u);
    const auto bad = std::find_if(walks.begin(), walks.end(), [](const LocalDisk& d) { return !is_disk(d); });
    REQUIRE(bad != walks.end());
    CHECK(bad->faces.size() == 6);
    CHECK(std::count_if(walks.begin(), walks.end(), [](const LocalDisk& d) { return !is_disk(d); }) == 1);
    std::multiset<VertexId> mediators(bad->mediators.begin(), bad->mediators.end());
    CHECK(mediators.count(*x.find_vertex("v")) == 2);

    // the exterior surface holds the six outer faces at u and the two faces away from it
    const auto surfaces = local_surfaces(x, sigma);
    const auto ext = std::find_if(surfaces.begin(), surfaces.end(),
                                  [&](const LocalSurface& s) { return s.contains(bad->faces.front()); });
    REQUIRE(ext != surfaces.end());
    CHECK(ext->faces.size() == 8);
    for (auto d : bad->faces) CHECK(ext->contains(d));
    const auto st = surface_stats(x, sigma, *ext);
    CHECK_FALSE(st.all_disks_are_disks);
    CHECK_FALSE(st.sphere);
}

TEST_CASE("book: walks at the spine cover all six directed faces") {
    const auto x = gallery::book3();
    const auto sigma = validate_rotation(x, {{{0, 1}, {0, 1, 2}}});
    std::set<DirectedFaceId> seen;
    for (const auto& d : disk_walks_at(x, sigma, 0))
        for (auto f : d.faces) seen.insert(f);
    CHECK(seen.size() == 6);
    int faces = 0;
    for (const auto& s : local_surfaces(x, sigma)) faces += static_cast<int>(s.faces.size());
    CHECK(faces == 6);
}

TEST_CASE("disk criterion on locally 2-connected simplicial complexes") {
    for (const auto& name : gallery::names()) {
        const auto x = gallery::lookup(name)->complex;
        if (!x.is_simplicial() || !is_locally_2_connected(x)) continue;
        const auto en = enumerate_planar_rotation_systems(x, EnumerationMethod::Oracle);
        for (const auto& sigma : en.systems) {
            INFO(name);
            for (const auto& d : all_disk_walks(LocalPairing(x, sigma))) CHECK(is_disk(d));
        }
    }
}

TEST_CASE("is_disk on hand-made walks") {
    CHECK(is_disk(LocalDisk{0, {0, 2, 4}, {1, 2, 3}}));
    CHECK_FALSE(is_disk(LocalDisk{0, {0, 2, 4}, {1, 2, 1}}));
    CHECK_FALSE(is_disk(LocalDisk{0, {0, 2, 0}, {1, 2, 3}}));
}
