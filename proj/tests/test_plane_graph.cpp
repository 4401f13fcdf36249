#include "dpr/generators.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dpr;
using dpr::test::graph_of;

namespace {

PlaneGraph four_cycle()
{
    return graph_of({{"a", {"b", "d"}}, {"b", {"c", "a"}}, {"c", {"d", "b"}}, {"d", {"a", "c"}}});
}

int euler(const PlaneGraph& g) { return g.num_vertices() - g.num_edges() + g.num_faces(); }

std::vector<std::size_t> face_lengths(const PlaneGraph& g)
{
    std::vector<std::size_t> out;
    for (const auto& f : g.faces())
        out.push_back(f.darts.size());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("a 4-cycle has two faces")
{
    auto g = four_cycle();
    CHECK(g.num_faces() == 2);
    CHECK(euler(g) == 2);
    CHECK(g.embedded());
}

TEST_CASE("a single edge has one face")
{
    auto g = graph_of({{"a", {"b"}}, {"b", {"a"}}});
    CHECK(g.num_faces() == 1);
    CHECK(euler(g) == 2);
}

TEST_CASE("no rotation system of K5 is planar")
{
    // 6 cyclic orders per vertex, 6^5 systems in all
    std::vector<std::string> names{"0", "1", "2", "3", "4"};
    int accepted = 0, tried = 0;
    std::vector<std::vector<Vertex>> base(5);
    for (int v = 0; v < 5; ++v)
        for (int u = 0; u < 5; ++u)
            if (u != v)
                base[v].push_back(u);
    std::vector<int> choice(5, 0);
    for (int code = 0; code < 7776; ++code) {
        int c = code;
        auto rot = base;
        for (int v = 0; v < 5; ++v) {
            int perm = c % 6;
            c /= 6;
            for (int p = 0; p < perm; ++p)
                std::next_permutation(rot[v].begin() + 1, rot[v].end());
        }
        ++tried;
        try {
            make_graph(names, rot, true);
            ++accepted;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotPlanarEmbedding);
        }
    }
    CHECK(tried == 7776);
    CHECK(accepted == 0);
}

TEST_CASE("malformed rotations are rejected")
{
    std::vector<std::string> names{"a", "b", "c"};
    CHECK_THROWS_AS(make_graph(names, {{1}, {}, {}}), Error);
    try {
        make_graph(names, {{1}, {}, {}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AsymmetricRotation);
    }
    try {
        make_graph(names, {{1, 1}, {0, 0}, {}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MultiEdgeOrLoop);
    }
    try {
        make_graph(names, {{0}, {}, {}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MultiEdgeOrLoop);
    }
}

TEST_CASE("disconnected graphs satisfy Euler per component")
{
    auto g = graph_of({{"a", {"b"}}, {"b", {"a"}}, {"c", {"d"}}, {"d", {"c"}}});
    CHECK(g.num_components() == 2);
    CHECK(g.num_faces() == 2);
}

TEST_CASE("random plane graphs: dart partition, Euler, relabeling")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        int n = 3 + static_cast<int>(rng() % 12);
        PlaneGraph g = random_plane_graph(rng, n, static_cast<int>(rng() % 6));
        std::size_t darts = 0;
        for (const auto& f : g.faces())
            darts += f.darts.size();
        CHECK(darts == static_cast<std::size_t>(2 * g.num_edges()));
        CHECK(euler(g) == 1 + g.num_components());

        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> names(n);
        std::vector<std::vector<Vertex>> rot(n);
        for (Vertex v = 0; v < n; ++v) {
            names[perm[v]] = g.name(v);
            for (Vertex u : g.rotation(v))
                rot[perm[v]].push_back(perm[u]);
        }
        PlaneGraph h = make_graph(names, rot, true);
        CHECK(face_lengths(h) == face_lengths(g));
    }
}

TEST_CASE("left face convention")
{
    auto g = four_cycle();
    int f = g.left_face(g.at("a"), g.at("b"));
    const auto& walk = g.face(f).walk;
    auto it = std::find(walk.begin(), walk.end(), g.at("a"));
    REQUIRE(it != walk.end());
    auto next = std::next(it) == walk.end() ? walk.begin() : std::next(it);
    CHECK(*next == g.at("b"));
    CHECK(g.left_face(g.at("a"), g.at("b")) != g.right_face(g.at("a"), g.at("b")));
}

TEST_CASE("classification")
{
    auto g = four_cycle();
    auto one = classify_instance(g, Terminals::from_pairs({{g.at("a"), g.at("c")}, {g.at("b"), g.at("d")}}));
    CHECK(one.kind == InstanceKind::OneFace);

    auto cyl = gen_cylinder(2, 8, 2, 0, 0);
    CHECK(cyl.instance.kind == InstanceKind::TwoFace);
    auto again = classify_instance(cyl.instance.graph, cyl.instance.terminals);
    CHECK(again.kind == InstanceKind::TwoFace);

    auto path = graph_of({{"a", {"b"}}, {"b", {"a", "c"}}, {"c", {"b"}}});
    auto st = classify_instance(path, Terminals::from_st(path.at("a"), path.at("c"), 2));
    CHECK(st.kind == InstanceKind::St);

    CHECK_THROWS_AS(classify_instance(g, Terminals::from_pairs({{0, 1}, {1, 2}})), Error);
    CHECK_THROWS_AS(classify_instance(g, Terminals::from_pairs({{0, 9}})), Error);
}

TEST_CASE("induced subgraph keeps rotation order")
{
    auto cyl = gen_cylinder(2, 6, 2, 0, 0);
    const auto& g = cyl.instance.graph;
    std::vector<Vertex> keep{0, 1, 2, 6, 7, 8};
    std::vector<Vertex> map;
    PlaneGraph h = g.induced(keep, &map);
    CHECK(h.num_vertices() == 6);
    for (Vertex v : keep) {
        std::vector<Vertex> expect;
        for (Vertex u : g.rotation(v))
            if (map[u] >= 0)
                expect.push_back(map[u]);
        CHECK(h.rotation(map[v]) == expect);
    }
    CHECK(euler(h) == 2);
}

TEST_CASE("dot export keeps rotations")
{
    auto g = four_cycle();
    std::string dot = to_dot(g);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
    CHECK(dot.find("rotation: b d") != std::string::npos);
}
