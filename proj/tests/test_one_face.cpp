#include "dpr/generators.hpp"
#include "dpr/one_face.hpp"
#include "dpr/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace dpr;
using dpr::test::graph_of;
using dpr::test::path_of;

TEST_CASE("random one-face instances are reconfigurable within 2k steps")
{
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        int k = 1 + static_cast<int>(rng() % 3);
        auto gi = random_one_face(rng, 4 + static_cast<int>(rng() % 9), k);
        if (!gi)
            continue;
        ++checked;
        CHECK(gi->instance.kind == InstanceKind::OneFace);
        CHECK(decide_one_face(gi->instance, gi->P, gi->Q));
        CHECK(oracle_decide(gi->instance, gi->P, gi->Q));
        auto seq = sequence_one_face(gi->instance, gi->P, gi->Q);
        CHECK(verify_sequence(gi->instance, seq).ok);
        CHECK(seq.front() == gi->P);
        CHECK(seq.back() == gi->Q);
        CHECK(static_cast<int>(seq.size()) <= 2 * k + 1);
    }
    CHECK(checked > 80);
}

TEST_CASE("trivial one-face cases")
{
    // square a b c d with chord a-c, pendant x at b and y at d
    std::vector<std::string> names{"a", "b", "c", "d", "x", "y"};
    std::vector<std::vector<Vertex>> adj{{1, 2, 3}, {0, 2, 4}, {0, 1, 3}, {0, 2, 5}, {1}, {3}};
    auto g = make_graph(names, rotation_from_positions(adj, {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {-1, 1}, {2, 0}}));
    auto inst = classify_instance(g, Terminals::from_pairs({{g.at("x"), g.at("y")}}));
    REQUIRE(inst.kind == InstanceKind::OneFace);
    Linkage P{path_of(g, {"x", "b", "a", "d", "y"})};
    Linkage Q{path_of(g, {"x", "b", "c", "d", "y"})};
    CHECK(decide_one_face(inst, P, Q));
    CHECK(sequence_one_face(inst, P, P).size() == 1);
    auto seq = sequence_one_face(inst, P, Q);
    CHECK(seq.size() == 2);
    CHECK(verify_sequence(inst, seq).ok);
}

TEST_CASE("non one-face input is rejected")
{
    auto cyl = gen_cylinder(2, 8, 2, 0, 0);
    CHECK_THROWS_AS(decide_one_face(cyl.instance, cyl.P, cyl.Q), Error);
    std::mt19937_64 rng(1);
    std::optional<GeneratedInstance> gi;
    while (!gi)
        gi = random_one_face(rng, 8, 2);
    Linkage broken = gi->P;
    broken[0] = {broken[0].front()};
    CHECK_THROWS_AS(decide_one_face(gi->instance, broken, gi->Q), Error);
}
