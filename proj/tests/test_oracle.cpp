#include "dpr/generators.hpp"
#include "dpr/one_face.hpp"
#include "dpr/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <set>

using namespace dpr;
using dpr::test::graph_of;

namespace {

/// Independent count: pair by pair, depth-first over simple paths avoiding earlier paths.
long long count_linkages(const Instance& inst)
{
    const PlaneGraph& g = inst.graph;
    const int k = inst.k();
    std::vector<char> used(g.num_vertices(), 0);
    for (int i = 0; i < k; ++i) {
        used[inst.source(i)] = 1;
        used[inst.sink(i)] = 1;
    }
    long long total = 0;
    std::function<void(int)> pair = [&](int i) {
        if (i == k) {
            ++total;
            return;
        }
        Vertex t = inst.sink(i);
        std::function<void(Vertex)> walk = [&](Vertex v) {
            for (Vertex u : g.rotation(v)) {
                if (u == t) {
                    pair(i + 1);
                    continue;
                }
                if (used[u])
                    continue;
                used[u] = 1;
                walk(u);
                used[u] = 0;
            }
        };
        walk(inst.source(i));
    };
    pair(0);
    return total;
}

} // namespace

TEST_CASE("a 4-cycle with one pair on opposite corners has two linkages")
{
    auto g = graph_of({{"a", {"b", "d"}}, {"b", {"c", "a"}}, {"c", {"d", "b"}}, {"d", {"a", "c"}}});
    auto inst = classify_instance(g, Terminals::from_pairs({{g.at("a"), g.at("c")}}));
    CHECK(enumerate_linkages(inst).size() == 2);
}

TEST_CASE("linkage counts agree with an independent enumerator")
{
    auto cyl = gen_cylinder(2, 4, 2, 0, 0);
    auto all = enumerate_linkages(cyl.instance);
    CHECK(static_cast<long long>(all.size()) == count_linkages(cyl.instance));
    for (const auto& L : all)
        CHECK(validate_linkage(cyl.instance, L).ok);

    std::mt19937_64 rng(4);
    for (int it = 0; it < 30; ++it) {
        auto gi = random_two_face(rng, 1 + static_cast<int>(rng() % 2), 4 + static_cast<int>(rng() % 3), 2, rng() % 2);
        if (gi)
            CHECK(static_cast<long long>(enumerate_linkages(gi->instance).size()) == count_linkages(gi->instance));
    }
}

TEST_CASE("an infeasible instance has no linkage")
{
    auto g = graph_of({{"s1", {"m"}}, {"s2", {"m"}}, {"m", {"s1", "t1", "s2", "t2"}}, {"t1", {"m"}}, {"t2", {"m"}}});
    auto inst = classify_instance(g, Terminals::from_pairs({{g.at("s1"), g.at("t1")}, {g.at("s2"), g.at("t2")}}));
    CHECK(enumerate_linkages(inst).empty());
}

TEST_CASE("s-t linkages are enumerated as sets")
{
    auto g = graph_of({{"s", {"a", "b", "c"}}, {"a", {"s", "t"}}, {"b", {"s", "t"}}, {"c", {"s", "t"}},
        {"t", {"c", "b", "a"}}});
    auto inst = classify_instance(g, Terminals::from_st(g.at("s"), g.at("t"), 2));
    CHECK(enumerate_linkages(inst).size() == 3);
}

TEST_CASE("oracle verdicts")
{
    auto cyl = gen_cylinder(2, 8, 2, 0, 0);
    CHECK(oracle_decide(cyl.instance, cyl.P, cyl.P));
    auto wound = gen_cylinder(3, 8, 2, 0, 1);
    CHECK(!oracle_decide(wound.instance, wound.P, wound.Q));
    auto diamonds = gen_nested_diamonds();
    CHECK(enumerate_linkages(diamonds.instance).size() == 2);
    CHECK(!oracle_decide(diamonds.instance, diamonds.P, diamonds.Q));
    CHECK(component_size(diamonds.instance, diamonds.P) == 1);
}

TEST_CASE("neighbours are adjacent valid linkages")
{
    auto cyl = gen_cylinder(2, 6, 2, 0, 0);
    auto nb = neighbours(cyl.instance, cyl.P);
    CHECK(!nb.empty());
    for (const auto& L : nb) {
        CHECK(validate_linkage(cyl.instance, L).ok);
        CHECK(adjacent(cyl.P, L));
    }
}

TEST_CASE("shortest sequences")
{
    auto cyl = gen_cylinder(2, 6, 2, 0, 0);
    auto same = oracle_shortest(cyl.instance, cyl.P, cyl.P);
    REQUIRE(same);
    CHECK(same->size() == 1);
    auto nb = neighbours(cyl.instance, cyl.P);
    REQUIRE(!nb.empty());
    auto one = oracle_shortest(cyl.instance, cyl.P, nb.front());
    REQUIRE(one);
    CHECK(one->size() == 2);

    std::mt19937_64 rng(8);
    int checked = 0;
    for (int it = 0; it < 60; ++it) {
        auto gi = random_one_face(rng, 5 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3));
        if (!gi)
            continue;
        ++checked;
        auto best = oracle_shortest(gi->instance, gi->P, gi->Q);
        REQUIRE(best);
        CHECK(verify_sequence(gi->instance, *best).ok);
        CHECK(best->size() <= sequence_one_face(gi->instance, gi->P, gi->Q).size());
    }
    CHECK(checked > 20);
}

TEST_CASE("the visit limit is enforced")
{
    auto cyl = gen_cylinder(3, 8, 2, 0, 0);
    CHECK_THROWS_AS(enumerate_linkages(cyl.instance, 5), Error);
}
