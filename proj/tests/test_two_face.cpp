#include "dpr/crossings.hpp"
#include "dpr/errors.hpp"
#include "dpr/generators.hpp"
#include "dpr/oracle.hpp"
#include "dpr/separators.hpp"
#include "dpr/strip.hpp"
#include "dpr/two_face.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dpr;

TEST_CASE("cylinder verdict follows the winding difference")
{
    auto same = gen_cylinder(3, 6, 2, 1, 1);
    auto v = decide_two_face(same.instance, same.P, same.Q);
    CHECK(v.yes);
    REQUIRE(v.mu);
    CHECK(*v.mu == 0);
    CHECK(oracle_decide(same.instance, same.P, same.Q));

    auto apart = gen_cylinder(3, 6, 2, 0, 1);
    v = decide_two_face(apart.instance, apart.P, apart.Q);
    CHECK_FALSE(v.yes);
    REQUIRE(v.mu);
    CHECK(*v.mu == 1);
    CHECK_FALSE(oracle_decide(apart.instance, apart.P, apart.Q));
    CHECK_FALSE(sequence_two_face(apart.instance, apart.P, apart.Q));

    auto three = gen_cylinder(4, 12, 3, 1, -1);
    v = decide_two_face(three.instance, three.P, three.Q);
    CHECK_FALSE(v.yes);
    REQUIRE(v.mu);
    CHECK(*v.mu == -2);
    // a single path is replaced in one step whatever its winding
    auto one = gen_cylinder(3, 6, 1, 0, 1);
    CHECK(decide_two_face(one.instance, one.P, one.Q).yes);
}

TEST_CASE("sequences for equal windings verify")
{
    auto g = gen_cylinder(3, 6, 2, 0, 0);
    Linkage Q = cylinder_linkage(g.instance, 3, 6, 0);
    auto seq = sequence_two_face(g.instance, g.P, Q);
    REQUIRE(seq);
    CHECK(verify_sequence(g.instance, *seq).ok);
    CHECK(seq->front() == g.P);
    CHECK(seq->back() == Q);
}

TEST_CASE("random two-face instances agree with the oracle")
{
    std::mt19937_64 rng(17);
    int tried = 0, yes = 0;
    for (int i = 0; i < 120; ++i) {
        int k = 1 + static_cast<int>(rng() % 3);
        int lo = std::max(2 * k, 3);
        int cols = lo + static_cast<int>(rng() % (9 - lo));
        auto gi = random_two_face(rng, 2, cols, k, i % 2 == 1);
        if (!gi)
            continue;
        ++tried;
        const Instance& inst = gi->instance;
        bool expect = oracle_decide(inst, gi->P, gi->Q);
        auto v = decide_two_face(inst, gi->P, gi->Q);
        CAPTURE(i);
        REQUIRE(v.yes == expect);
        auto seq = sequence_two_face(inst, gi->P, gi->Q);
        CHECK(static_cast<bool>(seq) == expect);
        if (seq) {
            ++yes;
            CHECK(verify_sequence(inst, *seq).ok);
        }
        auto cut = min_terminal_separator(inst);
        if (!cut.cut || cut.bound > k)
            CHECK(expect == (mu_two_face(inst, gi->P, gi->Q) == 0));
    }
    CHECK(tried > 60);
    CHECK(yes > 0);
}

TEST_CASE("strip order: precedes, join and climb")
{
    auto g = gen_cylinder(3, 6, 2, 0, 0);
    Linkage Q = cylinder_linkage(g.instance, 3, 6, 0);
    Strip strip(g.instance, g.P);
    for (std::size_t i = 0; i < g.P.size(); ++i) {
        CHECK(strip.precedes(g.P[i], g.P[i]));
        Path j = strip.join_path(g.P[i], Q[i]);
        CHECK(strip.precedes(g.P[i], j));
        CHECK(strip.precedes(Q[i], j));
    }
    Linkage J = strip.join(g.P, Q);
    CHECK(validate_linkage(g.instance, J).ok);
    auto up = strip.climb(g.P, J);
    CHECK(up.front() == g.P);
    CHECK(up.back() == J);
    CHECK(verify_sequence(g.instance, up).ok);

    auto w = gen_cylinder(3, 6, 1, 0, 1);
    Strip s1(w.instance, w.P);
    CHECK_THROWS_AS(s1.join_path(w.P[0], w.Q[0]), Error);
}

TEST_CASE("two-face input checks")
{
    auto g = gen_cylinder(2, 6, 2, 0, 0);
    Linkage bad = g.P;
    bad[0].pop_back();
    CHECK_THROWS_AS(decide_two_face(g.instance, bad, g.Q), Error);
    auto d = gen_nested_diamonds();
    CHECK_THROWS_AS(decide_two_face(d.instance, d.P, d.Q), Error);
}
