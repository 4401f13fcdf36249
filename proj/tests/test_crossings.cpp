#include "dpr/crossings.hpp"
#include "dpr/generators.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace dpr;
using dpr::test::graph_of;
using dpr::test::path_of;

namespace {

/// Star with arms N, E, S, W and X between W and N.
PlaneGraph star()
{
    return graph_of({{"m", {"N", "E", "S", "W", "X"}}, {"N", {"m"}}, {"E", {"m"}}, {"S", {"m"}}, {"W", {"m"}},
        {"X", {"m"}}});
}

Path reversed(Path p)
{
    std::reverse(p.begin(), p.end());
    return p;
}

} // namespace

TEST_CASE("crossing signs at a single shared vertex")
{
    auto g = star();
    Path Q = path_of(g, {"S", "m", "N"}); // W lies to its left
    Path across = path_of(g, {"W", "m", "E"});
    Path touch = path_of(g, {"W", "m", "X"});
    CHECK(mu(g, across, Q) == 1);
    CHECK(mu(g, Q, across) == -1);
    CHECK(mu(g, across, reversed(Q)) == -1);
    CHECK(mu(g, touch, Q) == 0);
    auto sw = shared_subwalks(across, Q);
    REQUIRE(sw.size() == 1);
    CHECK(crossing_sign(g, across, Q, sw[0]) == 1);
    CHECK_THROWS_AS(mu(g, path_of(g, {"W", "m", "N"}), Q), Error);
}

TEST_CASE("disjoint paths do not cross")
{
    auto cyl = gen_cylinder(2, 8, 2, 0, 0);
    CHECK(mu(cyl.instance.graph, cyl.P[0], cyl.P[1]) == 0);
    CHECK(crossing_sequence(cyl.instance.graph, cyl.P, cyl.Q[0], 1).crossings.empty());
}

TEST_CASE("straight against once-wound cylinder linkages")
{
    for (int k = 2; k <= 3; ++k) {
        auto cyl = gen_cylinder(k + 1, 4 * k, k, 0, 1);
        const auto& g = cyl.instance.graph;
        auto M = mu_matrix(g, cyl.P, cyl.Q);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j)
                    CHECK(M[i][j] == 1);
        CHECK(mu_two_face(cyl.instance, cyl.P, cyl.Q) == 1);
        for (int j = 1; j <= k; ++j) {
            auto ab = abelianize(word_from_crossings(crossing_sequence(g, cyl.P, cyl.Q[j - 1], j)));
            for (int i = 1; i <= k; ++i)
                if (i != j)
                    CHECK(ab[i - 1] == 1);
        }
    }
    auto same = gen_cylinder(3, 8, 2, 1, 1);
    CHECK(mu_two_face(same.instance, same.P, same.Q) == 0);
    auto self = gen_cylinder(2, 8, 2, 0, 0);
    CHECK(mu_two_face(self.instance, self.P, self.P) == 0);
}

TEST_CASE("random two-face instances: antisymmetry and word consistency")
{
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int it = 0; it < 150; ++it) {
        auto gi = random_two_face(rng, 1 + static_cast<int>(rng() % 3), 6 + static_cast<int>(rng() % 3),
            2 + static_cast<int>(rng() % 2), rng() % 2);
        if (!gi)
            continue;
        ++checked;
        const auto& g = gi->instance.graph;
        int k = gi->instance.k();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j) {
                    CHECK(mu(g, gi->P[i], gi->Q[j]) == -mu(g, gi->Q[j], gi->P[i]));
                    CHECK(mu(g, gi->P[i], reversed(gi->Q[j])) == -mu(g, gi->P[i], gi->Q[j]));
                }
        auto M = mu_matrix(g, gi->P, gi->Q);
        for (int j = 1; j <= k; ++j) {
            auto ab = abelianize(word_from_crossings(crossing_sequence(g, gi->P, gi->Q[j - 1], j)));
            for (int i = 1; i <= k; ++i)
                if (i != j)
                    CHECK(ab[i - 1] == M[i - 1][j - 1]);
        }
        CHECK_NOTHROW(mu_two_face(gi->instance, gi->P, gi->Q));
    }
    CHECK(checked > 50);
}

TEST_CASE("reference curve avoids the given linkage")
{
    auto cyl = gen_cylinder(3, 8, 2, 0, 0);
    const auto& g = cyl.instance.graph;
    auto C = reference_curve(cyl.instance, cyl.P);
    CHECK(C.faces.front() == cyl.instance.face_S);
    CHECK(C.faces.back() == cyl.instance.face_T);
    std::set<std::pair<Vertex, Vertex>> used;
    for (const auto& p : cyl.P)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            used.insert({p[i], p[i + 1]});
            used.insert({p[i + 1], p[i]});
        }
    for (int d : C.darts)
        CHECK(!used.count({g.tail(d), g.head(d)}));
    for (const auto& p : cyl.P)
        CHECK(lift_index(g, C, p) == 0);
}

TEST_CASE("lift index of a lap around S and additivity")
{
    auto cyl = gen_cylinder(2, 6, 2, 0, 0);
    const auto& g = cyl.instance.graph;
    auto C = reference_curve(cyl.instance, cyl.P);
    Path lap{0, 1, 2, 3, 4, 5, 0}; // ring 0 with S on the right
    CHECK(lift_index(g, C, lap) == 1);
    CHECK(lift_index(g, C, reversed(lap)) == -1);
    CHECK(lift_index(g, C, {0, 1, 2}) + lift_index(g, C, {2, 3, 4, 5, 0}) == 1);
    auto wound = gen_cylinder(3, 8, 2, 0, 1);
    auto C2 = reference_curve(wound.instance, wound.P);
    for (const auto& q : wound.Q) {
        int total = lift_index(wound.instance.graph, C2, q);
        Path a(q.begin(), q.begin() + q.size() / 2 + 1), b(q.begin() + q.size() / 2, q.end());
        CHECK(lift_index(wound.instance.graph, C2, a) + lift_index(wound.instance.graph, C2, b) == total);
    }
}
