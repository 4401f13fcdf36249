#include "dpr/errors.hpp"
#include "dpr/ncl.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dpr;

namespace {

struct Drawn {
    NclGraph h;
    NclConfig c;
};

std::vector<Drawn> draw(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::vector<Drawn> out;
    while (static_cast<int>(out.size()) < count) {
        int n = 4 + 2 * static_cast<int>(rng() % 5);
        NclGraph h = random_ncl_graph(rng, n);
        if (auto c = random_ncl_config(rng, h))
            out.push_back({h, *c});
    }
    return out;
}

int count_kind(const NclGraph& h, NclKind k)
{
    return static_cast<int>(std::count(h.kind.begin(), h.kind.end(), k));
}

int count_weight(const NclGraph& h, int w)
{
    return static_cast<int>(std::count_if(h.edges.begin(), h.edges.end(), [&](const auto& e) { return e.weight == w; }));
}

} // namespace

TEST_CASE("validation of small configurations")
{
    // K4 with the triangle 0 1 2 light: vertices 0..2 are AND, 3 is OR
    NclGraph h = ncl_from_rotation({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(ncl_check_graph(h).ok);
    CHECK(count_kind(h, NclKind::And) == 3);
    CHECK(ncl_planar(h));
    NclConfig c;
    c.toward.resize(h.num_edges());
    for (int e = 0; e < h.num_edges(); ++e)
        c.toward[e] = h.edges[e].weight == 2 ? h.edges[e].u == 3 ? h.edges[e].v : h.edges[e].u : std::max(h.edges[e].u, h.edges[e].v);
    // heavy edges point at the AND vertices; OR vertex 3 receives nothing
    auto st = ncl_validate(h, c);
    CHECK_FALSE(st.ok);
    CHECK(st.code == ErrorCode::InvalidNcl);
    REQUIRE(st.info.size() == 1);
    CHECK(st.info[0] == 3);

    // one heavy edge into 3 is enough there; 0 keeps only a light edge and fails
    int e03 = -1;
    for (int e = 0; e < h.num_edges(); ++e)
        if (h.edges[e].weight == 2 && (h.edges[e].u == 0 || h.edges[e].v == 0))
            e03 = e;
    NclConfig d = ncl_flip(h, c, e03);
    CHECK(incoming_weight(h, d, 3) == 2);
    st = ncl_validate(h, d);
    CHECK_FALSE(st.ok);
    CHECK(st.info[0] == 0);
}

TEST_CASE("flip legality is validity after the flip")
{
    for (const auto& [h, c] : draw(21, 12)) {
        CHECK(ncl_validate(h, c).ok);
        auto legal = legal_flips(h, c);
        for (int e = 0; e < h.num_edges(); ++e)
            CHECK(ncl_validate(h, ncl_flip(h, c, e)).ok == std::binary_search(legal.begin(), legal.end(), e));
    }
}

TEST_CASE("s-t reduction counts, disjointness and round trip")
{
    std::mt19937_64 rng(2);
    for (const auto& [h, c] : draw(5, 10)) {
        auto r = gen_ncl_stpaths(h);
        const auto& g = r.instance.graph;
        int red = 0, blue = 0, white = 0, black = 0, maxd = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            char x = g.name(v)[0];
            red += x == 'r';
            blue += x == 'b';
            white += x == 'w';
            black += x == 'k' || x == 's' || x == 't';
            maxd = std::max(maxd, g.degree(v));
        }
        int nv = h.num_vertices(), na = count_kind(h, NclKind::And);
        CHECK(red == 2 * na + 2 * count_weight(h, 2));
        CHECK(blue == 2 * nv + 2 * count_weight(h, 1));
        CHECK(white == 3 * nv);
        CHECK(white == 2 * h.num_edges());
        CHECK(black == 2 + na);
        CHECK(maxd == 4);
        CHECK(r.instance.k() == 2);

        Linkage L = r.created(c);
        CHECK(validate_linkage(r.instance, L).ok);
        CHECK(r.canonical(L) == c);

        NclConfig cur = c;
        for (int step = 0; step < 8; ++step) {
            auto legal = legal_flips(h, cur);
            if (legal.empty())
                break;
            int e = legal[rng() % legal.size()];
            auto seq = r.flip(cur, e);
            CHECK(verify_sequence(r.instance, seq).ok);
            CHECK(seq.size() - 1 <= 5);
            cur = ncl_flip(h, cur, e);
            CHECK(seq.back() == r.created(cur));
        }
    }
}

TEST_CASE("s-t reduction in bandwidth mode")
{
    std::mt19937_64 rng(8);
    for (const auto& [h, c] : draw(13, 8)) {
        std::vector<int> layout(h.num_vertices());
        std::iota(layout.begin(), layout.end(), 0);
        std::shuffle(layout.begin(), layout.end(), rng);
        int cw = ncl_bandwidth(h, layout);
        auto r = gen_ncl_stpaths(h, &layout);
        REQUIRE(r.layout.size() == static_cast<std::size_t>(r.instance.graph.num_vertices()));
        std::vector<int> sorted = r.layout;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        CHECK(layout_bandwidth(r.instance.graph, r.layout) <= 8 * (4 * cw + 3) + 7);
        Linkage L = r.created(c);
        CHECK(validate_linkage(r.instance, L).ok);
        CHECK(r.canonical(L) == c);
    }
}

TEST_CASE("plane reduction counts, lengths and round trip")
{
    std::mt19937_64 rng(4);
    for (const auto& [h, c] : draw(7, 10)) {
        auto p = gen_ncl_planar(h);
        const auto& g = p.instance.graph;
        int nv = h.num_vertices(), no = count_kind(h, NclKind::Or);
        CHECK(p.instance.k() == h.num_edges() + nv + no);
        CHECK(g.embedded());
        CHECK(g.num_vertices() - g.num_edges() + g.num_faces() == 1 + g.num_components());

        Linkage L = p.created(c);
        CHECK(validate_linkage(p.instance, L).ok);
        CHECK(p.canonical(L) == c);
        for (int e = 0; e < h.num_edges(); ++e)
            CHECK(L[p.edge_index[e]].size() == 3);
        for (int v = 0; v < nv; ++v) {
            std::size_t len = L[p.vertex_index[v]].size();
            if (p.or_index[v] >= 0) {
                CHECK(len == 5);
                CHECK(L[p.or_index[v]].size() == 3);
            } else {
                CHECK((len == 3 || len == 4));
            }
        }

        NclConfig cur = c;
        for (int step = 0; step < 8; ++step) {
            auto legal = legal_flips(h, cur);
            if (legal.empty())
                break;
            int e = legal[rng() % legal.size()];
            auto seq = p.flip(cur, e);
            CHECK(verify_sequence(p.instance, seq).ok);
            CHECK(seq.size() - 1 <= 7);
            cur = ncl_flip(h, cur, e);
            CHECK(seq.back() == p.created(cur));
            CHECK(p.canonical(seq.back()) == cur);
        }
    }
}

TEST_CASE("reduction errors")
{
    // K3,3 with every edge heavy: a valid AND/OR graph with no plane embedding
    NclGraph k33 = ncl_from_rotation({{3, 4, 5}, {3, 4, 5}, {3, 4, 5}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, {});
    REQUIRE(ncl_check_graph(k33).ok);
    CHECK_FALSE(ncl_planar(k33));
    try {
        gen_ncl_planar(k33);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPlanarH);
    }
    CHECK_NOTHROW(gen_ncl_stpaths(k33));

    CHECK_THROWS_AS(ncl_from_rotation({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 1}}, {}), Error);

    auto drawn = draw(19, 1).front();
    auto r = gen_ncl_stpaths(drawn.h);
    Linkage L = r.created(drawn.c);
    CHECK(r.canonical({L[1], L[0]}) == drawn.c);
    try {
        r.canonical({L[0], L[0]});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MalformedLinkage);
    }
    auto p = gen_ncl_planar(drawn.h);
    Linkage M = p.created(drawn.c);
    M[p.edge_index[0]] = {M[p.edge_index[0]].front(), M[p.edge_index[0]].back()};
    CHECK_THROWS_AS(p.canonical(M), Error);
}
