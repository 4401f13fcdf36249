#include "dpr/one_face.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dpr {

namespace {

/// Piece of pair i between two of its vertices that stay fixed.
struct Segment {
    int pair;
    Path P; ///< current source-side route, from front() to back()
    Path Q; ///< target route with the same ends
    Vertex a() const { return P.front(); }
    Vertex b() const { return P.back(); }
};

struct Replace {
    Vertex a;
    Vertex b;
    Path route;
};

struct Move {
    int pair;
    std::vector<Replace> parts;
};

using Moves = std::vector<Move>;

bool on(const Path& p, Vertex v)
{
    return std::find(p.begin(), p.end(), v) != p.end();
}

class Solver {
public:
    explicit Solver(const PlaneGraph& g)
        : g_(g)
    {
    }

    Moves solve(const std::vector<char>& alive, const std::vector<Segment>& segs) const
    {
        if (segs.empty())
            return {};
        auto comps = components(alive, -1);
        if (comps.size() > 1) {
            Moves out;
            for (const auto& c : comps) {
                auto part = restrict(segs, c);
                auto m = solve(c, part);
                out.insert(out.end(), m.begin(), m.end());
            }
            return out;
        }
        Vertex v = cut_vertex(alive);
        if (v >= 0)
            return split(alive, segs, v);
        return peel(alive, segs);
    }

private:
    // Connected components of the alive vertices with @p skip removed.
    std::vector<std::vector<char>> components(const std::vector<char>& alive, Vertex skip) const
    {
        int n = g_.num_vertices();
        std::vector<int> comp(n, -1);
        std::vector<std::vector<char>> out;
        for (Vertex s = 0; s < n; ++s) {
            if (!alive[s] || s == skip || comp[s] >= 0)
                continue;
            std::vector<char> mask(n, 0);
            std::vector<Vertex> stack { s };
            comp[s] = static_cast<int>(out.size());
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                mask[x] = 1;
                for (Vertex u : g_.rotation(x))
                    if (alive[u] && u != skip && comp[u] < 0) {
                        comp[u] = comp[s];
                        stack.push_back(u);
                    }
            }
            out.push_back(std::move(mask));
        }
        return out;
    }

    static std::vector<Segment> restrict(const std::vector<Segment>& segs, const std::vector<char>& mask)
    {
        std::vector<Segment> out;
        for (const auto& s : segs)
            if (mask[s.a()])
                out.push_back(s);
        return out;
    }

    // Smallest articulation point among the alive vertices, or -1.
    Vertex cut_vertex(const std::vector<char>& alive) const
    {
        int n = g_.num_vertices();
        std::vector<int> disc(n, -1), low(n, 0);
        std::vector<char> art(n, 0);
        int timer = 0;
        std::function<void(Vertex, Vertex)> dfs = [&](Vertex x, Vertex parent) {
            disc[x] = low[x] = timer++;
            int children = 0;
            for (Vertex u : g_.rotation(x)) {
                if (!alive[u] || u == parent)
                    continue;
                if (disc[u] >= 0) {
                    low[x] = std::min(low[x], disc[u]);
                    continue;
                }
                ++children;
                dfs(u, x);
                low[x] = std::min(low[x], low[u]);
                if (parent >= 0 && low[u] >= disc[x])
                    art[x] = 1;
            }
            if (parent < 0 && children > 1)
                art[x] = 1;
        };
        for (Vertex s = 0; s < n; ++s)
            if (alive[s] && disc[s] < 0)
                dfs(s, -1);
        for (Vertex x = 0; x < n; ++x)
            if (art[x])
                return x;
        return -1;
    }

    Moves split(const std::vector<char>& alive, const std::vector<Segment>& segs, Vertex v) const
    {
        auto comps = components(alive, v);
        int m = static_cast<int>(comps.size());
        std::vector<std::vector<Segment>> side(m);
        auto side_of = [&](Vertex x) {
            for (int c = 0; c < m; ++c)
                if (comps[c][x])
                    return c;
            return -1;
        };
        std::vector<char> endpoint(m, 0);
        int crossing = -1;
        for (const auto& s : segs) {
            int ca = side_of(s.a()), cb = side_of(s.b());
            if (ca < 0 || cb < 0 || ca == cb) {
                int c = ca < 0 ? cb : ca;
                if (ca < 0 || cb < 0)
                    endpoint[c] = 1;
                side[c].push_back(s);
                continue;
            }
            // a path between two sides passes through v in both linkages
            crossing = s.pair;
            side[ca].push_back({s.pair, subpath(s.P, s.a(), v), subpath(s.Q, s.a(), v)});
            side[cb].push_back({s.pair, subpath(s.P, v, s.b()), subpath(s.Q, v, s.b())});
            endpoint[ca] = endpoint[cb] = 1;
        }
        std::vector<int> order;
        std::vector<char> with_v(m, 0);
        bool terminal_v = std::find(endpoint.begin(), endpoint.end(), 1) != endpoint.end();
        if (terminal_v) {
            for (int c = 0; c < m; ++c) {
                with_v[c] = endpoint[c];
                order.push_back(c);
            }
        } else {
            int first = -1, last = -1;
            for (int c = 0; c < m; ++c)
                for (const auto& s : side[c]) {
                    if (on(s.P, v))
                        first = c;
                    if (on(s.Q, v))
                        last = c;
                }
            if (first >= 0) {
                with_v[first] = 1;
                order.push_back(first);
            }
            for (int c = 0; c < m; ++c)
                if (c != first && c != last)
                    order.push_back(c);
            if (last >= 0 && last != first) {
                with_v[last] = 1;
                order.push_back(last);
            }
        }
        std::vector<Moves> results;
        for (int c : order) {
            if (side[c].empty())
                continue;
            auto mask = comps[c];
            if (with_v[c])
                mask[v] = 1;
            results.push_back(solve(mask, side[c]));
        }
        if (crossing < 0) {
            Moves out;
            for (auto& r : results)
                out.insert(out.end(), r.begin(), r.end());
            return out;
        }
        Moves out;
        for (auto& r : results)
            out = interleave(out, r, crossing);
        return out;
    }

    // Merge two independent move lists; the k-th moves of @p pair in both
    // lists become one move.
    static Moves interleave(const Moves& A, const Moves& B, int pair)
    {
        auto chunks = [pair](const Moves& M) {
            std::vector<Moves> gaps(1);
            std::vector<Move> hits;
            for (const auto& mv : M) {
                if (mv.pair == pair) {
                    hits.push_back(mv);
                    gaps.emplace_back();
                } else {
                    gaps.back().push_back(mv);
                }
            }
            return std::make_pair(gaps, hits);
        };
        auto [ga, ha] = chunks(A);
        auto [gb, hb] = chunks(B);
        Moves out;
        std::size_t rounds = std::max(ha.size(), hb.size());
        for (std::size_t r = 0; r <= rounds; ++r) {
            if (r < ga.size())
                out.insert(out.end(), ga[r].begin(), ga[r].end());
            if (r < gb.size())
                out.insert(out.end(), gb[r].begin(), gb[r].end());
            if (r == rounds)
                break;
            Move merged { pair, {} };
            if (r < ha.size())
                merged.parts.insert(merged.parts.end(), ha[r].parts.begin(), ha[r].parts.end());
            if (r < hb.size())
                merged.parts.insert(merged.parts.end(), hb[r].parts.begin(), hb[r].parts.end());
            out.push_back(merged);
        }
        return out;
    }

    Moves peel(const std::vector<char>& alive, const std::vector<Segment>& segs) const
    {
        std::vector<Vertex> keep, ends;
        for (Vertex x = 0; x < g_.num_vertices(); ++x)
            if (alive[x])
                keep.push_back(x);
        for (const auto& s : segs) {
            ends.push_back(s.a());
            ends.push_back(s.b());
        }
        std::vector<Vertex> map;
        PlaneGraph h = g_.induced(keep, &map);
        std::vector<Vertex> local;
        for (Vertex x : ends)
            local.push_back(map[x]);
        auto faces = h.faces_containing(local);
        if (faces.empty())
            throw Error(ErrorCode::InvalidInput, "terminals do not share a face");
        std::vector<Vertex> cycle;
        for (Vertex x : h.face(faces.front()).walk)
            cycle.push_back(keep[x]);
        int L = static_cast<int>(cycle.size());
        std::set<Vertex> terminal(ends.begin(), ends.end());
        auto pos = [&](Vertex x) { return static_cast<int>(std::find(cycle.begin(), cycle.end(), x) - cycle.begin()); };
        auto arc = [&](int from, int to, int dir) {
            Path p;
            for (int i = from;; i = (i + dir + L) % L) {
                p.push_back(cycle[i]);
                if (i == to)
                    break;
            }
            return p;
        };
        auto clear = [&](const Path& p) {
            for (std::size_t i = 1; i + 1 < p.size(); ++i)
                if (terminal.count(p[i]))
                    return false;
            return true;
        };
        std::vector<std::size_t> idx(segs.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return segs[x].pair < segs[y].pair; });
        for (std::size_t i : idx) {
            const Segment& s = segs[i];
            int pa = pos(s.a()), pb = pos(s.b());
            for (int dir : {1, -1}) {
                Path R = arc(pa, pb, dir);
                if (!clear(R))
                    continue;
                Moves out;
                if (s.P != R)
                    out.push_back({s.pair, {{s.a(), s.b(), R}}});
                std::vector<char> rest = alive;
                for (Vertex x : R)
                    rest[x] = 0;
                std::vector<Segment> others;
                for (std::size_t j = 0; j < segs.size(); ++j)
                    if (j != i)
                        others.push_back(segs[j]);
                auto inner = solve(rest, others);
                out.insert(out.end(), inner.begin(), inner.end());
                if (s.Q != R)
                    out.push_back({s.pair, {{s.a(), s.b(), s.Q}}});
                return out;
            }
        }
        throw Error(ErrorCode::InvalidInput, "no pair has a terminal-free boundary arc");
    }

    const PlaneGraph& g_;
};

Linkage apply(Linkage L, const Move& mv)
{
    Path& p = L[mv.pair];
    for (const auto& r : mv.parts) {
        auto ia = std::find(p.begin(), p.end(), r.a);
        auto ib = std::find(p.begin(), p.end(), r.b);
        Path next(p.begin(), ia);
        next.insert(next.end(), r.route.begin(), r.route.end());
        next.insert(next.end(), ib + 1, p.end());
        p = std::move(next);
    }
    return L;
}

} // namespace

Sequence sequence_common_face(const PlaneGraph& g, const Linkage& P, const Linkage& Q)
{
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < P.size(); ++i)
        segs.push_back({static_cast<int>(i), P[i], Q[i]});
    std::vector<char> alive(g.num_vertices(), 1);
    auto moves = Solver(g).solve(alive, segs);
    Sequence seq { P };
    for (const auto& mv : moves) {
        Linkage next = apply(seq.back(), mv);
        // a linkage seen before closes a detour; drop it
        auto seen = std::find(seq.begin(), seq.end(), next);
        if (seen != seq.end())
            seq.erase(seen + 1, seq.end());
        else
            seq.push_back(std::move(next));
    }
    if (seq.back() != Q)
        throw Error(ErrorCode::InvalidInput, "one-face construction did not reach the target");
    return seq;
}

bool decide_one_face(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    if (inst.kind != InstanceKind::OneFace)
        throw Error(ErrorCode::InvalidInput, "instance is not one-face");
    for (const Linkage* L : {&P, &Q}) {
        auto st = validate_linkage(inst, *L);
        if (!st)
            throw Error(ErrorCode::InvalidInput, "invalid linkage: " + st.message, st.info);
    }
    return true;
}

Sequence sequence_one_face(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    decide_one_face(inst, P, Q);
    return sequence_common_face(inst.graph, P, Q);
}

} // namespace dpr
