#include "dpr/st_paths.hpp"

#include "dpr/separators.hpp"

#include <algorithm>
#include <numeric>

namespace dpr {

namespace {

int mod(int a, int m)
{
    return ((a % m) + m) % m;
}

void check_st(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    if (!inst.st())
        throw Error(ErrorCode::InvalidInput, "instance is not an s-t instance");
    for (const Linkage* L : {&P, &Q}) {
        auto st = validate_linkage(inst, *L);
        if (!st)
            throw Error(ErrorCode::InvalidInput, "invalid linkage: " + st.message, st.info);
    }
}

Vertex first_in(const Path& p, const std::vector<char>& mark)
{
    for (Vertex v : p)
        if (mark[v])
            return v;
    return -1;
}

std::vector<char> mask(int n, const std::vector<Vertex>& vs)
{
    std::vector<char> m(n, 0);
    for (Vertex v : vs)
        m[v] = 1;
    return m;
}

Path mapped(const Path& p, const std::vector<Vertex>& map)
{
    Path out;
    out.reserve(p.size());
    for (Vertex v : p)
        out.push_back(map[v]);
    return out;
}

/// Unwrapped end column of each path; throws when cyclic orders disagree.
std::vector<int> targets(int l, const std::vector<int>& inner, const std::vector<int>& outer, int winding)
{
    int k = static_cast<int>(inner.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return inner[a] < inner[b]; });
    std::vector<int> T(k);
    int o0 = order[0];
    T[o0] = inner[o0] + mod(outer[o0] - inner[o0], l) + l * winding;
    for (int m = 1; m < k; ++m) {
        int o = order[m];
        int prev = T[order[m - 1]];
        T[o] = prev + 1 + mod(outer[o] - prev - 1, l);
    }
    if (k > 1 && T[order[k - 1]] >= T[o0] + l)
        throw Error(ErrorCode::InvalidInput, "paths leave the grid in a different cyclic order");
    return T;
}

int largest_shift(int l, const std::vector<int>& inner, const std::vector<int>& outer, int winding)
{
    auto T = targets(l, inner, outer, winding);
    int best = 0;
    for (std::size_t j = 0; j < T.size(); ++j)
        best = std::max(best, std::abs(T[j] - inner[j]));
    return best;
}

/// Base path of an expanded path: the part outside the grids with the apexes restored.
Path project_path(const GridExpansion& ex, const Path& p)
{
    int src = -1, snk = -1;
    for (int g = 0; g < static_cast<int>(ex.grids.size()); ++g)
        (ex.grids[g].source ? src : snk) = g;
    std::size_t begin = 0, end = p.size();
    if (src >= 0)
        for (std::size_t i = 0; i < p.size(); ++i)
            if (ex.grid_of[p[i]] == src)
                begin = i + 1;
    if (snk >= 0)
        for (std::size_t i = begin; i < p.size(); ++i)
            if (ex.grid_of[p[i]] == snk) {
                end = i;
                break;
            }
    Path out;
    if (src >= 0)
        out.push_back(ex.grids[src].apex);
    for (std::size_t i = begin; i < end; ++i)
        out.push_back(ex.to_base[p[i]]);
    if (snk >= 0)
        out.push_back(ex.grids[snk].apex);
    return out;
}

/// Inner column of pair @p i on grid @p g.
int inner_column(const GridExpansion& ex, int g, int i, int k)
{
    return ex.grids.size() == 2 && g == 1 ? k - 1 - i : i;
}

/// Lift base paths to the expansion; result ordered by pair.
std::optional<Linkage> lift_paths(const GridExpansion& ex, const PlaneGraph& base, const std::vector<Path>& paths,
    const std::vector<int>& pair, const std::vector<int>& extra_turns)
{
    int k = static_cast<int>(paths.size());
    std::vector<std::vector<Path>> routes(ex.grids.size());
    for (std::size_t g = 0; g < ex.grids.size(); ++g) {
        const auto& grid = ex.grids[g];
        std::vector<int> inner(k), outer(k);
        for (int j = 0; j < k; ++j) {
            const Path& p = paths[j];
            Vertex nb = grid.source ? p[1] : p[p.size() - 2];
            inner[j] = inner_column(ex, static_cast<int>(g), pair[j], k);
            outer[j] = base.position(grid.apex, nb);
        }
        int w = natural_winding(grid, inner, outer) + extra_turns[g];
        auto r = route_grid(grid, inner, outer, w);
        if (!r)
            return std::nullopt;
        routes[g] = std::move(*r);
    }
    Linkage out(k);
    for (int j = 0; j < k; ++j) {
        Path q;
        const Path& p = paths[j];
        std::size_t lo = 0, hi = p.size();
        for (std::size_t g = 0; g < ex.grids.size(); ++g)
            if (ex.grids[g].source) {
                q = routes[g][j];
                lo = 1;
            }
        for (std::size_t g = 0; g < ex.grids.size(); ++g)
            if (!ex.grids[g].source)
                hi = p.size() - 1;
        for (std::size_t i = lo; i < hi; ++i)
            q.push_back(ex.from_base[p[i]]);
        for (std::size_t g = 0; g < ex.grids.size(); ++g)
            if (!ex.grids[g].source)
                q.insert(q.end(), routes[g][j].rbegin(), routes[g][j].rend());
        out[pair[j]] = std::move(q);
    }
    return out;
}

/// Rank of each path in clockwise order of its edge at @p apex.
std::vector<int> ranks_at(const PlaneGraph& g, Vertex apex, bool source, const std::vector<Path>& paths)
{
    int k = static_cast<int>(paths.size());
    std::vector<int> order(k), rank(k);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int j) {
        const Path& p = paths[j];
        return g.position(apex, source ? p[1] : p[p.size() - 2]);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    for (int r = 0; r < k; ++r)
        rank[order[r]] = r;
    return rank;
}

/**
 * Sequence between path families sharing the apexes, solved on the grid
 * expansion. With one apex the far ends (ports) are fixed and Q[j] shares
 * its port with P[j]; the result keeps the index order. With both s and t
 * expanded the pairing of Q is free and results are sorted s-t linkages.
 */
Sequence solve_expanded(const PlaneGraph& h, const std::vector<std::pair<Vertex, bool>>& apexes,
    const std::vector<Path>& P, const std::vector<Path>& Q)
{
    int k = static_cast<int>(P.size());
    bool both = apexes.size() == 2;
    auto [apex0, source0] = apexes[0];
    for (auto [a, src] : apexes)
        if (h.degree(a) < k)
            throw Error(ErrorCode::DegreeTooSmall, "apex degree below k", {a});
    std::vector<int> pairP = ranks_at(h, apex0, source0, P);
    std::vector<std::vector<int>> pairQs;
    if (both) {
        auto rq = ranks_at(h, apex0, source0, Q);
        for (int r = 0; r < k; ++r) {
            std::vector<int> a(k);
            for (int j = 0; j < k; ++j)
                a[j] = (rq[j] + r) % k;
            pairQs.push_back(a);
        }
    } else {
        pairQs.push_back(pairP);
    }
    std::vector<Vertex> port(k, -1);
    if (!both)
        for (int j = 0; j < k; ++j)
            port[pairP[j]] = source0 ? P[j].back() : P[j].front();

    int n = h.num_vertices();
    std::vector<int> ring_counts { std::max(2 * n + 2, 3), std::max(n * n, 2 * n + 3) };
    for (int rings : ring_counts) {
        GridExpansion ex = expand_vertices(h, apexes, rings);
        std::vector<std::pair<Vertex, Vertex>> pairs(k);
        for (int i = 0; i < k; ++i) {
            Vertex a = -1, b = -1;
            for (std::size_t g = 0; g < ex.grids.size(); ++g) {
                Vertex v = ex.grids[g].at(0, inner_column(ex, static_cast<int>(g), i, k));
                (ex.grids[g].source ? a : b) = v;
            }
            if (a < 0)
                a = ex.from_base[port[i]];
            if (b < 0)
                b = ex.from_base[port[i]];
            pairs[i] = { a, b };
        }
        auto terms = Terminals::from_pairs(pairs);
        Instance probe;
        probe.terminals = terms;
        auto faces_for = [&](bool source) {
            for (const auto& grid : ex.grids)
                if (grid.source == source)
                    return std::vector<int> { grid.inner_face(ex.graph) };
            return ex.graph.faces_containing(source ? probe.sources() : probe.sinks());
        };
        int S = -1, T = -1;
        for (int a : faces_for(true))
            for (int b : faces_for(false))
                if (S < 0 && a != b) {
                    S = a;
                    T = b;
                }
        if (S < 0)
            throw Error(ErrorCode::InvalidInput, "expanded instance is not two-face");
        Instance inst = make_two_face(ex.graph, terms, S, T);

        std::vector<int> none(ex.grids.size(), 0);
        auto Pl = lift_paths(ex, h, P, pairP, none);
        if (!Pl)
            continue;
        for (int step = 0; step <= 2 * (n + 2); ++step) {
            int delta = (step + 1) / 2 * (step % 2 ? 1 : -1);
            for (const auto& pairQ : pairQs) {
                std::vector<int> turns = none;
                turns[0] = delta;
                auto Ql = lift_paths(ex, h, Q, pairQ, turns);
                if (!Ql || !decide_planar_pairs(inst, *Pl, *Ql))
                    continue;
                Sequence lifted = sequence_planar_pairs(inst, *Pl, *Ql);
                Sequence out;
                for (const auto& L : lifted) {
                    Linkage b(k);
                    for (int j = 0; j < k; ++j)
                        b[j] = project_path(ex, L[both ? j : pairP[j]]);
                    if (both)
                        b = canonical_st(std::move(b));
                    if (out.empty() || out.back() != b)
                        out.push_back(std::move(b));
                }
                return out;
            }
        }
    }
    throw Error(ErrorCode::MuNonzero, "no grid routing of the target with zero crossing number");
}

/// Sequence of one part of a split s-t instance, in the part's index order.
Sequence fan_sequence(const PlaneGraph& g, const std::vector<Vertex>& keep, Vertex apex, bool source,
    const std::vector<Path>& P, const std::vector<Path>& Q)
{
    if (P == Q)
        return { P };
    if (P.size() <= 1)
        return { P, Q };
    std::vector<Vertex> map;
    PlaneGraph h = g.induced(keep, &map);
    std::vector<Vertex> back(h.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (map[v] >= 0)
            back[map[v]] = v;
    std::vector<Path> Pl, Ql;
    for (const auto& p : P)
        Pl.push_back(mapped(p, map));
    for (const auto& q : Q)
        Ql.push_back(mapped(q, map));
    Sequence local;
    int k = static_cast<int>(P.size());
    if (h.degree(map[apex]) > k) {
        local = solve_expanded(h, { { map[apex], source } }, Pl, Ql);
    } else {
        // every edge at the apex is used: drop the apex, keep its neighbours as terminals
        auto trim = [&](const Path& p) {
            return source ? Path(p.begin() + 1, p.end()) : Path(p.begin(), p.end() - 1);
        };
        Instance whole;
        whole.graph = h;
        // a port next to the apex carries a one-edge path in both linkages
        std::vector<char> drop(h.num_vertices(), 0);
        drop[map[apex]] = 1;
        std::vector<std::size_t> moving;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (std::size_t j = 0; j < Pl.size(); ++j) {
            Path a = trim(Pl[j]), b = trim(Ql[j]);
            if (a.front() != b.front() || a.back() != b.back())
                throw Error(ErrorCode::InvalidInput, "paths use the apex edges in different orders");
            if (a.size() == 1) {
                drop[a[0]] = 1;
                continue;
            }
            moving.push_back(j);
            pairs.emplace_back(a.front(), a.back());
        }
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < h.num_vertices(); ++v)
            if (!drop[v])
                rest.push_back(v);
        std::vector<Vertex> to_h;
        Instance sub = restrict_instance(whole, rest, pairs, to_h);
        std::vector<Vertex> in_sub(h.num_vertices(), -1);
        for (std::size_t i = 0; i < to_h.size(); ++i)
            in_sub[to_h[i]] = static_cast<Vertex>(i);
        Linkage A, B;
        for (std::size_t j : moving) {
            A.push_back(mapped(trim(Pl[j]), in_sub));
            B.push_back(mapped(trim(Ql[j]), in_sub));
        }
        for (const auto& L : sequence_planar_pairs(sub, A, B)) {
            Linkage o = Pl;
            for (std::size_t x = 0; x < moving.size(); ++x) {
                Path q = mapped(L[x], to_h);
                if (source)
                    q.insert(q.begin(), map[apex]);
                else
                    q.push_back(map[apex]);
                o[moving[x]] = std::move(q);
            }
            local.push_back(std::move(o));
        }
    }
    for (auto& L : local)
        for (auto& p : L)
            p = mapped(p, back);
    return local;
}

struct StSplit {
    std::vector<Vertex> X, Y, U, W;
};

StSplit split_st(const PlaneGraph& g, Vertex s, Vertex t, int k)
{
    StSplit r;
    r.X = minimal_side_set(g, s, t, k, Side::Source);
    r.Y = minimal_side_set(g, s, t, k, Side::Sink);
    r.U = neighbourhood(g, r.X);
    r.W = neighbourhood(g, r.Y);
    return r;
}

bool overlap(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    for (Vertex v : a)
        if (std::binary_search(b.begin(), b.end(), v))
            return true;
    return false;
}

/// Q reordered so that Q[j] meets U where P[j] does.
Linkage match_at(const Linkage& P, const Linkage& Q, const std::vector<char>& inU)
{
    Linkage out(P.size());
    for (const auto& q : Q) {
        Vertex u = first_in(q, inU);
        for (std::size_t j = 0; j < P.size(); ++j)
            if (first_in(P[j], inU) == u)
                out[j] = q;
    }
    return out;
}

/// Pairs instance strictly between U and W with the matched linkages.
struct Middle {
    Instance inst;
    std::vector<Vertex> to_parent;
    Linkage P, Q;
};

Middle middle_part(const Instance& inst, const StSplit& sp, const Linkage& P, const Linkage& Qm)
{
    const auto& g = inst.graph;
    int n = g.num_vertices();
    auto inX = mask(n, sp.X), inY = mask(n, sp.Y), inU = mask(n, sp.U), inW = mask(n, sp.W);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!inX[v] && !inY[v])
            keep.push_back(v);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& p : P)
        pairs.emplace_back(first_in(p, inU), first_in(p, inW));
    Middle m;
    Instance parent = inst;
    parent.face_S = parent.face_T = -1;
    m.inst = restrict_instance(parent, keep, pairs, m.to_parent);
    std::vector<Vertex> local(n, -1);
    for (std::size_t i = 0; i < m.to_parent.size(); ++i)
        local[m.to_parent[i]] = static_cast<Vertex>(i);
    for (std::size_t j = 0; j < P.size(); ++j) {
        m.P.push_back(mapped(subpath(P[j], pairs[j].first, pairs[j].second), local));
        m.Q.push_back(mapped(subpath(Qm[j], pairs[j].first, pairs[j].second), local));
    }
    return m;
}

/// Path pieces per index, concatenated at shared endpoints.
Linkage glue(const std::vector<std::vector<Path>>& parts)
{
    std::size_t k = parts[0].size();
    Linkage out(k);
    for (std::size_t j = 0; j < k; ++j) {
        Path p = parts[0][j];
        for (std::size_t x = 1; x < parts.size(); ++x)
            p.insert(p.end(), parts[x][j].begin() + 1, parts[x][j].end());
        out[j] = std::move(p);
    }
    return canonical_st(std::move(out));
}

Sequence sequence_rec(const Instance& inst, const Linkage& P, const Linkage& Q);

/// s and t adjacent: subdivide the edge st and solve there.
Sequence sequence_subdivided(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    const auto& g = inst.graph;
    Vertex s = inst.terminals.s, t = inst.terminals.t;
    int n = g.num_vertices();
    std::vector<std::string> names = g.names();
    std::string m = "st";
    while (g.find(m))
        m += "'";
    names.push_back(m);
    std::vector<std::vector<Vertex>> rot(n + 1);
    for (Vertex v = 0; v < n; ++v)
        rot[v] = g.rotation(v);
    std::replace(rot[s].begin(), rot[s].end(), t, n);
    std::replace(rot[t].begin(), rot[t].end(), s, n);
    rot[n] = { s, t };
    Instance sub;
    sub.graph = make_graph(names, rot);
    sub.terminals = inst.terminals;
    sub.kind = InstanceKind::St;
    auto up = [&](Linkage L) {
        for (auto& p : L)
            if (p.size() == 2)
                p = { s, n, t };
        return canonical_st(std::move(L));
    };
    Sequence seq = sequence_rec(sub, up(P), up(Q));
    for (auto& L : seq) {
        for (auto& p : L)
            if (p.size() == 3 && p[1] == n)
                p = { s, t };
        L = canonical_st(std::move(L));
    }
    return seq;
}

void push(Sequence& out, Linkage L)
{
    if (out.empty() || out.back() != L)
        out.push_back(std::move(L));
}

Sequence sequence_rec(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    const auto& g = inst.graph;
    Vertex s = inst.terminals.s, t = inst.terminals.t;
    int k = inst.k();
    if (P == Q)
        return { P };
    if (k <= 1)
        return { P, Q };
    if (g.has_edge(s, t))
        return sequence_subdivided(inst, P, Q);
    if (!min_st_separator(g, s, t, k + 1).cut)
        return solve_expanded(g, { { s, true }, { t, false } }, P, Q);

    int n = g.num_vertices();
    StSplit sp = split_st(g, s, t, k);
    auto inX = mask(n, sp.X), inY = mask(n, sp.Y), inU = mask(n, sp.U), inW = mask(n, sp.W);
    Linkage Qm = match_at(P, Q, inU);
    auto head = [&](const Linkage& L) {
        std::vector<Path> out;
        for (const auto& p : L)
            out.push_back(subpath(p, s, first_in(p, inU)));
        return out;
    };
    std::vector<Vertex> near = sp.X;
    near.insert(near.end(), sp.U.begin(), sp.U.end());
    std::sort(near.begin(), near.end());
    Sequence first = fan_sequence(g, near, s, true, head(P), head(Qm));

    Sequence out;
    if (overlap(sp.U, sp.W)) {
        auto tail = [&](const Linkage& L) {
            std::vector<Path> o;
            for (const auto& p : L)
                o.push_back(subpath(p, first_in(p, inU), t));
            return o;
        };
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (!inX[v])
                rest.push_back(v);
        Sequence second = fan_sequence(g, rest, t, false, tail(P), tail(Qm));
        for (const auto& a : first)
            push(out, glue({ a, second.front() }));
        for (const auto& b : second)
            push(out, glue({ first.back(), b }));
        return out;
    }

    Middle mid = middle_part(inst, sp, P, Qm);
    Sequence middle = sequence_planar_pairs(mid.inst, mid.P, mid.Q);
    for (auto& L : middle)
        for (auto& p : L)
            p = mapped(p, mid.to_parent);
    auto tail = [&](const Linkage& L) {
        std::vector<Path> o;
        for (const auto& p : L)
            o.push_back(subpath(p, first_in(p, inW), t));
        return o;
    };
    std::vector<Vertex> far = sp.Y;
    far.insert(far.end(), sp.W.begin(), sp.W.end());
    std::sort(far.begin(), far.end());
    Sequence third = fan_sequence(g, far, t, false, tail(P), tail(Qm));
    for (const auto& a : first)
        push(out, glue({ a, middle.front(), third.front() }));
    for (const auto& b : middle)
        push(out, glue({ first.back(), b, third.front() }));
    for (const auto& c : third)
        push(out, glue({ first.back(), middle.back(), c }));
    return out;
}

} // namespace

Vertex GridExpansion::Grid::at(int ring, int column) const
{
    return ids[ring * spokes + mod(column, spokes)];
}

int GridExpansion::Grid::inner_face(const PlaneGraph& g) const
{
    return g.left_face(at(0, 1), at(0, 0));
}

GridExpansion expand_vertices(const PlaneGraph& g, const std::vector<std::pair<Vertex, bool>>& apexes, int rings)
{
    int n = g.num_vertices();
    GridExpansion ex;
    std::vector<int> grid_at(n, -1);
    for (std::size_t i = 0; i < apexes.size(); ++i)
        grid_at[apexes[i].first] = static_cast<int>(i);
    for (auto [a, src] : apexes)
        for (auto [b, src2] : apexes)
            if (g.has_edge(a, b))
                throw Error(ErrorCode::AdjacentST, "expanded vertices are adjacent", {a, b});
    ex.from_base.assign(n, -1);
    std::vector<std::string> names;
    for (Vertex v = 0; v < n; ++v)
        if (grid_at[v] < 0) {
            ex.from_base[v] = static_cast<Vertex>(names.size());
            ex.to_base.push_back(v);
            names.push_back(g.name(v));
        }
    for (auto [a, src] : apexes) {
        GridExpansion::Grid grid;
        grid.apex = a;
        grid.source = src;
        grid.spokes = g.degree(a);
        grid.rings = rings;
        if (grid.spokes < 3)
            throw Error(ErrorCode::DegreeTooSmall, "a grid needs at least three spokes", {a});
        for (int r = 0; r < rings; ++r)
            for (int c = 0; c < grid.spokes; ++c) {
                grid.ids.push_back(static_cast<Vertex>(names.size()));
                ex.to_base.push_back(-1);
                std::string nm = g.name(a) + "#" + std::to_string(r) + "." + std::to_string(c);
                while (g.find(nm))
                    nm += "'";
                names.push_back(nm);
            }
        ex.grids.push_back(std::move(grid));
    }
    ex.grid_of.assign(names.size(), -1);
    for (std::size_t i = 0; i < ex.grids.size(); ++i)
        for (Vertex v : ex.grids[i].ids)
            ex.grid_of[v] = static_cast<int>(i);

    std::vector<std::vector<Vertex>> rot(names.size());
    for (Vertex v = 0; v < n; ++v) {
        if (grid_at[v] >= 0)
            continue;
        for (Vertex u : g.rotation(v)) {
            int gi = grid_at[u];
            rot[ex.from_base[v]].push_back(
                gi < 0 ? ex.from_base[u] : ex.grids[gi].at(rings - 1, g.position(u, v)));
        }
    }
    for (const auto& grid : ex.grids)
        for (int r = 0; r < rings; ++r)
            for (int c = 0; c < grid.spokes; ++c) {
                auto& R = rot[grid.at(r, c)];
                R.push_back(r + 1 < rings ? grid.at(r + 1, c) : ex.from_base[g.rotation(grid.apex)[c]]);
                R.push_back(grid.at(r, c + 1));
                if (r > 0)
                    R.push_back(grid.at(r - 1, c));
                R.push_back(grid.at(r, c - 1));
            }
    ex.graph = make_graph(std::move(names), std::move(rot));
    return ex;
}

int natural_winding(const GridExpansion::Grid& grid, const std::vector<int>& inner, const std::vector<int>& outer)
{
    return largest_shift(grid.spokes, inner, outer, -1) < largest_shift(grid.spokes, inner, outer, 0) ? -1 : 0;
}

std::optional<std::vector<Path>> route_grid(const GridExpansion::Grid& grid, const std::vector<int>& inner,
    const std::vector<int>& outer, int winding)
{
    int l = grid.spokes, k = static_cast<int>(inner.size());
    auto T = targets(l, inner, outer, winding);
    std::vector<int> cur = inner, rem(k);
    for (int j = 0; j < k; ++j)
        rem[j] = T[j] - inner[j];
    std::vector<Path> out(k);
    std::vector<char> occ(l);
    for (int r = 0; r < grid.rings; ++r) {
        std::fill(occ.begin(), occ.end(), 0);
        for (int j = 0; j < k; ++j)
            occ[mod(cur[j], l)] = 1;
        std::vector<int> step(k, 0);
        for (int j = 0; j < k; ++j) {
            int dir = rem[j] > 0 ? 1 : -1;
            while (step[j] * dir < std::abs(rem[j]) && !occ[mod(cur[j] + step[j] + dir, l)])
                step[j] += dir;
        }
        for (int j = 0; j < k; ++j) {
            int dir = step[j] >= 0 ? 1 : -1;
            for (int x = 0; x != step[j] + dir; x += dir)
                out[j].push_back(grid.at(r, cur[j] + x));
            cur[j] += step[j];
            rem[j] -= step[j];
        }
    }
    for (int j = 0; j < k; ++j)
        if (rem[j] != 0)
            return std::nullopt;
    return out;
}

std::optional<Linkage> StExpansion::lift(const Linkage& L, int rotation, const std::vector<int>& windings) const
{
    const auto& base = instance_base;
    int k = static_cast<int>(L.size());
    auto rank = ranks_at(base, grids.grids[0].apex, true, L);
    std::vector<int> pair(k);
    for (int j = 0; j < k; ++j)
        pair[j] = (rank[j] + rotation) % k;
    return lift_paths(grids, base, L, pair, windings);
}

Linkage StExpansion::project(const Linkage& L) const
{
    Linkage out;
    for (const auto& p : L)
        out.push_back(project_path(grids, p));
    return canonical_st(std::move(out));
}

StExpansion grid_expand(const PlaneGraph& g, Vertex s, Vertex t, int k, int rings)
{
    if (g.has_edge(s, t))
        throw Error(ErrorCode::AdjacentST, "s and t are adjacent", {s, t});
    for (Vertex v : {s, t})
        if (g.degree(v) < k + 1)
            throw Error(ErrorCode::DegreeTooSmall, "terminal degree below k + 1", {v, g.degree(v)});
    StExpansion se;
    se.instance_base = g;
    se.grids = expand_vertices(g, { { s, true }, { t, false } }, rings);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < k; ++i)
        pairs.emplace_back(se.grids.grids[0].at(0, i), se.grids.grids[1].at(0, k - 1 - i));
    se.instance = make_two_face(se.grids.graph, Terminals::from_pairs(pairs),
        se.grids.grids[0].inner_face(se.grids.graph), se.grids.grids[1].inner_face(se.grids.graph));
    return se;
}

StVerdict decide_st(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    check_st(inst, P, Q);
    const auto& g = inst.graph;
    Vertex s = inst.terminals.s, t = inst.terminals.t;
    int k = inst.k();
    StVerdict v;
    if (canonical_st(P) == canonical_st(Q)) {
        v.reason = "identical linkages";
        return v;
    }
    if (k <= 1) {
        v.reason = "single path";
        return v;
    }
    if (g.has_edge(s, t)) {
        v.reason = "s and t are adjacent";
        return v;
    }
    if (!min_st_separator(g, s, t, k + 1).cut) {
        v.reason = "no s-t separator of size k";
        return v;
    }
    StSplit sp = split_st(g, s, t, k);
    v.U = sp.U;
    v.W = sp.W;
    if (overlap(sp.U, sp.W)) {
        v.reason = "separators next to s and t overlap";
        return v;
    }
    int n = g.num_vertices();
    auto inU = mask(n, sp.U), inW = mask(n, sp.W);
    Linkage Qm = match_at(P, Q, inU);
    for (std::size_t j = 0; j < P.size(); ++j)
        if (first_in(P[j], inW) != first_in(Qm[j], inW)) {
            v.yes = false;
            v.reason = "paths meeting U at " + g.name(first_in(P[j], inU)) + " meet W at different vertices";
            return v;
        }
    Middle mid = middle_part(inst, sp, P, Qm);
    v.yes = decide_planar_pairs(mid.inst, mid.P, mid.Q);
    v.reason = v.yes ? "middle part reconfigurable" : "middle part not reconfigurable";
    return v;
}

std::optional<Sequence> sequence_st(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    if (!decide_st(inst, P, Q).yes)
        return std::nullopt;
    return sequence_rec(inst, canonical_st(P), canonical_st(Q));
}

} // namespace dpr
