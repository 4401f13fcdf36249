#include "dpr/separators.hpp"

#include <algorithm>
#include <deque>

namespace dpr {

namespace {

constexpr int kInf = 1 << 29;

struct Arc {
    int to;
    int cap;
    int rev;
    int orig; ///< capacity at creation; 0 for reverse arcs
};

class Network {
public:
    explicit Network(int n)
        : adj_(n)
    {
    }

    void add(int u, int v, int cap)
    {
        adj_[u].push_back({v, cap, static_cast<int>(adj_[v].size()), cap});
        adj_[v].push_back({u, 0, static_cast<int>(adj_[u].size()) - 1, 0});
    }

    // Unit augmentations by BFS until @p limit units or no path.
    int run(int s, int t, int limit)
    {
        int flow = 0;
        int n = static_cast<int>(adj_.size());
        while (flow < limit) {
            std::vector<std::pair<int, int>> parent(n, {-1, -1});
            std::deque<int> q { s };
            parent[s] = {s, -1};
            while (!q.empty() && parent[t].first < 0) {
                int u = q.front();
                q.pop_front();
                for (int i = 0; i < static_cast<int>(adj_[u].size()); ++i) {
                    const Arc& a = adj_[u][i];
                    if (a.cap > 0 && parent[a.to].first < 0) {
                        parent[a.to] = {u, i};
                        q.push_back(a.to);
                    }
                }
            }
            if (parent[t].first < 0)
                break;
            for (int v = t; v != s;) {
                auto [u, i] = parent[v];
                Arc& a = adj_[u][i];
                a.cap -= 1;
                adj_[v][a.rev].cap += 1;
                v = u;
            }
            ++flow;
        }
        return flow;
    }

    std::vector<char> reach_from(int s) const
    {
        std::vector<char> seen(adj_.size(), 0);
        std::deque<int> q { s };
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const Arc& a : adj_[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push_back(a.to);
                }
        }
        return seen;
    }

    std::vector<char> reach_to(int t) const
    {
        std::vector<char> seen(adj_.size(), 0);
        std::deque<int> q { t };
        seen[t] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            // arc u->v with residual: stored at adj_[u][rev of (v's arc)]
            for (const Arc& back : adj_[v]) {
                const Arc& fwd = adj_[back.to][back.rev];
                if (fwd.cap > 0 && !seen[back.to]) {
                    seen[back.to] = 1;
                    q.push_back(back.to);
                }
            }
        }
        return seen;
    }

    const std::vector<Arc>& arcs(int u) const { return adj_[u]; }

private:
    std::vector<std::vector<Arc>> adj_;
};

} // namespace

FlowCuts vertex_flow(const PlaneGraph& g, const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks,
    int limit)
{
    int n = g.num_vertices();
    FlowCuts res;
    std::vector<char> is_src(n, 0), is_snk(n, 0);
    for (Vertex s : sources)
        is_src[s] = 1;
    for (Vertex t : sinks)
        is_snk[t] = 1;
    for (Vertex s : sources) {
        if (is_snk[s])
            res.unbounded = true;
        for (Vertex u : g.rotation(s))
            if (is_snk[u])
                res.unbounded = true;
    }
    if (res.unbounded) {
        res.value = limit;
        return res;
    }
    int SS = 2 * n, TT = 2 * n + 1;
    Network net(2 * n + 2);
    for (Vertex v = 0; v < n; ++v)
        net.add(2 * v, 2 * v + 1, (is_src[v] || is_snk[v]) ? kInf : 1);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.rotation(v))
            net.add(2 * v + 1, 2 * u, kInf);
    for (Vertex s : sources)
        net.add(SS, 2 * s, kInf);
    for (Vertex t : sinks)
        net.add(2 * t + 1, TT, kInf);
    res.value = net.run(SS, TT, limit);

    auto from = net.reach_from(SS);
    auto to = net.reach_to(TT);
    for (Vertex v = 0; v < n; ++v) {
        bool in_r = from[2 * v], out_r = from[2 * v + 1];
        if (in_r && !out_r)
            res.source_cut.push_back(v);
        else if (in_r && out_r)
            res.source_side.push_back(v);
        bool in_t = to[2 * v], out_t = to[2 * v + 1];
        if (out_t && !in_t)
            res.sink_cut.push_back(v);
        else if (in_t && out_t)
            res.sink_side.push_back(v);
    }

    // decompose into paths along arcs that carry flow
    std::vector<std::vector<int>> fl(2 * n + 2);
    for (int u = 0; u < 2 * n + 2; ++u)
        for (const Arc& a : net.arcs(u))
            fl[u].push_back(a.orig > 0 ? a.orig - a.cap : 0);
    for (int unit = 0; unit < res.value; ++unit) {
        std::vector<int> nodes;
        int u = SS;
        int guard = 0;
        while (u != TT && guard++ < 4 * n + 8) {
            bool moved = false;
            for (std::size_t i = 0; i < fl[u].size(); ++i)
                if (fl[u][i] > 0) {
                    fl[u][i] -= 1;
                    u = net.arcs(u)[i].to;
                    moved = true;
                    break;
                }
            if (!moved)
                break;
            if (u < 2 * n && u % 2 == 0)
                nodes.push_back(u / 2);
        }
        // cut loops so the recorded walk is a simple path
        std::vector<Vertex> path;
        for (Vertex v : nodes) {
            auto it = std::find(path.begin(), path.end(), v);
            if (it != path.end())
                path.erase(it + 1, path.end());
            else
                path.push_back(v);
        }
        res.paths.push_back(path);
    }
    return res;
}

CutResult min_terminal_separator(const Instance& inst)
{
    int k = inst.k();
    auto fc = vertex_flow(inst.graph, inst.sources(), inst.sinks(), k + 1);
    CutResult r;
    if (fc.unbounded || fc.value >= k + 1) {
        r.bound = k + 1;
        return r;
    }
    if (fc.value < k)
        throw Error(ErrorCode::NoLinkagePossible, "minimum terminal separator is below k", {fc.value});
    r.bound = k;
    r.cut = VertexCut { fc.source_cut, fc.source_side };
    return r;
}

CutResult min_st_separator(const PlaneGraph& g, Vertex s, Vertex t, int limit)
{
    if (g.has_edge(s, t))
        throw Error(ErrorCode::AdjacentTerminals, "s and t are adjacent");
    auto fc = vertex_flow(g, {s}, {t}, limit);
    CutResult r;
    if (fc.value >= limit) {
        r.bound = limit;
        return r;
    }
    r.bound = fc.value;
    r.cut = VertexCut { fc.source_cut, fc.source_side };
    return r;
}

std::vector<Vertex> minimal_side_set(const PlaneGraph& g, Vertex s, Vertex t, int k, Side side)
{
    if (g.has_edge(s, t))
        throw Error(ErrorCode::AdjacentTerminals, "s and t are adjacent");
    auto fc = vertex_flow(g, {s}, {t}, k + 1);
    if (fc.value != k)
        throw Error(ErrorCode::CutNotK, "minimum s-t cut differs from k", {fc.value, k});
    return side == Side::Source ? fc.source_side : fc.sink_side;
}

std::vector<Vertex> neighbourhood(const PlaneGraph& g, const std::vector<Vertex>& X)
{
    std::vector<char> in(g.num_vertices(), 0), nb(g.num_vertices(), 0);
    for (Vertex v : X)
        in[v] = 1;
    for (Vertex v : X)
        for (Vertex u : g.rotation(v))
            if (!in[u])
                nb[u] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (nb[v])
            out.push_back(v);
    return out;
}

bool separates(const PlaneGraph& g, const std::vector<Vertex>& cut, const std::vector<Vertex>& from,
    const std::vector<Vertex>& to)
{
    std::vector<char> blocked(g.num_vertices(), 0), seen(g.num_vertices(), 0), target(g.num_vertices(), 0);
    for (Vertex v : cut)
        blocked[v] = 1;
    for (Vertex v : to)
        target[v] = 1;
    std::deque<Vertex> q;
    for (Vertex v : from)
        if (!blocked[v] && !seen[v]) {
            seen[v] = 1;
            q.push_back(v);
        }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (target[v])
            return false;
        for (Vertex u : g.rotation(v))
            if (!blocked[u] && !seen[u]) {
                seen[u] = 1;
                q.push_back(u);
            }
    }
    return true;
}

} // namespace dpr
