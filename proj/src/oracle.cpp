#include "dpr/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace dpr {

namespace {

struct LinkageHash {
    std::size_t operator()(const Linkage& L) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (const auto& p : L) {
            for (Vertex v : p)
                h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
            h = (h ^ 0x9e3779b9u) * 1099511628211ull;
        }
        return h;
    }
};

bool dfs(const PlaneGraph& g, Vertex v, Vertex b, std::vector<char>& blocked, Path& cur,
    const std::function<bool(const Path&)>& visit)
{
    if (v == b)
        return visit(cur);
    for (Vertex u : g.rotation(v)) {
        if (blocked[u])
            continue;
        blocked[u] = 1;
        cur.push_back(u);
        bool go = dfs(g, u, b, blocked, cur, visit);
        cur.pop_back();
        blocked[u] = 0;
        if (!go)
            return false;
    }
    return true;
}

Linkage normal(const Instance& inst, Linkage L)
{
    return inst.st() ? canonical_st(std::move(L)) : L;
}

} // namespace

void for_each_path(const PlaneGraph& g, Vertex a, Vertex b, std::vector<char>& blocked,
    const std::function<bool(const Path&)>& visit)
{
    Path cur { a };
    char was = blocked[a];
    blocked[a] = 1;
    dfs(g, a, b, blocked, cur, visit);
    blocked[a] = was;
}

std::vector<Linkage> enumerate_linkages(const Instance& inst, std::size_t limit)
{
    const auto& g = inst.graph;
    int k = inst.k();
    std::vector<Linkage> out;
    std::vector<char> blocked(g.num_vertices(), 0);
    auto too_many = [&] {
        if (out.size() > limit)
            throw Error(ErrorCode::TooMany, "more linkages than the limit", {static_cast<long long>(limit)});
    };

    if (inst.st()) {
        Vertex s = inst.terminals.s, t = inst.terminals.t;
        std::vector<Path> all;
        for_each_path(g, s, t, blocked, [&](const Path& p) {
            all.push_back(p);
            if (all.size() > limit)
                throw Error(ErrorCode::TooMany, "more s-t paths than the limit", {static_cast<long long>(limit)});
            return true;
        });
        std::sort(all.begin(), all.end());
        std::vector<char> used(g.num_vertices(), 0);
        Linkage cur;
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                too_many();
                return;
            }
            for (std::size_t i = from; i < all.size(); ++i) {
                const Path& p = all[i];
                bool ok = true;
                for (std::size_t x = 1; x + 1 < p.size(); ++x)
                    if (used[p[x]]) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                for (std::size_t x = 1; x + 1 < p.size(); ++x)
                    used[p[x]] = 1;
                cur.push_back(p);
                rec(i + 1);
                cur.pop_back();
                for (std::size_t x = 1; x + 1 < p.size(); ++x)
                    used[p[x]] = 0;
            }
        };
        rec(0);
        return out;
    }

    for (int i = 0; i < k; ++i) {
        blocked[inst.source(i)] = 1;
        blocked[inst.sink(i)] = 1;
    }
    Linkage cur;
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            out.push_back(cur);
            too_many();
            return;
        }
        Vertex s = inst.source(i), t = inst.sink(i);
        blocked[t] = 0;
        // the search keeps every vertex of p blocked while p is visited
        for_each_path(g, s, t, blocked, [&](const Path& p) {
            cur.push_back(p);
            rec(i + 1);
            cur.pop_back();
            return true;
        });
        blocked[t] = 1;
    };
    rec(0);
    return out;
}

std::vector<Linkage> neighbours(const Instance& inst, const Linkage& L)
{
    const auto& g = inst.graph;
    std::vector<Linkage> out;
    std::vector<char> blocked(g.num_vertices(), 0);
    for (std::size_t i = 0; i < L.size(); ++i) {
        std::fill(blocked.begin(), blocked.end(), 0);
        for (std::size_t j = 0; j < L.size(); ++j) {
            if (j == i)
                continue;
            std::size_t lo = inst.st() ? 1 : 0, hi = inst.st() ? L[j].size() - 1 : L[j].size();
            for (std::size_t x = lo; x < hi; ++x)
                blocked[L[j][x]] = 1;
        }
        if (!inst.st())
            for (int j = 0; j < inst.k(); ++j)
                if (j != static_cast<int>(i)) {
                    blocked[inst.source(j)] = 1;
                    blocked[inst.sink(j)] = 1;
                }
        Vertex s = inst.source(static_cast<int>(i)), t = inst.sink(static_cast<int>(i));
        for_each_path(g, s, t, blocked, [&](const Path& p) {
            if (p == L[i])
                return true;
            if (inst.st())
                for (std::size_t j = 0; j < L.size(); ++j)
                    if (j != i && L[j] == p)
                        return true;
            Linkage n = L;
            n[i] = p;
            out.push_back(normal(inst, std::move(n)));
            return true;
        });
    }
    return out;
}

namespace {

// Breadth-first search; returns the parent map and whether Q was reached.
bool bfs(const Instance& inst, const Linkage& P, const Linkage* Q, std::size_t limit,
    std::unordered_map<Linkage, Linkage, LinkageHash>& parent)
{
    Linkage start = normal(inst, P);
    std::optional<Linkage> goal;
    if (Q)
        goal = normal(inst, *Q);
    parent.emplace(start, start);
    if (goal && start == *goal)
        return true;
    std::deque<Linkage> q { start };
    while (!q.empty()) {
        Linkage cur = std::move(q.front());
        q.pop_front();
        for (auto& n : neighbours(inst, cur)) {
            if (parent.count(n))
                continue;
            parent.emplace(n, cur);
            if (parent.size() > limit)
                throw Error(ErrorCode::TooMany, "reconfiguration graph exceeds the limit",
                    {static_cast<long long>(limit)});
            if (goal && n == *goal)
                return true;
            q.push_back(std::move(n));
        }
    }
    return false;
}

} // namespace

bool oracle_decide(const Instance& inst, const Linkage& P, const Linkage& Q, std::size_t limit)
{
    std::unordered_map<Linkage, Linkage, LinkageHash> parent;
    return bfs(inst, P, &Q, limit, parent);
}

std::optional<Sequence> oracle_shortest(const Instance& inst, const Linkage& P, const Linkage& Q, std::size_t limit)
{
    std::unordered_map<Linkage, Linkage, LinkageHash> parent;
    if (!bfs(inst, P, &Q, limit, parent))
        return std::nullopt;
    Sequence seq;
    Linkage cur = normal(inst, Q);
    while (true) {
        seq.push_back(cur);
        const Linkage& p = parent.at(cur);
        if (p == cur)
            break;
        cur = p;
    }
    std::reverse(seq.begin(), seq.end());
    if (!inst.st()) {
        seq.front() = P;
        seq.back() = Q;
    }
    return seq;
}

std::size_t component_size(const Instance& inst, const Linkage& P, std::size_t limit)
{
    std::unordered_map<Linkage, Linkage, LinkageHash> parent;
    bfs(inst, P, nullptr, limit, parent);
    return parent.size();
}

} // namespace dpr
