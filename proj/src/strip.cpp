#include "dpr/strip.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

namespace dpr {

namespace {

constexpr int kMargin = 3;
constexpr int kCopyBias = 1 << 20;
constexpr std::size_t kJoinPathLimit = 200'000;

long long vertex_key(const LiftedVertex& x, int n)
{
    return static_cast<long long>(x.copy + kCopyBias) * n + x.v;
}

bool subset(const std::vector<char>& a, const std::vector<char>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i])
            return false;
    return true;
}

long long count(const std::vector<char>& a)
{
    return std::count(a.begin(), a.end(), 1);
}

bool projects_to_simple(const LiftedPath& p, std::vector<char>& mark)
{
    bool ok = true;
    std::size_t i = 0;
    for (; i < p.size(); ++i) {
        if (mark[p[i].v]) {
            ok = false;
            break;
        }
        mark[p[i].v] = 1;
    }
    for (std::size_t j = 0; j < i; ++j)
        mark[p[j].v] = 0;
    return ok;
}

} // namespace

Strip::Strip(const Instance& inst, const Linkage& avoid)
    : inst_(&inst)
    , C_(reference_curve(inst, avoid))
{
    const auto& g = inst.graph;
    fidx_.assign(g.num_faces(), -1);
    offset_.assign(g.num_darts(), 0);
    for (const auto& f : g.faces()) {
        if (f.id == inst.face_S || f.id == inst.face_T)
            continue;
        fidx_[f.id] = static_cast<int>(inner_.size());
        inner_.push_back(f.id);
        int acc = 0;
        for (int d : f.darts) {
            offset_[d] = acc;
            acc += C_.shift[d];
        }
        if (acc != 0)
            throw Error(ErrorCode::InvalidInput, "a face other than S and T winds around S", {f.id});
    }
    num_inner_ = static_cast<int>(inner_.size());
    int ends[2] = {inst.face_S, inst.face_T};
    for (int r = 0; r < 2; ++r) {
        Rim& rim = rim_[r];
        rim.face = ends[r];
        rim.darts = g.face(ends[r]).darts;
        rim.pos.assign(g.num_darts(), -1);
        int acc = 0;
        for (std::size_t t = 0; t < rim.darts.size(); ++t) {
            rim.pos[rim.darts[t]] = static_cast<int>(t);
            rim.offset.push_back(acc);
            acc += C_.shift[rim.darts[t]];
        }
        if (acc != 1 && acc != -1)
            throw Error(ErrorCode::InvalidInput, "boundary of S or T does not wind once", {r, acc});
        rim.turn = acc;
    }
}

Strip::Layout Strip::layout(const Window& w) const
{
    Layout L;
    L.w = w;
    L.inner = (w.hi - w.lo + 1) * num_inner_;
    L.total = L.inner;
    for (int r = 0; r < 2; ++r) {
        const Rim& rim = rim_[r];
        int lo = 0, hi = 0;
        bool first = true;
        for (int o : rim.offset)
            for (int c : {w.lo - 1, w.hi + 1}) {
                int lap = (c - o) * rim.turn;
                lo = first ? lap : std::min(lo, lap);
                hi = first ? lap : std::max(hi, lap);
                first = false;
            }
        L.lap_lo[r] = lo;
        L.laps[r] = hi - lo + 1;
        L.base[r] = L.total;
        L.total += L.laps[r] * static_cast<int>(rim.darts.size());
    }
    return L;
}

int Strip::rim_node(int r, int t, int lap, const Layout& L) const
{
    int m = static_cast<int>(rim_[r].darts.size());
    if (t == m) {
        t = 0;
        ++lap;
    } else if (t < 0) {
        t = m - 1;
        --lap;
    }
    int idx = lap - L.lap_lo[r];
    if (idx < 0 || idx >= L.laps[r])
        return -1;
    return L.base[r] + idx * m + t;
}

LiftedPath Strip::lift(const Path& p, int copy) const
{
    const auto& g = inst_->graph;
    LiftedPath out;
    int c = copy;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.push_back({p[i], c});
        if (i + 1 < p.size())
            c += C_.shift[g.dart(p[i], p[i + 1])];
    }
    return out;
}

Path Strip::project(const LiftedPath& p)
{
    Path out;
    for (const auto& x : p)
        out.push_back(x.v);
    return out;
}

Window Strip::window(const std::vector<LiftedPath>& paths) const
{
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& p : paths)
        for (const auto& x : p) {
            lo = first ? x.copy : std::min(lo, x.copy);
            hi = first ? x.copy : std::max(hi, x.copy);
            first = false;
        }
    return {lo - kMargin, hi + kMargin};
}

long long Strip::edge_key(int d, int copy) const
{
    const auto& g = inst_->graph;
    int t = g.twin(d);
    if (t < d) {
        copy += C_.shift[d];
        d = t;
    }
    return static_cast<long long>(copy + kCopyBias) * g.num_darts() + d;
}

std::unordered_set<long long> Strip::edge_set(const LiftedPath& p) const
{
    const auto& g = inst_->graph;
    std::unordered_set<long long> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        out.insert(edge_key(g.dart(p[i].v, p[i + 1].v), p[i].copy));
    return out;
}

int Strip::left_node(int d, int copy, const Layout& L) const
{
    int f = inst_->graph.face_of(d);
    int fi = fidx_[f];
    if (fi >= 0) {
        int j = copy - offset_[d];
        if (j < L.w.lo || j > L.w.hi)
            return -1;
        return inner_node(fi, j, L);
    }
    int r = f == rim_[0].face ? 0 : 1;
    const Rim& rim = rim_[r];
    int t = rim.pos[d];
    return rim_node(r, t, (copy - rim.offset[t]) * rim.turn, L);
}

int Strip::ray_node(int r, const LiftedVertex& x, const Layout& L) const
{
    const auto& g = inst_->graph;
    const Rim& rim = rim_[r];
    for (std::size_t t = 0; t < rim.darts.size(); ++t)
        if (g.tail(rim.darts[t]) == x.v)
            return rim_node(r, static_cast<int>(t), (x.copy - rim.offset[t]) * rim.turn, L);
    throw Error(ErrorCode::InvalidInput, "path end is not on the boundary of S or T", {x.v});
}

std::vector<LiftedVertex> Strip::face_walk(int fidx, int copy) const
{
    const auto& g = inst_->graph;
    std::vector<LiftedVertex> out;
    for (int d : g.face(inner_[fidx]).darts)
        out.push_back({g.tail(d), copy + offset_[d]});
    return out;
}

std::vector<char> Strip::left_region(const LiftedPath& p, const Window& w) const
{
    const auto& g = inst_->graph;
    auto edges = edge_set(p);
    Layout L = layout(w);
    int ray[2] = {ray_node(0, p.front(), L), ray_node(1, p.back(), L)};
    std::vector<int> label(L.total, -1);
    // neighbours of a node with the parity of the crossing
    std::vector<std::pair<int, int>> nb;
    auto across = [&](int d, int c) {
        int y = left_node(g.twin(d), c + C_.shift[d], L);
        if (y >= 0)
            nb.emplace_back(y, static_cast<int>(edges.count(edge_key(d, c))));
    };
    auto expand = [&](int x) {
        nb.clear();
        if (x < L.inner) {
            int fi = x % num_inner_, j = x / num_inner_ + L.w.lo;
            for (int d : g.face(inner_[fi]).darts)
                across(d, j + offset_[d]);
            return;
        }
        int r = x >= L.base[1] ? 1 : 0;
        const Rim& rim = rim_[r];
        int m = static_cast<int>(rim.darts.size());
        int idx = x - L.base[r], t = idx % m, lap = idx / m + L.lap_lo[r];
        across(rim.darts[t], lap * rim.turn + rim.offset[t]);
        int prev = rim_node(r, t - 1, lap, L), next = rim_node(r, t + 1, lap, L);
        if (prev >= 0)
            nb.emplace_back(prev, x == ray[r]);
        if (next >= 0)
            nb.emplace_back(next, next == ray[r]);
    };
    std::deque<int> q { 0 };
    label[0] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        expand(x);
        for (auto [y, flip] : nb) {
            int parity = label[x] ^ flip;
            if (label[y] < 0) {
                label[y] = parity;
                q.push_back(y);
            } else if (label[y] != parity) {
                throw Error(ErrorCode::InvalidInput, "lifted path does not separate the strip");
            }
        }
    }
    // a face copy at the window edge may have all its neighbours outside;
    // it lies on the same side as its copy one step further in
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < L.inner; ++x) {
            if (label[x] >= 0)
                continue;
            int j = x / num_inner_ + L.w.lo;
            int y = j * 2 < L.w.lo + L.w.hi ? x + num_inner_ : x - num_inner_;
            if (y >= 0 && y < L.inner && label[y] >= 0) {
                label[x] = label[y];
                changed = true;
            }
        }
    }
    int d0 = g.dart(p[0].v, p[1].v);
    int left = label[left_node(d0, p[0].copy, L)];
    std::vector<char> out(L.total, 0);
    for (int x = 0; x < L.total; ++x) {
        if (label[x] < 0)
            throw Error(ErrorCode::WindowTooSmall, "window of the strip is disconnected");
        out[x] = label[x] == left;
    }
    return out;
}

long long Strip::left_size(const Path& p, const Window& w) const
{
    return count(left_region(lift(p), w));
}

bool Strip::precedes(const Path& P, const Path& Q) const
{
    auto a = lift(P), b = lift(Q);
    auto w = window({a, b});
    return subset(left_region(a, w), left_region(b, w));
}

Path Strip::join_path(const Path& P, const Path& Q) const
{
    const auto& g = inst_->graph;
    int n = g.num_vertices();
    auto a = lift(P), b = lift(Q);
    if (!(a.back() == b.back()))
        throw Error(ErrorCode::MuNonzero, "lifts of the pair end in different copies",
            {a.back().copy, b.back().copy});
    if (P == Q)
        return P;
    auto w = window({a, b});
    auto LP = left_region(a, w), LQ = left_region(b, w);
    std::vector<char> lambda(LP.size());
    for (std::size_t x = 0; x < LP.size(); ++x)
        lambda[x] = LP[x] || LQ[x];
    Layout L = layout(w);

    // boundary edges of the union region
    std::unordered_map<long long, std::vector<LiftedVertex>> adj;
    std::unordered_set<long long> seen;
    auto consider = [&](const LiftedVertex& x, const LiftedVertex& y) {
        int d = g.dart(x.v, y.v);
        long long key = edge_key(d, x.copy);
        if (!seen.insert(key).second)
            return;
        int ln = left_node(d, x.copy, L), rn = left_node(g.twin(d), y.copy, L);
        if (ln >= 0 && rn >= 0 && lambda[ln] != lambda[rn]) {
            adj[vertex_key(x, n)].push_back(y);
            adj[vertex_key(y, n)].push_back(x);
        }
    };
    for (const auto* p : {&a, &b})
        for (std::size_t i = 0; i + 1 < p->size(); ++i)
            consider((*p)[i], (*p)[i + 1]);

    auto search = [&](const std::function<std::vector<LiftedVertex>(const LiftedVertex&)>& next,
                      const std::function<bool(const LiftedPath&)>& visit) {
        std::unordered_set<long long> on;
        LiftedPath cur { a.front() };
        on.insert(vertex_key(a.front(), n));
        std::function<bool()> rec = [&]() -> bool {
            const auto& x = cur.back();
            if (x == a.back())
                return visit(cur);
            for (const auto& y : next(x)) {
                long long ky = vertex_key(y, n);
                if (on.count(ky))
                    continue;
                on.insert(ky);
                cur.push_back(y);
                bool go = rec();
                cur.pop_back();
                on.erase(ky);
                if (!go)
                    return false;
            }
            return true;
        };
        rec();
    };

    LiftedPath best;
    search([&](const LiftedVertex& x) { return adj[vertex_key(x, n)]; },
        [&](const LiftedPath& p) {
            if (left_region(p, w) == lambda) {
                best = p;
                return false;
            }
            return true;
        });
    if (best.empty()) {
        // maximal left region among all paths in the union of the lifts
        std::unordered_map<long long, std::vector<LiftedVertex>> uni;
        auto link = [&](const LiftedVertex& x, const LiftedVertex& y) {
            auto& out = uni[vertex_key(x, n)];
            if (std::find(out.begin(), out.end(), y) == out.end())
                out.push_back(y);
        };
        for (const auto* p : {&a, &b})
            for (std::size_t i = 0; i + 1 < p->size(); ++i) {
                link((*p)[i], (*p)[i + 1]);
                link((*p)[i + 1], (*p)[i]);
            }
        long long best_size = -1;
        std::size_t visited = 0;
        search([&](const LiftedVertex& x) { return uni[vertex_key(x, n)]; },
            [&](const LiftedPath& p) {
                auto L = left_region(p, w);
                if (subset(LP, L) && subset(LQ, L) && count(L) > best_size) {
                    best_size = count(L);
                    best = p;
                }
                return ++visited < kJoinPathLimit;
            });
    }
    if (best.empty())
        throw Error(ErrorCode::InvalidInput, "no upper bound path in the union of the lifts");
    std::vector<char> mark(n, 0);
    if (!projects_to_simple(best, mark))
        throw Error(ErrorCode::InvalidInput, "join of a pair does not project to a path");
    return project(best);
}

Linkage Strip::join(const Linkage& P, const Linkage& Q) const
{
    Linkage J;
    for (std::size_t i = 0; i < P.size(); ++i)
        J.push_back(join_path(P[i], Q[i]));
    auto st = validate_linkage(*inst_, J);
    if (!st)
        throw Error(ErrorCode::InvalidInput, "join is not a linkage: " + st.message, st.info);
    return J;
}

Linkage Strip::improve_step(const Linkage& P, const Linkage& target) const
{
    const auto& g = inst_->graph;
    int n = g.num_vertices();
    int k = static_cast<int>(P.size());
    std::vector<char> other(n, 0);
    auto mark_others = [&](int i, char value) {
        for (int h = 0; h < k; ++h)
            if (h != i)
                for (Vertex v : P[h])
                    other[v] = value;
    };
    auto avoids = [&](const Path& p) {
        for (Vertex v : p)
            if (other[v])
                return false;
        return true;
    };

    for (int i = 0; i < k; ++i) {
        if (P[i] == target[i])
            continue;
        mark_others(i, 1);
        bool ok = avoids(target[i]);
        mark_others(i, 0);
        if (ok) {
            Linkage next = P;
            next[i] = target[i];
            return next;
        }
    }

    std::vector<char> mark(n, 0);
    for (int i = 0; i < k; ++i) {
        if (P[i] == target[i])
            continue;
        auto a = lift(P[i]), b = lift(target[i]);
        auto w = window({a, b});
        auto LP = left_region(a, w), LT = left_region(b, w);
        long long base = count(LP);
        std::unordered_map<long long, int> at;
        for (std::size_t x = 0; x < a.size(); ++x)
            at[vertex_key(a[x], n)] = static_cast<int>(x);
        mark_others(i, 1);
        std::vector<std::pair<int, int>> order;
        for (int fi = 0; fi < num_inner_; ++fi)
            for (int j = w.lo; j <= w.hi; ++j)
                order.emplace_back(inner_[fi], j);
        std::sort(order.begin(), order.end());
        Layout lay = layout(w);
        for (auto [fid, j] : order) {
            int fi = fidx_[fid];
            int nd = inner_node(fi, j, lay);
            if (LP[nd] || !LT[nd])
                continue;
            auto walk = face_walk(fi, j);
            int m = static_cast<int>(walk.size());
            std::vector<std::pair<int, int>> contacts; // (walk position, path index)
            for (int t = 0; t < m; ++t) {
                auto it = at.find(vertex_key(walk[t], n));
                if (it != at.end())
                    contacts.emplace_back(t, it->second);
            }
            LiftedPath best;
            long long best_size = base;
            for (auto [t1, p1] : contacts)
                for (auto [t2, p2] : contacts) {
                    if (p1 >= p2)
                        continue;
                    for (int dir : {1, -1}) {
                        LiftedPath cand(a.begin(), a.begin() + p1 + 1);
                        for (int t = (t1 + dir + m) % m; t != t2; t = (t + dir + m) % m)
                            cand.push_back(walk[t]);
                        cand.insert(cand.end(), a.begin() + p2, a.end());
                        if (cand.size() == a.size() && std::equal(cand.begin(), cand.end(), a.begin()))
                            continue;
                        if (!projects_to_simple(cand, mark) || !avoids(project(cand)))
                            continue;
                        auto L = left_region(cand, w);
                        long long size = count(L);
                        if (size > best_size && subset(LP, L) && subset(L, LT)) {
                            best_size = size;
                            best = cand;
                        }
                    }
                }
            if (!best.empty()) {
                mark_others(i, 0);
                Linkage next = P;
                next[i] = project(best);
                return next;
            }
        }
        mark_others(i, 0);
    }
    throw Error(ErrorCode::NoImprovingStep, "no single-path reroute moves towards the target");
}

Sequence Strip::climb(const Linkage& P, const Linkage& target) const
{
    Sequence seq { P };
    std::size_t guard = 0;
    std::size_t cap = static_cast<std::size_t>(inst_->graph.num_vertices() + 8) * (num_inner_ + 8) * (P.size() + 1);
    while (seq.back() != target) {
        if (++guard > cap)
            throw Error(ErrorCode::NoImprovingStep, "climb exceeded its step bound");
        seq.push_back(improve_step(seq.back(), target));
    }
    return seq;
}

} // namespace dpr
