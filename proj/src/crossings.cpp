#include "dpr/crossings.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace dpr {

std::vector<SharedSubwalk> shared_subwalks(const Path& P, const Path& Q)
{
    std::unordered_map<Vertex, int> qpos;
    for (std::size_t i = 0; i < Q.size(); ++i)
        qpos.emplace(Q[i], static_cast<int>(i));
    std::vector<SharedSubwalk> out;
    int n = static_cast<int>(P.size());
    int x = 0;
    while (x < n) {
        auto it = qpos.find(P[x]);
        if (it == qpos.end()) {
            ++x;
            continue;
        }
        SharedSubwalk sw;
        sw.p_first = sw.p_last = x;
        sw.q_first = sw.q_last = it->second;
        while (sw.p_last + 1 < n) {
            auto nt = qpos.find(P[sw.p_last + 1]);
            if (nt == qpos.end() || std::abs(nt->second - sw.q_last) != 1)
                break;
            // a subwalk runs along Q in one direction only
            if (sw.p_last > sw.p_first && (nt->second - sw.q_last) != (sw.q_last - sw.q_first) / (sw.p_last - sw.p_first))
                break;
            ++sw.p_last;
            sw.q_last = nt->second;
        }
        out.push_back(sw);
        x = sw.p_last + 1;
    }
    return out;
}

namespace {

// +1 when x is left of Q at Q[pos], -1 when right.
int side(const PlaneGraph& g, const Path& Q, int pos, Vertex x)
{
    Vertex v = Q[pos];
    Vertex in = Q[pos - 1], outv = Q[pos + 1];
    Vertex w = g.succ(v, in);
    while (w != outv) {
        if (w == x)
            return 1;
        w = g.succ(v, w);
    }
    return -1;
}

} // namespace

int crossing_sign(const PlaneGraph& g, const Path& P, const Path& Q, const SharedSubwalk& sw)
{
    int last_p = static_cast<int>(P.size()) - 1, last_q = static_cast<int>(Q.size()) - 1;
    if (sw.p_first == 0 || sw.p_last == last_p || sw.q_min() == 0 || sw.q_max() == last_q)
        throw Error(ErrorCode::DegenerateAtTerminal, "shared subwalk contains a path endpoint");
    int enter = side(g, Q, sw.q_first, P[sw.p_first - 1]);
    int leave = side(g, Q, sw.q_last, P[sw.p_last + 1]);
    if (enter == leave)
        return 0;
    return enter > 0 ? 1 : -1;
}

CrossingSequence crossing_sequence(const PlaneGraph& g, const Linkage& family, const Path& Qj, int j)
{
    struct Hit {
        int qpos;
        Letter letter;
    };
    std::vector<Hit> hits;
    int last_q = static_cast<int>(Qj.size()) - 1;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Path& P = family[i];
        int last_p = static_cast<int>(P.size()) - 1;
        for (const auto& sw : shared_subwalks(P, Qj)) {
            if (sw.p_first == 0 || sw.p_last == last_p || sw.q_min() == 0 || sw.q_max() == last_q)
                continue;
            int s = crossing_sign(g, P, Qj, sw);
            if (s != 0)
                hits.push_back({sw.q_min(), {static_cast<int>(i) + 1, s}});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.qpos < b.qpos; });
    CrossingSequence cs;
    cs.k = static_cast<int>(family.size());
    cs.j = j;
    for (const auto& h : hits)
        cs.crossings.push_back(h.letter);
    return cs;
}

int mu(const PlaneGraph& g, const Path& P, const Path& Q)
{
    auto on = [](const Path& p, Vertex v) { return std::find(p.begin(), p.end(), v) != p.end(); };
    if (on(Q, P.front()) || on(Q, P.back()) || on(P, Q.front()) || on(P, Q.back()))
        throw Error(ErrorCode::SharedEndpoint, "an endpoint of one path lies on the other");
    int total = 0;
    for (const auto& sw : shared_subwalks(P, Q))
        total += crossing_sign(g, P, Q, sw);
    return total;
}

std::vector<std::vector<int>> mu_matrix(const PlaneGraph& g, const Linkage& P, const Linkage& Q)
{
    std::size_t k = P.size();
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j)
                m[i][j] = mu(g, P[i], Q[j]);
    return m;
}

int mu_two_face(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    if (inst.k() <= 1)
        return 0;
    auto m = mu_matrix(inst.graph, P, Q);
    int value = m[0][1];
    for (int i = 0; i < inst.k(); ++i)
        for (int j = 0; j < inst.k(); ++j)
            if (i != j && m[i][j] != value)
                throw Error(ErrorCode::InconsistentMu,
                    "mu(P_i,Q_j) differs across pairs", {i, j, m[i][j], value});
    return value;
}

ReferenceCurve reference_curve(const Instance& inst, const Linkage& avoid)
{
    const auto& g = inst.graph;
    int S = inst.face_S, T = inst.face_T;
    if (S < 0 || T < 0)
        throw Error(ErrorCode::InvalidInput, "reference curve needs faces S and T");
    std::vector<char> blocked(g.num_darts(), 0);
    for (const auto& p : avoid)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            int d = g.dart(p[i], p[i + 1]);
            blocked[d] = blocked[g.twin(d)] = 1;
        }
    std::vector<int> via(g.num_faces(), -1);
    std::vector<char> seen(g.num_faces(), 0);
    std::deque<int> queue { S };
    seen[S] = 1;
    while (!queue.empty() && !seen[T]) {
        int f = queue.front();
        queue.pop_front();
        for (int d : g.face(f).darts) {
            int e = g.twin(d);
            int h = g.face_of(e);
            if (blocked[d] || seen[h] || h == f)
                continue;
            seen[h] = 1;
            via[h] = e;
            if (h != T)
                queue.push_back(h);
        }
    }
    if (!seen[T])
        throw Error(ErrorCode::NoDualPath, "no dual walk from S to T avoiding the linkage");
    ReferenceCurve C;
    for (int f = T; f != S; f = g.face_of(g.twin(via[f]))) {
        C.darts.push_back(via[f]);
        C.faces.push_back(f);
    }
    C.faces.push_back(S);
    std::reverse(C.darts.begin(), C.darts.end());
    std::reverse(C.faces.begin(), C.faces.end());
    C.shift.assign(g.num_darts(), 0);
    for (int d : C.darts) {
        C.shift[d] += 1;
        C.shift[g.twin(d)] -= 1;
    }
    return C;
}

int lift_index(const PlaneGraph& g, const ReferenceCurve& C, const Path& walk)
{
    int total = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        total += C.shift[g.dart(walk[i], walk[i + 1])];
    return total;
}

} // namespace dpr
