#include "dpr/two_face.hpp"

#include "dpr/one_face.hpp"
#include "dpr/separators.hpp"

#include <algorithm>
#include <set>

namespace dpr {

namespace {

void check_input(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    if (inst.kind != InstanceKind::TwoFace && inst.kind != InstanceKind::OneFace)
        throw Error(ErrorCode::InvalidInput, "instance is not two-face");
    for (const Linkage* L : {&P, &Q}) {
        auto st = validate_linkage(inst, *L);
        if (!st)
            throw Error(ErrorCode::InvalidInput, "invalid linkage: " + st.message, st.info);
    }
}

bool all_on_one_face(const Instance& inst)
{
    std::vector<Vertex> all = inst.sources();
    for (Vertex t : inst.sinks())
        all.push_back(t);
    return !inst.graph.faces_containing(all).empty();
}

Vertex crossing_vertex(const Path& p, const std::vector<Vertex>& U)
{
    for (Vertex v : p)
        if (std::binary_search(U.begin(), U.end(), v))
            return v;
    return -1;
}

std::vector<Vertex> meet(const Path& p, const std::vector<Vertex>& U)
{
    std::vector<Vertex> out;
    for (Vertex v : p)
        if (std::binary_search(U.begin(), U.end(), v))
            out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Path to_local(const Path& p, const std::vector<Vertex>& to_parent)
{
    Path out;
    for (Vertex v : p)
        out.push_back(static_cast<Vertex>(std::lower_bound(to_parent.begin(), to_parent.end(), v) - to_parent.begin()));
    return out;
}

Path to_global(const Path& p, const std::vector<Vertex>& to_parent)
{
    Path out;
    for (Vertex v : p)
        out.push_back(to_parent[v]);
    return out;
}

/// The two halves of an instance split at a size-k separator.
struct Halves {
    Instance inst[2];
    std::vector<Vertex> to_parent[2];
    Linkage P[2];
    Linkage Q[2];
};

Halves split(const Instance& inst, const Linkage& P, const Linkage& Q, const VertexCut& cut)
{
    const auto& g = inst.graph;
    std::vector<char> in_x(g.num_vertices(), 0);
    for (Vertex v : cut.side)
        in_x[v] = 1;
    std::vector<Vertex> near, far;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (in_x[v] || std::binary_search(cut.cut.begin(), cut.cut.end(), v))
            near.push_back(v);
        if (!in_x[v])
            far.push_back(v);
    }
    Halves h;
    std::vector<std::pair<Vertex, Vertex>> first, second;
    for (int i = 0; i < inst.k(); ++i) {
        Vertex u = crossing_vertex(P[i], cut.cut);
        first.emplace_back(inst.source(i), u);
        second.emplace_back(u, inst.sink(i));
    }
    h.inst[0] = restrict_instance(inst, near, first, h.to_parent[0]);
    h.inst[1] = restrict_instance(inst, far, second, h.to_parent[1]);
    for (int i = 0; i < inst.k(); ++i) {
        Vertex u = first[i].second;
        h.P[0].push_back(to_local(subpath(P[i], inst.source(i), u), h.to_parent[0]));
        h.Q[0].push_back(to_local(subpath(Q[i], inst.source(i), u), h.to_parent[0]));
        h.P[1].push_back(to_local(subpath(P[i], u, inst.sink(i)), h.to_parent[1]));
        h.Q[1].push_back(to_local(subpath(Q[i], u, inst.sink(i)), h.to_parent[1]));
    }
    return h;
}

/// A connected component with the pairs it carries.
struct Part {
    Instance inst;
    std::vector<Vertex> to_parent;
    std::vector<int> pairs;
    Linkage P;
    Linkage Q;
};

std::vector<Part> by_component(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    const auto& g = inst.graph;
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<Vertex> stack { s };
        comp[s] = c;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.rotation(v))
                if (comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        ++c;
    }
    std::vector<Part> out;
    for (int x = 0; x < c; ++x) {
        Part part;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int i = 0; i < inst.k(); ++i)
            if (comp[inst.source(i)] == x) {
                part.pairs.push_back(i);
                pairs.emplace_back(inst.source(i), inst.sink(i));
            }
        if (pairs.empty())
            continue;
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
            if (comp[v] == x)
                keep.push_back(v);
        part.inst = restrict_instance(inst, keep, pairs, part.to_parent);
        for (int i : part.pairs) {
            part.P.push_back(to_local(P[i], part.to_parent));
            part.Q.push_back(to_local(Q[i], part.to_parent));
        }
        out.push_back(std::move(part));
    }
    return out;
}

bool decide_rec(const Instance& inst, const Linkage& P, const Linkage& Q, TwoFaceVerdict* top)
{
    if (inst.k() <= 1 || all_on_one_face(inst))
        return true;
    if (inst.graph.num_components() > 1) {
        for (const auto& part : by_component(inst, P, Q))
            if (!decide_rec(part.inst, part.P, part.Q, nullptr))
                return false;
        return true;
    }
    auto r = min_terminal_separator(inst);
    if (!r.cut) {
        int m = mu_two_face(inst, P, Q);
        if (top) {
            top->mu = m;
            if (m != 0)
                top->reason = "mu(P,Q) is nonzero and no terminal separator of size k exists";
        }
        return m == 0;
    }
    if (top)
        top->separator = r.cut->cut;
    for (int i = 0; i < inst.k(); ++i)
        if (meet(P[i], r.cut->cut) != meet(Q[i], r.cut->cut)) {
            if (top)
                top->reason = "P_" + std::to_string(i + 1) + " and Q_" + std::to_string(i + 1)
                    + " cross the size-k separator at different vertices";
            return false;
        }
    Halves h = split(inst, P, Q, *r.cut);
    for (int s = 0; s < 2; ++s)
        if (!decide_rec(h.inst[s], h.P[s], h.Q[s], nullptr)) {
            if (top)
                top->reason = "a part beyond the size-k separator is not reconfigurable";
            return false;
        }
    return true;
}

Sequence climb_to_join(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    Strip strip(inst, P);
    Linkage J = strip.join(P, Q);
    Sequence fw = strip.climb(P, J);
    Sequence bw = strip.climb(Q, J);
    for (auto it = bw.rbegin() + 1; it != bw.rend(); ++it)
        fw.push_back(*it);
    return fw;
}

Sequence sequence_rec(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    if (P == Q)
        return {P};
    if (inst.k() <= 1)
        return {P, Q};
    if (all_on_one_face(inst))
        return sequence_common_face(inst.graph, P, Q);
    if (inst.graph.num_components() > 1) {
        Sequence out { P };
        for (const auto& part : by_component(inst, P, Q)) {
            Sequence sub = sequence_rec(part.inst, part.P, part.Q);
            for (std::size_t x = 1; x < sub.size(); ++x) {
                Linkage L = out.back();
                for (std::size_t y = 0; y < part.pairs.size(); ++y)
                    L[part.pairs[y]] = to_global(sub[x][y], part.to_parent);
                out.push_back(L);
            }
        }
        return out;
    }
    auto r = min_terminal_separator(inst);
    if (!r.cut)
        return climb_to_join(inst, P, Q);
    Halves h = split(inst, P, Q, *r.cut);
    Sequence a = sequence_rec(h.inst[0], h.P[0], h.Q[0]);
    Sequence b = sequence_rec(h.inst[1], h.P[1], h.Q[1]);
    int k = inst.k();
    auto glue = [&](const Linkage& near, const Linkage& far) {
        Linkage L;
        for (int i = 0; i < k; ++i) {
            Path p = to_global(near[i], h.to_parent[0]);
            Path q = to_global(far[i], h.to_parent[1]);
            p.insert(p.end(), q.begin() + 1, q.end());
            L.push_back(p);
        }
        return L;
    };
    Sequence out;
    for (const auto& L : a)
        out.push_back(glue(L, h.P[1]));
    for (std::size_t x = 1; x < b.size(); ++x)
        out.push_back(glue(h.Q[0], b[x]));
    return out;
}

void pieces_rec(const Instance& inst, const Linkage& P, const Linkage& Q, const std::vector<Vertex>& to_root,
    std::vector<TwoFacePiece>& out)
{
    std::optional<CutResult> r;
    if (inst.k() > 1 && !all_on_one_face(inst)) {
        if (inst.graph.num_components() > 1) {
            for (const auto& part : by_component(inst, P, Q)) {
                std::vector<Vertex> map;
                for (Vertex v : part.to_parent)
                    map.push_back(to_root[v]);
                pieces_rec(part.inst, part.P, part.Q, map, out);
            }
            return;
        }
        r = min_terminal_separator(inst);
    }
    if (!r || !r->cut) {
        out.push_back({inst, to_root, P, Q});
        return;
    }
    Halves h = split(inst, P, Q, *r->cut);
    for (int s = 0; s < 2; ++s) {
        std::vector<Vertex> map;
        for (Vertex v : h.to_parent[s])
            map.push_back(to_root[v]);
        pieces_rec(h.inst[s], h.P[s], h.Q[s], map, out);
    }
}

} // namespace

Instance restrict_instance(const Instance& inst, const std::vector<Vertex>& keep,
    const std::vector<std::pair<Vertex, Vertex>>& pairs, std::vector<Vertex>& to_parent)
{
    std::vector<Vertex> map;
    PlaneGraph sub = inst.graph.induced(keep, &map);
    to_parent.assign(sub.num_vertices(), -1);
    for (Vertex v = 0; v < inst.graph.num_vertices(); ++v)
        if (map[v] >= 0)
            to_parent[map[v]] = v;
    std::vector<std::pair<Vertex, Vertex>> local;
    for (auto [s, t] : pairs)
        local.emplace_back(map[s], map[t]);
    Instance cls = classify_instance(sub, Terminals::from_pairs(local));
    if (cls.kind == InstanceKind::OneFace)
        return cls;
    if (sub.num_components() > 1) {
        // split further by component before use
        cls.kind = InstanceKind::General;
        cls.face_S = cls.face_T = -1;
        return cls;
    }
    // prefer faces that keep a dart of the parent's S (resp. T)
    auto ranked = [&](const std::vector<Vertex>& vs, int parent_face) {
        auto faces = sub.faces_containing(vs);
        std::set<int> keepers;
        if (parent_face >= 0)
            for (int d : inst.graph.face(parent_face).darts) {
                Vertex a = map[inst.graph.tail(d)], b = map[inst.graph.head(d)];
                if (a >= 0 && b >= 0)
                    keepers.insert(sub.left_face(a, b));
            }
        std::stable_partition(faces.begin(), faces.end(), [&](int f) { return keepers.count(f) > 0; });
        return faces;
    };
    Instance tmp;
    tmp.terminals = Terminals::from_pairs(local);
    for (int S : ranked(tmp.sources(), inst.face_S))
        for (int T : ranked(tmp.sinks(), inst.face_T))
            if (S != T)
                return make_two_face(sub, Terminals::from_pairs(local), S, T);
    throw Error(ErrorCode::InvalidInput, "part beyond a separator is not a two-face instance");
}

bool decide_planar_pairs(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    return decide_rec(inst, P, Q, nullptr);
}

Sequence sequence_planar_pairs(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    return sequence_rec(inst, P, Q);
}

TwoFaceVerdict decide_two_face(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    check_input(inst, P, Q);
    TwoFaceVerdict v;
    v.yes = decide_rec(inst, P, Q, &v);
    return v;
}

std::optional<Sequence> sequence_two_face(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    if (!decide_two_face(inst, P, Q).yes)
        return std::nullopt;
    return sequence_rec(inst, P, Q);
}

std::vector<TwoFacePiece> two_face_pieces(const Instance& inst, const Linkage& P, const Linkage& Q)
{
    check_input(inst, P, Q);
    std::vector<Vertex> id(inst.graph.num_vertices());
    for (Vertex v = 0; v < inst.graph.num_vertices(); ++v)
        id[v] = v;
    std::vector<TwoFacePiece> out;
    pieces_rec(inst, P, Q, id, out);
    return out;
}

} // namespace dpr
