#include "dpr/ncl.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>

namespace dpr {

int NclGraph::heavy_edge(int v) const
{
    for (int e : incident[v])
        if (edges[e].weight == 2)
            return e;
    return -1;
}

NclGraph ncl_from_rotation(const std::vector<std::array<int, 3>>& neighbours,
    const std::vector<std::pair<int, int>>& light)
{
    const int n = static_cast<int>(neighbours.size());
    std::set<std::pair<int, int>> lightset;
    for (auto [u, v] : light)
        lightset.insert({std::min(u, v), std::max(u, v)});
    NclGraph h;
    h.incident.assign(n, {-1, -1, -1});
    std::map<std::pair<int, int>, int> id;
    for (int u = 0; u < n; ++u)
        for (int v : neighbours[u]) {
            if (v < 0 || v >= n || v == u)
                throw Error(ErrorCode::InvalidNcl, "bad neighbour of vertex " + std::to_string(u), {u});
            auto key = std::make_pair(std::min(u, v), std::max(u, v));
            if (!id.count(key)) {
                id[key] = h.num_edges();
                h.edges.push_back({key.first, key.second, lightset.count(key) ? 1 : 2});
            }
        }
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < 3; ++i) {
            int v = neighbours[u][i];
            h.incident[u][i] = id[{std::min(u, v), std::max(u, v)}];
        }
    h.kind.assign(n, NclKind::Or);
    for (int v = 0; v < n; ++v) {
        int heavy = 0;
        for (int e : h.incident[v])
            heavy += h.edges[e].weight == 2;
        h.kind[v] = heavy == 3 ? NclKind::Or : NclKind::And;
    }
    if (auto st = ncl_check_graph(h); !st)
        throw Error(st.code, st.message, st.info);
    return h;
}

Status ncl_check_graph(const NclGraph& h)
{
    const int n = h.num_vertices();
    if (static_cast<int>(h.incident.size()) != n)
        return Status::failure(ErrorCode::InvalidNcl, "incident lists do not match vertices");
    std::vector<int> deg(n, 0);
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < h.num_edges(); ++e) {
        const auto& ed = h.edges[e];
        if (ed.u < 0 || ed.v < 0 || ed.u >= n || ed.v >= n || ed.u == ed.v)
            return Status::failure(ErrorCode::InvalidNcl, "bad endpoints of edge " + std::to_string(e), {e});
        if (ed.weight != 1 && ed.weight != 2)
            return Status::failure(ErrorCode::InvalidNcl, "edge weight must be 1 or 2", {e});
        if (!seen.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}).second)
            return Status::failure(ErrorCode::InvalidNcl, "parallel edges", {e});
        ++deg[ed.u];
        ++deg[ed.v];
    }
    for (int v = 0; v < n; ++v) {
        if (deg[v] != 3)
            return Status::failure(ErrorCode::InvalidNcl, "vertex " + std::to_string(v) + " is not of degree 3", {v});
        int heavy = 0;
        for (int e : h.incident[v]) {
            if (e < 0 || e >= h.num_edges() || (h.edges[e].u != v && h.edges[e].v != v))
                return Status::failure(ErrorCode::InvalidNcl, "bad incident list at vertex " + std::to_string(v), {v});
            heavy += h.edges[e].weight == 2;
        }
        if (h.incident[v][0] == h.incident[v][1] || h.incident[v][1] == h.incident[v][2]
            || h.incident[v][0] == h.incident[v][2])
            return Status::failure(ErrorCode::InvalidNcl, "repeated edge at vertex " + std::to_string(v), {v});
        bool ok = h.kind[v] == NclKind::Or ? heavy == 3 : heavy == 1;
        if (!ok)
            return Status::failure(ErrorCode::InvalidNcl, "weights do not match the kind of vertex " + std::to_string(v), {v});
    }
    return Status::success();
}

int incoming_weight(const NclGraph& h, const NclConfig& c, int v)
{
    int w = 0;
    for (int e : h.incident[v])
        if (c.toward[e] == v)
            w += h.edges[e].weight;
    return w;
}

Status ncl_validate(const NclGraph& h, const NclConfig& c)
{
    if (static_cast<int>(c.toward.size()) != h.num_edges())
        return Status::failure(ErrorCode::InvalidNcl, "configuration does not orient every edge");
    for (int e = 0; e < h.num_edges(); ++e)
        if (c.toward[e] != h.edges[e].u && c.toward[e] != h.edges[e].v)
            return Status::failure(ErrorCode::InvalidNcl, "edge " + std::to_string(e) + " points to a non-endpoint", {e});
    for (int v = 0; v < h.num_vertices(); ++v)
        if (incoming_weight(h, c, v) < 2)
            return Status::failure(ErrorCode::InvalidNcl, "incoming weight below two at vertex " + std::to_string(v), {v});
    return Status::success();
}

namespace {

std::vector<std::vector<Vertex>> vertex_rotation(const NclGraph& h)
{
    std::vector<std::vector<Vertex>> rot(h.num_vertices());
    for (int v = 0; v < h.num_vertices(); ++v)
        for (int e : h.incident[v])
            rot[v].push_back(h.other(e, v));
    return rot;
}

std::vector<std::string> numbered(const std::string& prefix, int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(prefix + std::to_string(i));
    return names;
}

} // namespace

bool ncl_planar(const NclGraph& h)
{
    try {
        make_graph(numbered("v", h.num_vertices()), vertex_rotation(h), true);
        return true;
    } catch (const Error&) {
        return false;
    }
}

NclConfig ncl_flip(const NclGraph& h, const NclConfig& c, int e)
{
    NclConfig out = c;
    out.toward[e] = h.other(e, c.toward[e]);
    return out;
}

std::vector<int> legal_flips(const NclGraph& h, const NclConfig& c)
{
    std::vector<int> out;
    for (int e = 0; e < h.num_edges(); ++e) {
        int head = c.toward[e];
        if (incoming_weight(h, c, head) - h.edges[e].weight >= 2)
            out.push_back(e);
    }
    return out;
}

NclGraph random_ncl_graph(std::mt19937_64& rng, int vertices)
{
    if (vertices < 4 || vertices % 2)
        throw Error(ErrorCode::InvalidInput, "an AND/OR graph needs an even number of at least 4 vertices");
    auto rot = rotation_from_positions({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}},
        {{0.0, 3.0}, {2.6, -1.5}, {-2.6, -1.5}, {0.0, 0.0}});
    auto replace = [&](Vertex v, Vertex from, Vertex to) { *std::find(rot[v].begin(), rot[v].end(), from) = to; };
    while (static_cast<int>(rot.size()) < vertices) {
        PlaneGraph g = make_graph(numbered("v", static_cast<int>(rot.size())), rot, true);
        const Face& f = g.face(static_cast<int>(rng() % g.num_faces()));
        const int len = static_cast<int>(f.darts.size());
        int i = static_cast<int>(rng() % len);
        int j = (i + 1 + static_cast<int>(rng() % (len - 1))) % len;
        Vertex a = g.tail(f.darts[i]), b = g.head(f.darts[i]);
        Vertex c = g.tail(f.darts[j]), d = g.head(f.darts[j]);
        Vertex x = static_cast<Vertex>(rot.size()), y = x + 1;
        replace(a, b, x);
        replace(b, a, x);
        replace(c, d, y);
        replace(d, c, y);
        rot.push_back({a, y, b});
        rot.push_back({c, x, d});
    }
    PlaneGraph g = make_graph(numbered("v", vertices), rot, true);
    std::vector<std::pair<int, int>> light;
    std::vector<char> used(vertices, 0);
    int cycles = static_cast<int>(rng() % 3);
    std::vector<int> order(g.num_faces());
    for (int i = 0; i < g.num_faces(); ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int f : order) {
        if (cycles == 0)
            break;
        const auto& walk = g.face(f).walk;
        bool free = std::none_of(walk.begin(), walk.end(), [&](Vertex v) { return used[v]; });
        if (!free)
            continue;
        for (int d : g.face(f).darts) {
            used[g.tail(d)] = 1;
            light.push_back({g.tail(d), g.head(d)});
        }
        --cycles;
    }
    std::vector<std::array<int, 3>> nb(vertices);
    for (int v = 0; v < vertices; ++v)
        std::copy(rot[v].begin(), rot[v].end(), nb[v].begin());
    return ncl_from_rotation(nb, light);
}

std::optional<NclConfig> random_ncl_config(std::mt19937_64& rng, const NclGraph& h)
{
    const int m = h.num_edges();
    std::vector<int> order(m);
    for (int e = 0; e < m; ++e)
        order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    NclConfig c;
    c.toward.assign(m, -1);
    std::vector<int> in(h.num_vertices(), 0), open(h.num_vertices(), 0);
    for (int e = 0; e < m; ++e) {
        open[h.edges[e].u] += h.edges[e].weight;
        open[h.edges[e].v] += h.edges[e].weight;
    }
    long long budget = 200000;
    std::function<bool(int)> rec = [&](int i) {
        if (i == m)
            return true;
        if (--budget < 0)
            return false;
        int e = order[i];
        int w = h.edges[e].weight;
        std::array<int, 2> heads = {h.edges[e].u, h.edges[e].v};
        if (rng() % 2)
            std::swap(heads[0], heads[1]);
        for (int head : heads) {
            int tail = h.other(e, head);
            c.toward[e] = head;
            in[head] += w;
            open[head] -= w;
            open[tail] -= w;
            if (in[tail] + open[tail] >= 2 && in[head] + open[head] >= 2 && rec(i + 1))
                return true;
            in[head] -= w;
            open[head] += w;
            open[tail] += w;
        }
        c.toward[e] = -1;
        return false;
    };
    if (!rec(0))
        return std::nullopt;
    return c;
}

NclConfig random_ncl_walk(std::mt19937_64& rng, const NclGraph& h, NclConfig c, int steps)
{
    for (int i = 0; i < steps; ++i) {
        auto flips = legal_flips(h, c);
        if (flips.empty())
            break;
        c = ncl_flip(h, c, flips[rng() % flips.size()]);
    }
    return c;
}

int ncl_bandwidth(const NclGraph& h, const std::vector<int>& layout)
{
    int b = 0;
    for (const auto& e : h.edges)
        b = std::max(b, std::abs(layout[e.u] - layout[e.v]));
    return b;
}

int layout_bandwidth(const PlaneGraph& g, const std::vector<int>& layout)
{
    int b = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex u : g.rotation(v))
            b = std::max(b, std::abs(layout[u] - layout[v]));
    return b;
}

namespace {

void require_valid(const NclGraph& h, const NclConfig& c)
{
    if (auto st = ncl_validate(h, c); !st)
        throw Error(st.code, st.message, st.info);
}

std::string edge_tag(int e) { return "e" + std::to_string(e); }
std::string vertex_tag(int v) { return "v" + std::to_string(v); }

/// Accumulates named vertices and undirected edges.
struct Builder {
    std::vector<std::string> names;
    std::vector<std::vector<Vertex>> adj;

    Vertex add(std::string name)
    {
        names.push_back(std::move(name));
        adj.emplace_back();
        return static_cast<Vertex>(names.size()) - 1;
    }
    void join(Vertex a, Vertex b)
    {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
};

/// First edge at OR vertex v, in incident order, that points at v.
int first_incoming(const NclGraph& h, const NclConfig& c, int v)
{
    for (int e : h.incident[v])
        if (c.toward[e] == v)
            return e;
    return -1;
}

/// The two weight-1 edges at an AND vertex, clockwise after the weight-2 edge.
std::pair<int, int> light_edges(const NclGraph& h, int v)
{
    int i = 0;
    while (h.edges[h.incident[v][i]].weight != 2)
        ++i;
    return {h.incident[v][(i + 1) % 3], h.incident[v][(i + 2) % 3]};
}

int side(const NclGraph& h, int e, int v) { return h.edges[e].u == v ? 0 : 1; }

} // namespace

// ---------------------------------------------------------------------------
// s-t reduction

NclStReduction gen_ncl_stpaths(const NclGraph& h, const std::vector<int>* layout)
{
    if (auto st = ncl_check_graph(h); !st)
        throw Error(st.code, st.message, st.info);
    const int n = h.num_vertices(), m = h.num_edges();
    NclStReduction r;
    r.h = h;
    r.white.assign(m, {-1, -1});
    r.edge_pair.assign(m, {-1, -1});
    r.red.assign(n, {-1, -1});
    r.blue.assign(n, {-1, -1});
    r.black.assign(n, -1);
    Builder b;
    Vertex s = b.add("s"), t = b.add("t");
    for (int e = 0; e < m; ++e) {
        const std::string tag = edge_tag(e);
        const char* colour = h.edges[e].weight == 2 ? "r_" : "b_";
        r.white[e][0] = b.add("w_" + tag + "_" + vertex_tag(h.edges[e].u));
        r.white[e][1] = b.add("w_" + tag + "_" + vertex_tag(h.edges[e].v));
        r.edge_pair[e][0] = b.add(colour + tag + "_1");
        r.edge_pair[e][1] = b.add(colour + tag + "_2");
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                b.join(r.white[e][i], r.edge_pair[e][j]);
    }
    for (int v = 0; v < n; ++v) {
        const std::string tag = vertex_tag(v);
        r.blue[v] = {b.add("b_" + tag + "_1"), b.add("b_" + tag + "_2")};
        auto w = [&](int e) { return r.white[e][side(h, e, v)]; };
        if (h.kind[v] == NclKind::Or) {
            for (int e : h.incident[v])
                for (Vertex x : r.blue[v])
                    b.join(x, w(e));
            continue;
        }
        r.red[v] = {b.add("r_" + tag + "_1"), b.add("r_" + tag + "_2")};
        r.black[v] = b.add("k_" + tag);
        int e = h.heavy_edge(v);
        auto [f, g] = light_edges(h, v);
        b.join(w(e), r.blue[v][0]);
        b.join(w(e), r.blue[v][1]);
        b.join(w(f), r.red[v][0]);
        b.join(w(g), r.red[v][1]);
        b.join(w(f), w(g));
        for (Vertex x : {r.red[v][0], r.red[v][1], r.blue[v][0], r.blue[v][1]})
            b.join(x, r.black[v]);
    }

    // Gadget items: vertex v is v, edge e is n + e.
    std::vector<int> reds, blues;
    for (int v = 0; v < n; ++v) {
        if (h.kind[v] == NclKind::And)
            reds.push_back(v);
        blues.push_back(v);
    }
    for (int e = 0; e < m; ++e)
        (h.edges[e].weight == 2 ? reds : blues).push_back(n + e);

    std::vector<int> position; // layout of the subdivided graph, per item
    if (layout) {
        if (static_cast<int>(layout->size()) != n)
            throw Error(ErrorCode::InvalidInput, "layout must place every vertex");
        position.assign(n + m, 0);
        for (int v = 0; v < n; ++v)
            position[v] = 4 * (*layout)[v];
        for (int v = 0; v < n; ++v) {
            int offset = 1;
            for (int e : h.incident[v])
                if ((*layout)[h.other(e, v)] > (*layout)[v])
                    position[n + e] = 4 * (*layout)[v] + offset++;
        }
        std::set<int> distinct(position.begin(), position.end());
        if (static_cast<int>(distinct.size()) != n + m)
            throw Error(ErrorCode::InvalidInput, "layout must be injective");
        auto by_position = [&](int a, int c) { return position[a] < position[c]; };
        std::sort(reds.begin(), reds.end(), by_position);
        std::sort(blues.begin(), blues.end(), by_position);
    }
    r.red_order = reds;
    r.blue_order = blues;

    auto chain = [&](const std::vector<int>& items, bool red_chain) {
        Vertex prev = s;
        for (int x : items) {
            std::array<Vertex, 2> ends = x < n ? (red_chain ? r.red[x] : r.blue[x]) : r.edge_pair[x - n];
            b.join(prev, ends[0]);
            prev = ends[1];
        }
        b.join(prev, t);
    };
    chain(reds, true);
    chain(blues, false);

    PlaneGraph g = make_graph(b.names, b.adj, false);
    r.instance = classify_instance(g, Terminals::from_st(s, t, 2));

    if (layout) {
        r.layout.assign(g.num_vertices(), 0);
        int lo = 0, hi = 0;
        auto place = [&](int item, const std::vector<Vertex>& members) {
            for (int i = 0; i < static_cast<int>(members.size()); ++i) {
                if (members[i] < 0)
                    continue;
                r.layout[members[i]] = 8 * position[item] + i;
                lo = std::min(lo, r.layout[members[i]]);
                hi = std::max(hi, r.layout[members[i]]);
            }
        };
        for (int e = 0; e < m; ++e)
            place(n + e, {r.white[e][0], r.white[e][1], r.edge_pair[e][0], r.edge_pair[e][1]});
        for (int v = 0; v < n; ++v)
            place(v, {r.red[v][0], r.red[v][1], r.blue[v][0], r.blue[v][1], r.black[v]});
        r.layout[s] = lo - 1;
        r.layout[t] = hi + 1;
        for (int& x : r.layout)
            x -= lo - 1;
    }
    return r;
}

namespace {

/// Route of both paths through every gadget.
struct StState {
    std::vector<int> tail;       ///< per edge: endpoint whose white vertex the edge path uses
    std::vector<char> red_black; ///< per AND vertex: P1 passes k_v
    std::vector<int> or_choice;  ///< per OR vertex: edge whose white vertex P2 uses
};

StState st_state(const NclGraph& h, const NclConfig& c)
{
    StState s;
    s.tail.resize(h.num_edges());
    for (int e = 0; e < h.num_edges(); ++e)
        s.tail[e] = h.other(e, c.toward[e]);
    s.red_black.assign(h.num_vertices(), 0);
    s.or_choice.assign(h.num_vertices(), -1);
    for (int v = 0; v < h.num_vertices(); ++v) {
        if (h.kind[v] == NclKind::And)
            s.red_black[v] = c.toward[h.heavy_edge(v)] == v;
        else
            s.or_choice[v] = first_incoming(h, c, v);
    }
    return s;
}

Linkage st_paths(const NclStReduction& r, const StState& st, const std::vector<char>& blue_black)
{
    const NclGraph& h = r.h;
    const int n = h.num_vertices();
    auto w = [&](int e, int v) { return r.white[e][side(h, e, v)]; };
    Path p1{r.instance.terminals.s}, p2{r.instance.terminals.s};
    for (int x : r.red_order) {
        if (x >= n) {
            int e = x - n;
            p1.insert(p1.end(), {r.edge_pair[e][0], w(e, st.tail[e]), r.edge_pair[e][1]});
        } else if (st.red_black[x]) {
            p1.insert(p1.end(), {r.red[x][0], r.black[x], r.red[x][1]});
        } else {
            auto [f, g] = light_edges(h, x);
            p1.insert(p1.end(), {r.red[x][0], w(f, x), w(g, x), r.red[x][1]});
        }
    }
    for (int y : r.blue_order) {
        if (y >= n) {
            int e = y - n;
            p2.insert(p2.end(), {r.edge_pair[e][0], w(e, st.tail[e]), r.edge_pair[e][1]});
        } else if (h.kind[y] == NclKind::Or) {
            p2.insert(p2.end(), {r.blue[y][0], w(st.or_choice[y], y), r.blue[y][1]});
        } else if (blue_black[y]) {
            p2.insert(p2.end(), {r.blue[y][0], r.black[y], r.blue[y][1]});
        } else {
            p2.insert(p2.end(), {r.blue[y][0], w(h.heavy_edge(y), y), r.blue[y][1]});
        }
    }
    p1.push_back(r.instance.terminals.t);
    p2.push_back(r.instance.terminals.t);
    return {p1, p2};
}

std::vector<char> default_blue(const NclGraph& h, const StState& st)
{
    std::vector<char> out(h.num_vertices(), 0);
    for (int v = 0; v < h.num_vertices(); ++v)
        out[v] = h.kind[v] == NclKind::And && !st.red_black[v];
    return out;
}

/// Reads orientations from the white vertex each edge path visits.
template <class OnPath>
NclConfig read_config(const NclGraph& h, const std::vector<std::array<Vertex, 2>>& white, OnPath on_path)
{
    NclConfig c;
    c.toward.resize(h.num_edges());
    for (int e = 0; e < h.num_edges(); ++e) {
        bool at_u = on_path(e, white[e][0]), at_v = on_path(e, white[e][1]);
        if (at_u == at_v)
            throw Error(ErrorCode::MalformedLinkage,
                "edge gadget " + std::to_string(e) + " is not crossed at exactly one white vertex", {e});
        c.toward[e] = at_u ? h.edges[e].v : h.edges[e].u;
    }
    if (auto st = ncl_validate(h, c); !st)
        throw Error(ErrorCode::MalformedLinkage, "read-off orientation is not a valid configuration", st.info);
    return c;
}

} // namespace

Linkage NclStReduction::created(const NclConfig& c) const
{
    require_valid(h, c);
    StState st = st_state(h, c);
    return st_paths(*this, st, default_blue(h, st));
}

NclConfig NclStReduction::canonical(const Linkage& L) const
{
    if (L.size() != 2)
        throw Error(ErrorCode::MalformedLinkage, "expected two paths");
    Vertex probe = -1;
    for (int x : red_order) {
        probe = x < h.num_vertices() ? red[x][0] : edge_pair[x - h.num_vertices()][0];
        break;
    }
    int red_path = 0;
    if (probe >= 0 && std::find(L[1].begin(), L[1].end(), probe) != L[1].end())
        red_path = 1;
    std::array<std::set<Vertex>, 2> on{std::set<Vertex>(L[red_path].begin(), L[red_path].end()),
        std::set<Vertex>(L[1 - red_path].begin(), L[1 - red_path].end())};
    return read_config(h, white, [&](int e, Vertex w) { return on[h.edges[e].weight == 2 ? 0 : 1].count(w) > 0; });
}

Sequence NclStReduction::flip(const NclConfig& c, int e) const
{
    require_valid(h, c);
    NclConfig next = ncl_flip(h, c, e);
    require_valid(h, next);
    StState st = st_state(h, c);
    std::vector<char> blue_black = default_blue(h, st);
    Sequence seq{st_paths(*this, st, blue_black)};
    auto step = [&] { seq.push_back(st_paths(*this, st, blue_black)); };
    int head = c.toward[e], tail = h.other(e, head);
    if (h.edges[e].weight == 2) {
        if (h.kind[head] == NclKind::And) {
            st.red_black[head] = 0;
            step();
            blue_black[head] = 1;
            step();
        } else if (st.or_choice[head] == e) {
            st.or_choice[head] = first_incoming(h, next, head);
            step();
        }
        st.tail[e] = head;
        step();
        if (h.kind[tail] == NclKind::And) {
            blue_black[tail] = 0;
            step();
            st.red_black[tail] = 1;
            step();
        } else if (int choice = first_incoming(h, next, tail); choice != st.or_choice[tail]) {
            st.or_choice[tail] = choice;
            step();
        }
    } else {
        st.tail[e] = head;
        step();
    }
    if (seq.back() != created(next))
        throw Error(ErrorCode::InvalidInput, "flip recipe did not reach the created linkage");
    return seq;
}

GeneratedInstance gen_ncl_stpaths(const NclGraph& h, const NclConfig& sigma, const NclConfig& tau)
{
    NclStReduction r = gen_ncl_stpaths(h);
    return {r.instance, r.created(sigma), r.created(tau)};
}

// ---------------------------------------------------------------------------
// plane reduction

namespace {

std::pair<double, double> polar(double degrees, double radius)
{
    double a = degrees * std::numbers::pi / 180.0;
    return {radius * std::cos(a), radius * std::sin(a)};
}

/// Vertex gadget drawn around the origin: white vertices on spokes at
/// 90, -30, -150 degrees for incident slots 0, 1, 2.
struct LocalDrawing {
    std::vector<Vertex> global; ///< local index -> global id, -1 for the spoke ends
    std::vector<std::pair<double, double>> pos;
    std::vector<std::pair<int, int>> edges;

    int add(Vertex g, std::pair<double, double> p)
    {
        global.push_back(g);
        pos.push_back(p);
        return static_cast<int>(global.size()) - 1;
    }
};

double slot_angle(int i) { return 90.0 - 120.0 * i; }

} // namespace

NclPlanarReduction gen_ncl_planar(const NclGraph& h)
{
    if (auto st = ncl_check_graph(h); !st)
        throw Error(st.code, st.message, st.info);
    if (!ncl_planar(h))
        throw Error(ErrorCode::NotPlanarH, "incident orders are not a plane embedding of the AND/OR graph");
    const int n = h.num_vertices(), m = h.num_edges();
    NclPlanarReduction r;
    r.h = h;
    r.white.assign(m, {-1, -1});
    r.edge_ends.assign(m, {-1, -1});
    r.gadget.assign(n, {});
    Builder b;
    for (int e = 0; e < m; ++e) {
        const std::string tag = edge_tag(e);
        r.white[e][0] = b.add("w_" + tag + "_" + vertex_tag(h.edges[e].u));
        r.white[e][1] = b.add("w_" + tag + "_" + vertex_tag(h.edges[e].v));
        r.edge_ends[e] = {b.add("s_" + tag), b.add("t_" + tag)};
    }
    for (int v = 0; v < n; ++v) {
        const std::string tag = vertex_tag(v);
        auto& gd = r.gadget[v];
        gd.s = b.add("s_" + tag);
        gd.t = b.add("t_" + tag);
        if (h.kind[v] == NclKind::Or) {
            gd.a = b.add("a_" + tag);
            gd.b = b.add("b_" + tag);
            gd.c = b.add("c_" + tag);
            gd.d = b.add("d_" + tag);
            gd.so = b.add("so_" + tag);
            gd.to = b.add("to_" + tag);
        }
    }
    std::vector<std::vector<Vertex>> rot(b.names.size());
    for (int e = 0; e < m; ++e)
        for (Vertex x : r.edge_ends[e])
            rot[x] = {r.white[e][0], r.white[e][1]};

    for (int v = 0; v < n; ++v) {
        const auto& gd = r.gadget[v];
        LocalDrawing d;
        std::array<int, 3> w{}, spoke{};
        for (int i = 0; i < 3; ++i) {
            int e = h.incident[v][i];
            w[i] = d.add(r.white[e][side(h, e, v)], polar(slot_angle(i), 4.0));
        }
        for (int i = 0; i < 3; ++i) {
            spoke[i] = d.add(-1, polar(slot_angle(i), 8.0));
            d.edges.push_back({w[i], spoke[i]});
        }
        if (h.kind[v] == NclKind::Or) {
            // roles e, f, g are slots 0, 1, 2
            int a = d.add(gd.a, polar(30.0, 3.0));
            int bb = d.add(gd.b, polar(150.0, 3.0));
            int s = d.add(gd.s, polar(-90.0, 3.0));
            int t = d.add(gd.t, {0.0, 2.5});
            int dd = d.add(gd.d, {0.0, 1.2});
            int c = d.add(gd.c, {0.0, -1.5});
            int so = d.add(gd.so, {0.8, 0.0});
            int to = d.add(gd.to, {-0.8, 0.0});
            d.edges.insert(d.edges.end(), {{w[0], a}, {w[0], bb}, {w[0], t}, {w[1], a}, {w[1], s}, {w[2], bb},
                                              {w[2], s}, {a, c}, {a, dd}, {bb, c}, {bb, dd}, {c, s}, {c, so},
                                              {c, to}, {dd, t}, {dd, so}, {dd, to}});
        } else {
            int ie = 0;
            while (h.edges[h.incident[v][ie]].weight != 2)
                ++ie;
            int f = (ie + 1) % 3, g = (ie + 2) % 3;
            int s = d.add(gd.s, polar(slot_angle(ie) - 60.0, 2.5));
            int t = d.add(gd.t, polar(slot_angle(ie) + 60.0, 2.5));
            d.edges.insert(d.edges.end(), {{w[ie], s}, {w[ie], t}, {w[f], s}, {w[g], t}, {w[f], w[g]}});
        }
        std::vector<std::vector<Vertex>> adj(d.global.size());
        for (auto [x, y] : d.edges) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        auto local = rotation_from_positions(adj, d.pos);
        for (int x = 0; x < static_cast<int>(d.global.size()); ++x) {
            Vertex gx = d.global[x];
            if (gx < 0)
                continue;
            for (Vertex y : local[x]) {
                if (d.global[y] >= 0) {
                    rot[gx].push_back(d.global[y]);
                    continue;
                }
                // spoke: the edge gadget, s_e on the left of edges[e].u -> edges[e].v
                int i = static_cast<int>(std::find(w.begin(), w.end(), x) - w.begin());
                int e = h.incident[v][i];
                auto [se, te] = r.edge_ends[e];
                if (h.edges[e].u == v)
                    rot[gx].insert(rot[gx].end(), {se, te});
                else
                    rot[gx].insert(rot[gx].end(), {te, se});
            }
        }
    }

    PlaneGraph g = make_graph(b.names, rot, true);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    r.edge_index.resize(m);
    for (int e = 0; e < m; ++e) {
        r.edge_index[e] = static_cast<int>(pairs.size());
        pairs.push_back({r.edge_ends[e][0], r.edge_ends[e][1]});
    }
    r.vertex_index.resize(n);
    for (int v = 0; v < n; ++v) {
        r.vertex_index[v] = static_cast<int>(pairs.size());
        pairs.push_back({r.gadget[v].s, r.gadget[v].t});
    }
    r.or_index.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (h.kind[v] == NclKind::Or) {
            r.or_index[v] = static_cast<int>(pairs.size());
            pairs.push_back({r.gadget[v].so, r.gadget[v].to});
        }
    r.instance = classify_instance(g, Terminals::from_pairs(pairs));
    return r;
}

Linkage NclPlanarReduction::created(const NclConfig& c) const
{
    require_valid(h, c);
    Linkage L(instance.terminals.pairs.size());
    auto w = [&](int e, int v) { return white[e][side(h, e, v)]; };
    for (int e = 0; e < h.num_edges(); ++e)
        L[edge_index[e]] = {edge_ends[e][0], w(e, h.other(e, c.toward[e])), edge_ends[e][1]};
    for (int v = 0; v < h.num_vertices(); ++v) {
        const auto& gd = gadget[v];
        if (h.kind[v] == NclKind::And) {
            int e = h.heavy_edge(v);
            auto [f, g] = light_edges(h, v);
            if (c.toward[e] == v)
                L[vertex_index[v]] = {gd.s, w(e, v), gd.t};
            else
                L[vertex_index[v]] = {gd.s, w(f, v), w(g, v), gd.t};
            continue;
        }
        const auto& inc = h.incident[v];
        int choice = first_incoming(h, c, v);
        if (choice == inc[0]) {
            L[vertex_index[v]] = {gd.s, gd.c, gd.a, w(inc[0], v), gd.t};
            L[or_index[v]] = {gd.so, gd.d, gd.to};
        } else if (choice == inc[1]) {
            L[vertex_index[v]] = {gd.s, w(inc[1], v), gd.a, gd.d, gd.t};
            L[or_index[v]] = {gd.so, gd.c, gd.to};
        } else {
            L[vertex_index[v]] = {gd.s, w(inc[2], v), gd.b, gd.d, gd.t};
            L[or_index[v]] = {gd.so, gd.c, gd.to};
        }
    }
    return L;
}

NclConfig NclPlanarReduction::canonical(const Linkage& L) const
{
    if (L.size() != instance.terminals.pairs.size())
        throw Error(ErrorCode::MalformedLinkage, "wrong number of paths");
    return read_config(h, white, [&](int e, Vertex w) {
        const Path& p = L[edge_index[e]];
        return std::find(p.begin(), p.end(), w) != p.end();
    });
}

Sequence NclPlanarReduction::flip(const NclConfig& c, int e) const
{
    require_valid(h, c);
    NclConfig next = ncl_flip(h, c, e);
    require_valid(h, next);
    const PlaneGraph& g = instance.graph;
    std::vector<char> allowed(g.num_vertices(), 0);
    std::vector<int> movable{edge_index[e]};
    for (Vertex x : white[e])
        allowed[x] = 1;
    for (Vertex x : edge_ends[e])
        allowed[x] = 1;
    for (int v : {h.edges[e].u, h.edges[e].v}) {
        const auto& gd = gadget[v];
        for (Vertex x : {gd.s, gd.t, gd.a, gd.b, gd.c, gd.d, gd.so, gd.to})
            if (x >= 0)
                allowed[x] = 1;
        for (int f : h.incident[v])
            allowed[white[f][side(h, f, v)]] = 1;
        movable.push_back(vertex_index[v]);
        if (or_index[v] >= 0)
            movable.push_back(or_index[v]);
    }
    const Linkage start = created(c), goal = created(next);
    std::map<Linkage, Linkage> parent{{start, {}}};
    std::deque<Linkage> queue{start};
    while (!queue.empty()) {
        Linkage cur = queue.front();
        queue.pop_front();
        if (cur == goal) {
            Sequence seq{cur};
            while (seq.back() != start)
                seq.push_back(parent[seq.back()]);
            std::reverse(seq.begin(), seq.end());
            return seq;
        }
        std::vector<char> busy(g.num_vertices(), 0);
        for (const Path& p : cur)
            for (Vertex x : p)
                busy[x] = 1;
        for (int i : movable) {
            for (Vertex x : cur[i])
                busy[x] = 0;
            Vertex target = cur[i].back();
            Path path{cur[i].front()};
            busy[path[0]] = 1;
            std::function<void()> dfs = [&] {
                Vertex x = path.back();
                if (x == target) {
                    if (path != cur[i]) {
                        Linkage nxt = cur;
                        nxt[i] = path;
                        if (parent.emplace(nxt, cur).second)
                            queue.push_back(nxt);
                    }
                    return;
                }
                for (Vertex y : g.rotation(x)) {
                    if (!allowed[y] || busy[y])
                        continue;
                    busy[y] = 1;
                    path.push_back(y);
                    dfs();
                    path.pop_back();
                    busy[y] = 0;
                }
            };
            dfs();
            busy[path[0]] = 0;
            for (Vertex x : cur[i])
                busy[x] = 1;
        }
    }
    throw Error(ErrorCode::InvalidInput, "no local step sequence realises the flip");
}

GeneratedInstance gen_ncl_planar(const NclGraph& h, const NclConfig& sigma, const NclConfig& tau)
{
    NclPlanarReduction r = gen_ncl_planar(h);
    return {r.instance, r.created(sigma), r.created(tau)};
}

} // namespace dpr
