#include "dpr/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace dpr {

bool Face::contains(Vertex v) const
{
    return std::find(walk.begin(), walk.end(), v) != walk.end();
}

std::optional<Vertex> PlaneGraph::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Vertex PlaneGraph::at(const std::string& name) const
{
    auto v = find(name);
    if (!v)
        throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
    return *v;
}

int PlaneGraph::position(Vertex v, Vertex u) const
{
    const auto& r = rotation_[v];
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == u)
            return static_cast<int>(i);
    return -1;
}

Vertex PlaneGraph::succ(Vertex v, Vertex u) const
{
    const auto& r = rotation_[v];
    int p = position(v, u);
    return r[(p + 1) % r.size()];
}

Vertex PlaneGraph::pred(Vertex v, Vertex u) const
{
    const auto& r = rotation_[v];
    int p = position(v, u);
    return r[(p + r.size() - 1) % r.size()];
}

int PlaneGraph::dart(Vertex u, Vertex v) const
{
    int p = position(u, v);
    if (p < 0)
        throw Error(ErrorCode::NotAPath, "no edge " + names_[u] + "-" + names_[v], {u, v});
    return offset_[u] + p;
}

std::vector<int> PlaneGraph::faces_containing(const std::vector<Vertex>& vs) const
{
    std::vector<int> out;
    for (const auto& f : faces_) {
        bool all = true;
        for (Vertex v : vs)
            if (!f.contains(v)) {
                all = false;
                break;
            }
        if (all)
            out.push_back(f.id);
    }
    return out;
}

void PlaneGraph::trace()
{
    int n = num_vertices();
    offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        offset_[v + 1] = offset_[v] + static_cast<int>(rotation_[v].size());
    int m2 = offset_[n];
    dart_tail_.assign(m2, 0);
    dart_head_.assign(m2, 0);
    twin_.assign(m2, -1);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            dart_tail_[offset_[v] + i] = v;
            dart_head_[offset_[v] + i] = rotation_[v][i];
        }
    for (int d = 0; d < m2; ++d)
        twin_[d] = offset_[dart_head_[d]] + position(dart_head_[d], dart_tail_[d]);

    dart_face_.assign(m2, -1);
    faces_.clear();
    for (int d0 = 0; d0 < m2; ++d0) {
        if (dart_face_[d0] >= 0)
            continue;
        Face f;
        f.id = static_cast<int>(faces_.size());
        int d = d0;
        do {
            dart_face_[d] = f.id;
            f.darts.push_back(d);
            f.walk.push_back(dart_tail_[d]);
            Vertex u = dart_tail_[d], v = dart_head_[d];
            d = offset_[v] + position(v, succ(v, u));
        } while (d != d0);
        faces_.push_back(std::move(f));
    }

    std::vector<int> comp(n, -1);
    num_components_ = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack { s };
        comp[s] = num_components_;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (Vertex u : rotation_[v])
                if (comp[u] < 0) {
                    comp[u] = num_components_;
                    stack.push_back(u);
                }
        }
        ++num_components_;
    }
}

PlaneGraph make_graph(std::vector<std::string> names, std::vector<std::vector<Vertex>> rotation,
    bool require_planar)
{
    int n = static_cast<int>(rotation.size());
    if (static_cast<int>(names.size()) != n)
        throw Error(ErrorCode::InvalidInput, "names and rotation differ in length");
    PlaneGraph g;
    for (int v = 0; v < n; ++v) {
        if (!g.index_.emplace(names[v], v).second)
            throw Error(ErrorCode::InvalidInput, "duplicate vertex '" + names[v] + "'");
        std::set<Vertex> seen;
        for (Vertex u : rotation[v]) {
            if (u < 0 || u >= n)
                throw Error(ErrorCode::UnknownVertex, "rotation of '" + names[v] + "' names an unknown vertex");
            if (u == v || !seen.insert(u).second)
                throw Error(ErrorCode::MultiEdgeOrLoop, "loop or repeated neighbour at '" + names[v] + "'", {v});
        }
    }
    for (int v = 0; v < n; ++v)
        for (Vertex u : rotation[v])
            if (std::find(rotation[u].begin(), rotation[u].end(), v) == rotation[u].end())
                throw Error(ErrorCode::AsymmetricRotation,
                    "'" + names[v] + "' lists '" + names[u] + "' but not vice versa", {v, u});
    g.names_ = std::move(names);
    g.rotation_ = std::move(rotation);
    g.trace();

    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack { s };
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (Vertex u : g.rotation_[v])
                if (comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        ++c;
    }
    std::vector<long long> V(c, 0), E(c, 0), F(c, 0);
    for (int v = 0; v < n; ++v) {
        V[comp[v]] += 1;
        E[comp[v]] += g.degree(v);
        if (g.degree(v) == 0)
            F[comp[v]] += 1; // an isolated vertex bounds the one face around it
    }
    for (const auto& f : g.faces_)
        F[comp[f.walk.front()]] += 1;
    bool planar = true;
    for (int i = 0; i < c; ++i)
        if (V[i] - E[i] / 2 + F[i] != 2)
            planar = false;
    if (require_planar && !planar)
        throw Error(ErrorCode::NotPlanarEmbedding, "Euler characteristic check failed");
    g.embedded_ = require_planar;
    return g;
}

namespace {

std::vector<std::vector<Vertex>> resolve(const std::vector<std::string>& vertices,
    const std::map<std::string, std::vector<std::string>>& rotation)
{
    std::unordered_map<std::string, Vertex> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        idx.emplace(vertices[i], static_cast<Vertex>(i));
    std::vector<std::vector<Vertex>> rot(vertices.size());
    for (const auto& [name, list] : rotation) {
        auto it = idx.find(name);
        if (it == idx.end())
            throw Error(ErrorCode::UnknownVertex, "rotation given for unknown vertex '" + name + "'");
        for (const auto& u : list) {
            auto jt = idx.find(u);
            if (jt == idx.end())
                throw Error(ErrorCode::UnknownVertex, "rotation of '" + name + "' names unknown '" + u + "'");
            rot[it->second].push_back(jt->second);
        }
    }
    return rot;
}

} // namespace

PlaneGraph build_plane_graph(const std::vector<std::string>& vertices,
    const std::map<std::string, std::vector<std::string>>& rotation)
{
    return make_graph(vertices, resolve(vertices, rotation), true);
}

PlaneGraph build_abstract_graph(const std::vector<std::string>& vertices,
    const std::map<std::string, std::vector<std::string>>& adjacency)
{
    return make_graph(vertices, resolve(vertices, adjacency), false);
}

PlaneGraph PlaneGraph::induced(const std::vector<Vertex>& keep, std::vector<Vertex>* map_out) const
{
    std::vector<Vertex> map(num_vertices(), -1);
    std::vector<Vertex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::string> names;
    for (Vertex v : sorted) {
        map[v] = static_cast<Vertex>(names.size());
        names.push_back(names_[v]);
    }
    std::vector<std::vector<Vertex>> rot(sorted.size());
    for (Vertex v : sorted)
        for (Vertex u : rotation_[v])
            if (map[u] >= 0)
                rot[map[v]].push_back(map[u]);
    if (map_out)
        *map_out = map;
    return make_graph(std::move(names), std::move(rot), embedded_);
}

std::vector<std::vector<Vertex>> rotation_from_positions(const std::vector<std::vector<Vertex>>& adjacency,
    const std::vector<std::pair<double, double>>& positions)
{
    std::vector<std::vector<Vertex>> rot(adjacency.size());
    for (std::size_t v = 0; v < adjacency.size(); ++v) {
        std::vector<std::pair<double, Vertex>> by_angle;
        for (Vertex u : adjacency[v]) {
            double dx = positions[u].first - positions[v].first;
            double dy = positions[u].second - positions[v].second;
            by_angle.emplace_back(std::atan2(dy, dx), u);
        }
        // clockwise = decreasing angle
        std::sort(by_angle.begin(), by_angle.end(),
            [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
        for (const auto& [a, u] : by_angle)
            rot[v].push_back(u);
    }
    return rot;
}

std::string to_dot(const PlaneGraph& g)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "  \"" << g.name(v) << "\";";
        out << " // rotation:";
        for (Vertex u : g.rotation(v))
            out << ' ' << g.name(u);
        out << '\n';
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex u : g.rotation(v))
            if (v < u)
                out << "  \"" << g.name(v) << "\" -- \"" << g.name(u) << "\";\n";
    out << "}\n";
    return out.str();
}

const char* to_string(InstanceKind kind)
{
    switch (kind) {
    case InstanceKind::OneFace: return "one_face";
    case InstanceKind::TwoFace: return "two_face";
    case InstanceKind::St: return "st";
    case InstanceKind::General: return "general";
    }
    return "general";
}

Terminals Terminals::from_pairs(std::vector<std::pair<Vertex, Vertex>> p)
{
    Terminals t;
    t.pairs = std::move(p);
    return t;
}

Terminals Terminals::from_st(Vertex s, Vertex t, int k)
{
    Terminals r;
    r.st = true;
    r.s = s;
    r.t = t;
    r.k = k;
    return r;
}

std::vector<Vertex> Instance::sources() const
{
    std::vector<Vertex> out;
    for (int i = 0; i < k(); ++i)
        out.push_back(source(i));
    return out;
}

std::vector<Vertex> Instance::sinks() const
{
    std::vector<Vertex> out;
    for (int i = 0; i < k(); ++i)
        out.push_back(sink(i));
    return out;
}

namespace {

void check_terminals(const PlaneGraph& g, const Terminals& terminals)
{
    std::set<Vertex> seen;
    auto check = [&](Vertex v) {
        if (v < 0 || v >= g.num_vertices())
            throw Error(ErrorCode::TerminalNotInGraph, "terminal not in graph", {v});
    };
    if (terminals.st) {
        check(terminals.s);
        check(terminals.t);
        if (terminals.s == terminals.t)
            throw Error(ErrorCode::InvalidInput, "s equals t");
        if (terminals.k < 1)
            throw Error(ErrorCode::InvalidInput, "k must be positive");
        return;
    }
    for (const auto& [s, t] : terminals.pairs) {
        check(s);
        check(t);
        if (!seen.insert(s).second || !seen.insert(t).second)
            throw Error(ErrorCode::InvalidInput, "terminals must be distinct");
    }
}

} // namespace

Instance classify_instance(const PlaneGraph& g, const Terminals& terminals)
{
    check_terminals(g, terminals);
    Instance inst;
    inst.graph = g;
    inst.terminals = terminals;
    if (terminals.st) {
        inst.kind = InstanceKind::St;
        return inst;
    }
    if (!g.embedded() || terminals.pairs.empty()) {
        inst.kind = InstanceKind::General;
        return inst;
    }
    std::vector<Vertex> all;
    for (const auto& [s, t] : terminals.pairs) {
        all.push_back(s);
        all.push_back(t);
    }
    auto one = g.faces_containing(all);
    if (!one.empty()) {
        inst.kind = InstanceKind::OneFace;
        inst.face_one = one.front();
        return inst;
    }
    auto fs = g.faces_containing(inst.sources());
    auto ft = g.faces_containing(inst.sinks());
    for (int S : fs)
        for (int T : ft)
            if (S != T) {
                inst.kind = InstanceKind::TwoFace;
                inst.face_S = S;
                inst.face_T = T;
                return inst;
            }
    inst.kind = InstanceKind::General;
    return inst;
}

Instance make_two_face(const PlaneGraph& g, const Terminals& terminals, int face_S, int face_T)
{
    check_terminals(g, terminals);
    if (terminals.st || face_S < 0 || face_T < 0 || face_S >= g.num_faces() || face_T >= g.num_faces() || face_S == face_T)
        throw Error(ErrorCode::InvalidInput, "two-face instance needs pairs and distinct faces S, T");
    Instance inst;
    inst.graph = g;
    inst.terminals = terminals;
    inst.kind = InstanceKind::TwoFace;
    inst.face_S = face_S;
    inst.face_T = face_T;
    for (const auto& [s, t] : terminals.pairs)
        if (!g.face(face_S).contains(s) || !g.face(face_T).contains(t))
            throw Error(ErrorCode::InvalidInput, "terminal not on its designated face");
    return inst;
}

} // namespace dpr
