#include "dpr/generators.hpp"

#include "dpr/crossings.hpp"
#include "dpr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dpr {

namespace {

int mod(int a, int m)
{
    return ((a % m) + m) % m;
}

std::vector<int> spaced_columns(int cols, int k)
{
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i)
        c[i] = static_cast<int>(static_cast<long long>(i) * cols / k);
    return c;
}

// Ring r column c; columns increase clockwise, ring r+1 lies outside ring r.
PlaneGraph cylinder_graph(int rows, int cols, const std::vector<char>* drop_spoke = nullptr)
{
    int n = rows * cols;
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::string> names(n);
    std::vector<std::vector<Vertex>> rot(n);
    auto spoke = [&](int r, int c) { return !drop_spoke || !(*drop_spoke)[id(r, c)]; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = id(r, c);
            names[v] = cylinder_name(r, c);
            if (r + 1 < rows && spoke(r, c))
                rot[v].push_back(id(r + 1, c));
            rot[v].push_back(id(r, mod(c + 1, cols)));
            if (r > 0 && spoke(r - 1, c))
                rot[v].push_back(id(r - 1, c));
            rot[v].push_back(id(r, mod(c - 1, cols)));
        }
    return make_graph(std::move(names), std::move(rot));
}

struct CylinderLayout {
    int rows;
    int cols;
    std::vector<int> s_cols;
    std::vector<int> t_cols;
};

Instance cylinder_instance(const PlaneGraph& g, const CylinderLayout& lay)
{
    int R = lay.rows - 1, cols = lay.cols;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < lay.s_cols.size(); ++i)
        pairs.emplace_back(lay.s_cols[i], R * cols + lay.t_cols[i]);
    int S = g.left_face(1, 0);
    int T = g.left_face(R * cols, R * cols + 1);
    return make_two_face(g, Terminals::from_pairs(pairs), S, T);
}

} // namespace

std::string cylinder_name(int r, int c)
{
    return "r" + std::to_string(r) + "c" + std::to_string(c);
}

Linkage cylinder_linkage(const Instance& cyl, int rows, int cols, int winding)
{
    int k = cyl.k();
    if (rows == 1) {
        if (winding != 0)
            throw Error(ErrorCode::InvalidInput, "a single ring admits winding 0 only");
        Linkage L;
        for (int i = 0; i < k; ++i)
            L.push_back({cyl.source(i), cyl.sink(i)});
        return L;
    }
    int gap = cols;
    for (int i = 0; i < k; ++i) {
        int a = cyl.source(i) % cols, b = cyl.source((i + 1) % k) % cols;
        gap = std::min(gap, k == 1 ? cols : mod(b - a, cols));
    }
    long long total = -static_cast<long long>(winding) * cols; // positive windings turn counterclockwise
    int step = gap - 1;
    if (std::llabs(total) > static_cast<long long>(rows) * step)
        throw Error(ErrorCode::InvalidInput, "winding does not fit the cylinder", {winding});
    std::vector<int> d(rows, 0);
    long long left = total;
    for (int r = 0; r < rows; ++r) {
        long long m = std::clamp<long long>(left, -step, step);
        d[r] = static_cast<int>(m);
        left -= m;
    }
    Linkage L;
    for (int i = 0; i < k; ++i) {
        int c = cyl.source(i) % cols;
        Path p;
        for (int r = 0; r < rows; ++r) {
            p.push_back(r * cols + c);
            int dir = d[r] > 0 ? 1 : -1;
            for (int s = 0; s < std::abs(d[r]); ++s) {
                c = mod(c + dir, cols);
                p.push_back(r * cols + c);
            }
        }
        L.push_back(p);
    }
    return L;
}

GeneratedInstance gen_cylinder(int rows, int cols, int k, int winding_P, int winding_Q)
{
    if (rows < 1 || k < 1)
        throw Error(ErrorCode::InvalidInput, "cylinder needs rows >= 1 and k >= 1");
    if (cols < 2 * k || cols < 3)
        throw Error(ErrorCode::TooFewColumns, "cylinder needs cols >= max(2k, 3)", {cols, k});
    PlaneGraph g = cylinder_graph(rows, cols);
    CylinderLayout lay { rows, cols, spaced_columns(cols, k), spaced_columns(cols, k) };
    if (rows == 1)
        for (int& c : lay.t_cols)
            c += 1;
    GeneratedInstance out { cylinder_instance(g, lay), {}, {} };
    out.P = cylinder_linkage(out.instance, rows, cols, winding_P);
    out.Q = cylinder_linkage(out.instance, rows, cols, winding_Q);
    return out;
}

GeneratedInstance gen_nested_diamonds()
{
    // Terminals on a horizontal line, hub a above and hub b below.
    std::vector<std::string> names { "s1", "t1", "s2", "t2", "a", "b" };
    std::vector<std::pair<double, double>> pos { {3, 0}, {1, 0}, {-1, 0}, {-3, 0}, {0, 1}, {0, -1} };
    std::vector<std::vector<Vertex>> adj(6);
    for (Vertex x = 0; x < 4; ++x)
        for (Vertex hub : {4, 5}) {
            adj[x].push_back(hub);
            adj[hub].push_back(x);
        }
    PlaneGraph g = make_graph(names, rotation_from_positions(adj, pos));
    GeneratedInstance out;
    out.instance = classify_instance(g, Terminals::from_pairs({{0, 1}, {2, 3}}));
    out.P = {{0, 4, 1}, {2, 5, 3}};
    out.Q = {{0, 5, 1}, {2, 4, 3}};
    return out;
}

PlaneGraph random_plane_graph(std::mt19937_64& rng, int n, int extra_chords)
{
    std::vector<std::pair<double, double>> tri { {0, 1}, {1, -1}, {-1, -1} };
    std::vector<std::vector<Vertex>> rot = rotation_from_positions({{1, 2}, {0, 2}, {0, 1}}, tri);
    if (n < 3)
        throw Error(ErrorCode::InvalidInput, "random plane graph needs n >= 3");
    auto names_of = [](std::size_t m) {
        std::vector<std::string> names(m);
        for (std::size_t i = 0; i < m; ++i)
            names[i] = "v" + std::to_string(i);
        return names;
    };
    auto insert_after = [&](Vertex at, Vertex after, Vertex x) {
        auto& r = rot[at];
        r.insert(std::find(r.begin(), r.end(), after) + 1, x);
    };
    PlaneGraph g = make_graph(names_of(rot.size()), rot);
    for (Vertex x = 3; x < n; ++x) {
        const Face& f = g.face(std::uniform_int_distribution<int>(0, g.num_faces() - 1)(rng));
        int len = static_cast<int>(f.walk.size());
        // one corner per distinct vertex, in walk order
        std::vector<int> corners;
        std::set<Vertex> used;
        for (int i = 0; i < len; ++i)
            if (used.insert(f.walk[i]).second)
                corners.push_back(i);
        std::shuffle(corners.begin(), corners.end(), rng);
        int m = std::uniform_int_distribution<int>(1, std::min<int>(3, static_cast<int>(corners.size())))(rng);
        corners.resize(m);
        std::sort(corners.begin(), corners.end());
        rot.emplace_back();
        for (int i : corners) {
            Vertex w = f.walk[i], prev = f.walk[(i + len - 1) % len];
            insert_after(w, prev, x);
        }
        for (auto it = corners.rbegin(); it != corners.rend(); ++it)
            rot[x].push_back(f.walk[*it]);
        g = make_graph(names_of(rot.size()), rot);
    }
    for (int c = 0; c < extra_chords; ++c) {
        const Face& f = g.face(std::uniform_int_distribution<int>(0, g.num_faces() - 1)(rng));
        int len = static_cast<int>(f.walk.size());
        std::vector<std::pair<int, int>> options;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j)
                if (f.walk[i] != f.walk[j] && !g.has_edge(f.walk[i], f.walk[j]))
                    options.emplace_back(i, j);
        if (options.empty())
            continue;
        auto [i, j] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        Vertex a = f.walk[i], b = f.walk[j];
        insert_after(a, f.walk[(i + len - 1) % len], b);
        insert_after(b, f.walk[(j + len - 1) % len], a);
        g = make_graph(names_of(rot.size()), rot);
    }
    return g;
}

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v)
{
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::optional<GeneratedInstance> with_random_linkages(std::mt19937_64& rng, Instance inst)
{
    std::vector<Linkage> all;
    try {
        all = enumerate_linkages(inst, 200'000);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (all.empty())
        return std::nullopt;
    GeneratedInstance out { std::move(inst), pick(rng, all), pick(rng, all) };
    return out;
}

} // namespace

std::optional<GeneratedInstance> random_one_face(std::mt19937_64& rng, int n, int k)
{
    int chords = std::uniform_int_distribution<int>(0, n / 2)(rng);
    PlaneGraph g = random_plane_graph(rng, n, chords);
    std::vector<int> big;
    for (const auto& f : g.faces()) {
        std::set<Vertex> vs(f.walk.begin(), f.walk.end());
        if (static_cast<int>(vs.size()) >= 2 * k)
            big.push_back(f.id);
    }
    if (big.empty())
        return std::nullopt;
    const Face& f = g.face(pick(rng, big));
    std::vector<Vertex> vs(f.walk.begin(), f.walk.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::shuffle(vs.begin(), vs.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < k; ++i)
        pairs.emplace_back(vs[2 * i], vs[2 * i + 1]);
    Instance inst = classify_instance(g, Terminals::from_pairs(pairs));
    return with_random_linkages(rng, std::move(inst));
}

std::optional<GeneratedInstance> random_st(std::mt19937_64& rng, int n, int k)
{
    int chords = std::uniform_int_distribution<int>(0, n)(rng);
    PlaneGraph g = random_plane_graph(rng, n, chords);
    std::uniform_int_distribution<int> vd(0, n - 1);
    Vertex s = vd(rng), t = vd(rng);
    if (s == t)
        return std::nullopt;
    Instance inst = classify_instance(g, Terminals::from_st(s, t, k));
    return with_random_linkages(rng, std::move(inst));
}

std::optional<GeneratedInstance> random_two_face(std::mt19937_64& rng, int rows, int cols, int k, bool thin)
{
    if (cols < 2 * k || cols < 3)
        throw Error(ErrorCode::TooFewColumns, "cylinder needs cols >= max(2k, 3)", {cols, k});
    std::vector<char> drop(rows * cols, 0);
    if (thin && rows >= 2) {
        // keep only a few spokes in one layer, which may create a small separator
        int layer = std::uniform_int_distribution<int>(0, rows - 2)(rng);
        std::vector<int> cs(cols);
        std::iota(cs.begin(), cs.end(), 0);
        std::shuffle(cs.begin(), cs.end(), rng);
        int keep = std::uniform_int_distribution<int>(k, std::min(cols, k + 1))(rng);
        for (int i = keep; i < cols; ++i)
            drop[layer * cols + cs[i]] = 1;
    }
    PlaneGraph g = cylinder_graph(rows, cols, &drop);
    auto draw_cols = [&] {
        std::vector<int> cs(cols);
        std::iota(cs.begin(), cs.end(), 0);
        std::shuffle(cs.begin(), cs.end(), rng);
        cs.resize(k);
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    CylinderLayout lay { rows, cols, draw_cols(), draw_cols() };
    std::rotate(lay.t_cols.begin(), lay.t_cols.begin() + std::uniform_int_distribution<int>(0, k - 1)(rng),
        lay.t_cols.end());
    if (rows == 1) {
        std::set<int> s(lay.s_cols.begin(), lay.s_cols.end());
        for (int c : lay.t_cols)
            if (s.count(c))
                return std::nullopt;
    }
    return with_random_linkages(rng, cylinder_instance(g, lay));
}

std::optional<GeneratedInstance> random_st_cylinder(std::mt19937_64& rng, int rows, int cols, int k, bool thin)
{
    if (cols < k + 1 || cols < 3)
        throw Error(ErrorCode::TooFewColumns, "capped cylinder needs cols >= max(k + 1, 3)", {cols, k});
    std::vector<char> drop(rows * cols, 0);
    if (thin && rows >= 2) {
        int layer = std::uniform_int_distribution<int>(0, rows - 2)(rng);
        std::vector<int> cs(cols);
        std::iota(cs.begin(), cs.end(), 0);
        std::shuffle(cs.begin(), cs.end(), rng);
        int keep = std::uniform_int_distribution<int>(k, std::min(cols, k + 1))(rng);
        for (int i = keep; i < cols; ++i)
            drop[layer * cols + cs[i]] = 1;
    }
    PlaneGraph cyl = cylinder_graph(rows, cols, &drop);
    int n = rows * cols, R = rows - 1;
    std::vector<std::string> names = cyl.names();
    names.push_back("s");
    names.push_back("t");
    std::vector<std::vector<Vertex>> rot(n + 2);
    for (Vertex v = 0; v < n; ++v)
        rot[v] = cyl.rotation(v);
    auto attach = [&](Vertex apex, int ring, bool inner) {
        std::vector<int> cs(cols);
        std::iota(cs.begin(), cs.end(), 0);
        std::shuffle(cs.begin(), cs.end(), rng);
        cs.resize(std::uniform_int_distribution<int>(k, std::min(cols, k + 1))(rng));
        std::sort(cs.begin(), cs.end());
        for (int c : cs) {
            Vertex v = ring * cols + c;
            auto& r = rot[v];
            // s sits before the counter-clockwise ring neighbour, t before the clockwise one
            Vertex before = inner ? ring * cols + mod(c - 1, cols) : ring * cols + mod(c + 1, cols);
            r.insert(std::find(r.begin(), r.end(), before), apex);
            rot[apex].push_back(v);
        }
        if (!inner)
            std::reverse(rot[apex].begin(), rot[apex].end());
    };
    attach(n, 0, true);
    attach(n + 1, R, false);
    PlaneGraph g = make_graph(std::move(names), std::move(rot));
    return with_random_linkages(rng, classify_instance(g, Terminals::from_st(n, n + 1, k)));
}

} // namespace dpr
