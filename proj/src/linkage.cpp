#include "dpr/linkage.hpp"

#include <algorithm>
#include <unordered_map>

namespace dpr {

bool is_simple_path(const PlaneGraph& g, const Path& p)
{
    if (p.empty())
        return false;
    std::vector<char> seen(g.num_vertices(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Vertex v = p[i];
        if (v < 0 || v >= g.num_vertices() || seen[v])
            return false;
        seen[v] = 1;
        if (i > 0 && !g.has_edge(p[i - 1], v))
            return false;
    }
    return true;
}

Status validate_linkage(const Instance& inst, const Linkage& L)
{
    const auto& g = inst.graph;
    if (static_cast<int>(L.size()) != inst.k())
        return Status::failure(ErrorCode::InvalidInput, "linkage has the wrong number of paths");
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (!is_simple_path(g, L[i]))
            return Status::failure(ErrorCode::NotAPath, "path " + std::to_string(i) + " is not a simple path",
                {static_cast<long long>(i)});
        if (L[i].front() != inst.source(static_cast<int>(i)) || L[i].back() != inst.sink(static_cast<int>(i)))
            return Status::failure(ErrorCode::WrongEndpoints, "path " + std::to_string(i) + " has wrong endpoints",
                {static_cast<long long>(i)});
    }
    std::unordered_map<Vertex, int> owner;
    for (std::size_t i = 0; i < L.size(); ++i) {
        std::size_t lo = 0, hi = L[i].size();
        if (inst.st()) {
            lo = 1;
            hi = L[i].size() - 1;
        }
        for (std::size_t x = lo; x < hi; ++x) {
            auto [it, fresh] = owner.emplace(L[i][x], static_cast<int>(i));
            if (!fresh)
                return Status::failure(ErrorCode::SharedVertex,
                    "paths " + std::to_string(it->second) + " and " + std::to_string(i) + " share vertex "
                        + g.name(L[i][x]),
                    {L[i][x], it->second, static_cast<long long>(i)});
        }
    }
    if (inst.st()) {
        // the direct edge s-t may carry at most one path
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = i + 1; j < L.size(); ++j)
                if (L[i] == L[j])
                    return Status::failure(ErrorCode::SharedVertex, "repeated path",
                        {inst.terminals.s, static_cast<long long>(i), static_cast<long long>(j)});
    }
    return Status::success();
}

Linkage canonical_st(Linkage L)
{
    std::sort(L.begin(), L.end());
    return L;
}

bool same_linkage(const Linkage& A, const Linkage& B, bool st_mode)
{
    if (!st_mode)
        return A == B;
    return canonical_st(A) == canonical_st(B);
}

bool adjacent(const Linkage& A, const Linkage& B, bool st_mode)
{
    if (A.size() != B.size())
        return false;
    if (!st_mode) {
        int diff = 0;
        for (std::size_t i = 0; i < A.size(); ++i)
            diff += A[i] != B[i];
        return diff == 1;
    }
    Linkage a = canonical_st(A), b = canonical_st(B);
    // multiset difference must be exactly one path each way
    std::vector<Path> only_a, only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    return only_a.size() == 1 && only_b.size() == 1;
}

Status verify_sequence(const Instance& inst, const Sequence& seq)
{
    if (seq.empty())
        return Status::failure(ErrorCode::InvalidInput, "empty sequence");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto s = validate_linkage(inst, seq[i]);
        if (!s)
            return Status::failure(ErrorCode::InvalidLinkage,
                "element " + std::to_string(i) + ": " + s.message, {static_cast<long long>(i)});
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!adjacent(seq[i], seq[i + 1], inst.st()))
            return Status::failure(ErrorCode::NotAdjacent,
                "elements " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not adjacent",
                {static_cast<long long>(i)});
    return Status::success();
}

Path subpath(const Path& p, Vertex a, Vertex b)
{
    auto ia = std::find(p.begin(), p.end(), a);
    auto ib = std::find(p.begin(), p.end(), b);
    if (ia == p.end() || ib == p.end() || ib < ia)
        throw Error(ErrorCode::InvalidInput, "subpath endpoints not on path in order");
    return Path(ia, ib + 1);
}

} // namespace dpr
