#include "dpr/words.hpp"

#include "dpr/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dpr {

FreeWord word_from_crossings(const CrossingSequence& cs)
{
    FreeWord w;
    w.k = cs.k;
    w.letters = cs.crossings;
    return w;
}

FreeWord reduce(const FreeWord& w)
{
    FreeWord r;
    r.k = w.k;
    for (const Letter& a : w.letters) {
        if (!r.letters.empty() && r.letters.back().gen == a.gen && r.letters.back().exp == -a.exp)
            r.letters.pop_back();
        else
            r.letters.push_back(a);
    }
    return r;
}

FreeWord concat(const FreeWord& u, const FreeWord& v)
{
    FreeWord w;
    w.k = std::max(u.k, v.k);
    w.letters = u.letters;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

FreeWord inverse(const FreeWord& w)
{
    FreeWord r;
    r.k = w.k;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->gen, -it->exp});
    return r;
}

bool in_cyclic_subgroup(const FreeWord& w, int j)
{
    FreeWord r = reduce(w);
    return std::all_of(r.letters.begin(), r.letters.end(), [j](const Letter& a) { return a.gen == j; });
}

std::vector<int> abelianize(const FreeWord& w)
{
    int k = w.k;
    for (const auto& a : w.letters)
        k = std::max(k, a.gen);
    std::vector<int> ab(k, 0);
    for (const auto& a : w.letters)
        ab[a.gen - 1] += a.exp;
    return ab;
}

FreeWord apply_fij(const FreeWord& w, int i, int j)
{
    FreeWord r;
    r.k = w.k;
    for (const auto& a : w.letters) {
        if (a.gen != j) {
            r.letters.push_back(a);
            continue;
        }
        // f(x_j^e) = x_i x_j^e x_i^-1
        r.letters.push_back({i, 1});
        r.letters.push_back(a);
        r.letters.push_back({i, -1});
    }
    return r;
}

CurveVerdict curves_reconfigurable(const std::vector<CrossingSequence>& sequences)
{
    CurveVerdict v;
    for (const auto& cs : sequences) {
        FreeWord w = word_from_crossings(cs);
        if (!in_cyclic_subgroup(w, cs.j)) {
            v.reconfigurable = false;
            v.witness_j = cs.j;
            v.witness_word = reduce(w);
            return v;
        }
    }
    return v;
}

std::string to_text(const FreeWord& w)
{
    if (w.letters.empty())
        return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            out << ' ';
        out << 'x' << w.letters[i].gen;
        if (w.letters[i].exp < 0)
            out << "^-1";
    }
    return out.str();
}

FreeWord parse_word(const std::string& text, int k)
{
    FreeWord w;
    w.k = k;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1")
            continue;
        if (tok.size() < 2 || tok[0] != 'x')
            throw Error(ErrorCode::InvalidInput, "bad word token '" + tok + "'");
        auto caret = tok.find('^');
        int gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int e = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        if (gen < 1 || e == 0)
            throw Error(ErrorCode::InvalidInput, "bad word token '" + tok + "'");
        for (int r = 0; r < std::abs(e); ++r)
            w.letters.push_back({gen, e > 0 ? 1 : -1});
        w.k = std::max(w.k, gen);
    }
    return w;
}

} // namespace dpr
