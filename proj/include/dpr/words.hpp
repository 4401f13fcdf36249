#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dpr {

/// Generator x_gen (1-based) raised to exp = +1 or -1.
struct Letter {
    int gen = 1;
    int exp = 1;
    bool operator==(const Letter&) const = default;
};

/// Element of the free group on x_1..x_k, stored unreduced.
struct FreeWord {
    int k = 0;
    std::vector<Letter> letters;
    bool operator==(const FreeWord&) const = default;
};

/// Ordered (path index, sign) pairs of the crossings met along Q_j.
struct CrossingSequence {
    int k = 0;
    int j = 1;
    std::vector<Letter> crossings;
};

FreeWord word_from_crossings(const CrossingSequence& cs);

/// Free reduction; the result has no adjacent inverse pair.
FreeWord reduce(const FreeWord& w);

/// Concatenation u v (unreduced).
FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord inverse(const FreeWord& w);

/// reduce(w) = x_j^e for some integer e (e = 0 included).
bool in_cyclic_subgroup(const FreeWord& w, int j);

/// Exponent sum per generator; entry i-1 belongs to x_i.
std::vector<int> abelianize(const FreeWord& w);

/// The homomorphism x_j -> x_i x_j x_i^-1 fixing the other generators.
FreeWord apply_fij(const FreeWord& w, int i, int j);

struct CurveVerdict {
    bool reconfigurable = true;
    int witness_j = 0;            ///< first failing j, 0 when reconfigurable
    FreeWord witness_word;        ///< its reduced word
};

/// The curve criterion: reconfigurable iff every w_j lies in <x_j>.
CurveVerdict curves_reconfigurable(const std::vector<CrossingSequence>& sequences);

/// Text form "x2 x1^-1 ..."; the identity prints as "1".
std::string to_text(const FreeWord& w);
/// Parse the text form; @p k is the rank to record.
FreeWord parse_word(const std::string& text, int k);

} // namespace dpr
