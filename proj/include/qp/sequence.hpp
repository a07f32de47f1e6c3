#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qp {

using Symbol = int;

/// Finite sequence of symbols over a dense integer alphabet [0, alphabet_size).
struct Sequence {
    std::vector<Symbol> symbols;
    int alphabet_size = 0;

    Sequence() = default;
    Sequence(std::vector<Symbol> syms, int alphabet);

    int length() const { return static_cast<int>(symbols.size()); }
    Symbol operator[](int i) const { return symbols[static_cast<size_t>(i)]; }
};

/// Build a sequence from text tokens, mapping tokens to symbol ids in
/// first-occurrence order.
Sequence sequence_from_tokens(const std::vector<std::string>& tokens);

enum class PatternKind { UP, UP_DOWN_UP };

/// Certificate for a forbidden-pattern occurrence. Positions index into the
/// host sequence and are strictly increasing; validity is checkable by
/// replaying the defining symbol equalities, independent of the search.
struct PatternWitness {
    PatternKind kind;
    int l = 0;
    int t = 0;  // UP only
    std::vector<int> positions;

    bool valid_for(const Sequence& s) const;
};

/// True iff every window of l consecutive terms has pairwise distinct
/// symbols. Vacuous for length < 2 or l == 1.
bool is_l_regular(const Sequence& s, int l);

/// Search for a subsequence of type up(l,t): length l*t, first l symbols
/// pairwise distinct, block repeated t times in order. Returns a verified
/// witness or nullopt.
std::optional<PatternWitness> contains_up(const Sequence& s, int l, int t);

/// Search for a subsequence of type up-down-up(l): length 3l-2, word
/// b1..bl b_{l-1}..b1 b2..bl with b pairwise distinct.
std::optional<PatternWitness> contains_up_down_up(const Sequence& s, int l);

/// Left-to-right scan keeping a term iff its symbol differs from the last
/// min(l-1, kept) kept symbols. Output is l-regular.
Sequence extract_l_regular_greedy(const Sequence& s, int l);

/// Exact maximum-length l-regular subsequence, l in {1,2,3}, via dynamic
/// programming over the last l-1 kept symbols. Throws CAP_EXCEEDED when the
/// input is longer than `cap`.
Sequence longest_l_regular_subsequence(const Sequence& s, int l, int cap = 40);

}  // namespace qp
