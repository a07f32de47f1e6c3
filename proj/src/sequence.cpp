#include "qp/sequence.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "qp/error.hpp"

namespace qp {

Sequence::Sequence(std::vector<Symbol> syms, int alphabet)
    : symbols(std::move(syms)), alphabet_size(alphabet) {
    for (Symbol s : symbols) {
        if (s < 0 || s >= alphabet_size)
            throw Error(ErrorCode::BAD_INPUT, "symbol id outside alphabet");
    }
}

Sequence sequence_from_tokens(const std::vector<std::string>& tokens) {
    std::map<std::string, Symbol> ids;
    std::vector<Symbol> syms;
    syms.reserve(tokens.size());
    for (const auto& tok : tokens) {
        auto [it, inserted] = ids.emplace(tok, static_cast<Symbol>(ids.size()));
        (void)inserted;
        syms.push_back(it->second);
    }
    return Sequence(std::move(syms), static_cast<int>(ids.size()));
}

bool PatternWitness::valid_for(const Sequence& s) const {
    const int m = s.length();
    for (size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0 || positions[i] >= m) return false;
        if (i > 0 && positions[i] <= positions[i - 1]) return false;
    }
    auto sym = [&](int wi) { return s[positions[static_cast<size_t>(wi)]]; };
    if (kind == PatternKind::UP) {
        if (l < 2 || t < 2) return false;
        if (static_cast<int>(positions.size()) != l * t) return false;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (sym(i) == sym(j)) return false;
        for (int i = 0; i < l; ++i)
            for (int j = 1; j < t; ++j)
                if (sym(i) != sym(i + j * l)) return false;
        return true;
    }
    // UP_DOWN_UP, 1-based rule s_i = s_{2l-i} = s_{2l-2+i} for 1 <= i <= l.
    if (l < 2) return false;
    if (static_cast<int>(positions.size()) != 3 * l - 2) return false;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            if (sym(i) == sym(j)) return false;
    for (int i = 1; i <= l; ++i) {
        if (sym(i - 1) != sym(2 * l - i - 1)) return false;
        if (sym(i - 1) != sym(2 * l - 2 + i - 1)) return false;
    }
    return true;
}

bool is_l_regular(const Sequence& s, int l) {
    if (l < 1) throw Error(ErrorCode::BAD_INPUT, "l must be >= 1");
    const int m = s.length();
    std::vector<int> last(static_cast<size_t>(s.alphabet_size), -1);
    for (int i = 0; i < m; ++i) {
        Symbol c = s[i];
        if (last[static_cast<size_t>(c)] >= 0 && i - last[static_cast<size_t>(c)] < l)
            return false;
        last[static_cast<size_t>(c)] = i;
    }
    return true;
}

namespace {

// Occurrence index: next[p][c] = smallest position >= p holding symbol c,
// or m if none.
struct NextTable {
    int m, alphabet;
    std::vector<int> tab;  // (m+1) x alphabet

    explicit NextTable(const Sequence& s)
        : m(s.length()), alphabet(s.alphabet_size),
          tab(static_cast<size_t>(m + 1) * static_cast<size_t>(std::max(alphabet, 1)), m) {
        for (int p = m - 1; p >= 0; --p) {
            for (int c = 0; c < alphabet; ++c) at(p, c) = at(p + 1, c);
            at(p, s[p]) = p;
        }
    }

    int& at(int p, int c) {
        return tab[static_cast<size_t>(p) * static_cast<size_t>(alphabet) + static_cast<size_t>(c)];
    }
    int next(int p, int c) const {
        return tab[static_cast<size_t>(p) * static_cast<size_t>(alphabet) + static_cast<size_t>(c)];
    }
};

// Greedy leftmost embedding of `word` as a subsequence; nullopt if absent.
std::optional<std::vector<int>> embed(const NextTable& nt, const std::vector<Symbol>& word) {
    std::vector<int> pos;
    pos.reserve(word.size());
    int p = 0;
    for (Symbol c : word) {
        int q = nt.next(p, c);
        if (q >= nt.m) return std::nullopt;
        pos.push_back(q);
        p = q + 1;
    }
    return pos;
}

// Restriction of (b_1..b_l)^t to the first r chosen block symbols: (b_1..b_r)^t.
std::vector<Symbol> up_partial_word(const std::vector<Symbol>& block, int t) {
    std::vector<Symbol> w;
    w.reserve(block.size() * static_cast<size_t>(t));
    for (int j = 0; j < t; ++j) w.insert(w.end(), block.begin(), block.end());
    return w;
}

// Restriction of the up-down-up(l) word to the first r chosen block symbols:
// b_1..b_r b_r..b_1 b_2..b_r for r < l, and the full word
// b_1..b_l b_{l-1}..b_1 b_2..b_l for r == l.
std::vector<Symbol> udu_partial_word(const std::vector<Symbol>& block, int l) {
    const int r = static_cast<int>(block.size());
    std::vector<Symbol> w(block);
    int mid_start = (r < l) ? r - 1 : r - 2;
    for (int i = mid_start; i >= 0; --i) w.push_back(block[static_cast<size_t>(i)]);
    for (int i = 1; i < r; ++i) w.push_back(block[static_cast<size_t>(i)]);
    return w;
}

struct BlockSearch {
    const Sequence& s;
    NextTable nt;
    std::vector<int> occ_count;
    std::vector<Symbol> first_occ_order;  // candidate symbols by first occurrence
    std::vector<char> used;
    std::vector<Symbol> block;

    explicit BlockSearch(const Sequence& seq) : s(seq), nt(seq) {
        occ_count.assign(static_cast<size_t>(s.alphabet_size), 0);
        std::vector<char> seen(static_cast<size_t>(s.alphabet_size), 0);
        for (int i = 0; i < s.length(); ++i) {
            Symbol c = s[i];
            ++occ_count[static_cast<size_t>(c)];
            if (!seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = 1;
                first_occ_order.push_back(c);
            }
        }
        used.assign(static_cast<size_t>(s.alphabet_size), 0);
    }

    // DFS over block symbol choices; the partial-word greedy embedding is a
    // valid pruning test because the partial word is the restriction of the
    // full pattern to the chosen symbols, hence itself a subsequence of it.
    template <typename PartialWordFn>
    std::optional<std::vector<int>> dfs(int l, int min_occ, PartialWordFn&& partial_word) {
        if (static_cast<int>(block.size()) == l) {
            return embed(nt, partial_word(block));
        }
        for (Symbol c : first_occ_order) {
            if (used[static_cast<size_t>(c)]) continue;
            if (occ_count[static_cast<size_t>(c)] < min_occ) continue;
            block.push_back(c);
            used[static_cast<size_t>(c)] = 1;
            if (embed(nt, partial_word(block))) {
                if (auto res = dfs(l, min_occ, partial_word)) return res;
            }
            used[static_cast<size_t>(c)] = 0;
            block.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<PatternWitness> contains_up(const Sequence& s, int l, int t) {
    if (l < 2 || t < 2) throw Error(ErrorCode::BAD_INPUT, "up(l,t) requires l,t >= 2");
    if (s.length() < l * t) return std::nullopt;
    BlockSearch search(s);
    auto pos = search.dfs(l, t, [t](const std::vector<Symbol>& b) { return up_partial_word(b, t); });
    if (!pos) return std::nullopt;
    PatternWitness w{PatternKind::UP, l, t, std::move(*pos)};
    if (!w.valid_for(s)) throw Error(ErrorCode::BAD_INPUT, "internal: invalid up witness");
    return w;
}

std::optional<PatternWitness> contains_up_down_up(const Sequence& s, int l) {
    if (l < 2) throw Error(ErrorCode::BAD_INPUT, "up-down-up(l) requires l >= 2");
    if (s.length() < 3 * l - 2) return std::nullopt;
    BlockSearch search(s);
    auto pos = search.dfs(l, 2, [l](const std::vector<Symbol>& b) { return udu_partial_word(b, l); });
    if (!pos) return std::nullopt;
    PatternWitness w{PatternKind::UP_DOWN_UP, l, 0, std::move(*pos)};
    if (!w.valid_for(s)) throw Error(ErrorCode::BAD_INPUT, "internal: invalid up-down-up witness");
    return w;
}

Sequence extract_l_regular_greedy(const Sequence& s, int l) {
    if (l < 1) throw Error(ErrorCode::BAD_INPUT, "l must be >= 1");
    std::vector<Symbol> kept;
    for (int i = 0; i < s.length(); ++i) {
        Symbol c = s[i];
        int window = std::min(l - 1, static_cast<int>(kept.size()));
        bool clash = false;
        for (int j = 0; j < window; ++j) {
            if (kept[kept.size() - 1 - static_cast<size_t>(j)] == c) { clash = true; break; }
        }
        if (!clash) kept.push_back(c);
    }
    return Sequence(std::move(kept), s.alphabet_size);
}

namespace {

// DP node arena for subsequence reconstruction.
struct DpArena {
    std::vector<std::pair<int, int>> nodes;  // (position, parent node)
    int add(int pos, int parent) {
        nodes.emplace_back(pos, parent);
        return static_cast<int>(nodes.size()) - 1;
    }
    std::vector<int> chain(int node) const {
        std::vector<int> out;
        while (node >= 0) {
            out.push_back(nodes[static_cast<size_t>(node)].first);
            node = nodes[static_cast<size_t>(node)].second;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

Sequence from_positions(const Sequence& s, const std::vector<int>& pos) {
    std::vector<Symbol> syms;
    syms.reserve(pos.size());
    for (int p : pos) syms.push_back(s[p]);
    return Sequence(std::move(syms), s.alphabet_size);
}

}  // namespace

Sequence longest_l_regular_subsequence(const Sequence& s, int l, int cap) {
    if (l < 1 || l > 3)
        throw Error(ErrorCode::PRECONDITION, "exact search supports l in {1,2,3}");
    if (s.length() > cap)
        throw Error(ErrorCode::CAP_EXCEEDED, "input exceeds exact-search cap");
    if (l == 1 || s.length() == 0) return s;

    const int A = s.alphabet_size;
    DpArena arena;

    if (l == 2) {
        // state: last kept symbol (A states) + empty state
        std::vector<int> len(static_cast<size_t>(A), -1), node(static_cast<size_t>(A), -1);
        for (int i = 0; i < s.length(); ++i) {
            Symbol c = s[i];
            int best = 0, best_node = -1;
            for (int a = 0; a < A; ++a)
                if (a != c && len[static_cast<size_t>(a)] > best) {
                    best = len[static_cast<size_t>(a)];
                    best_node = node[static_cast<size_t>(a)];
                }
            int cand = best + 1;
            if (cand > len[static_cast<size_t>(c)]) {
                len[static_cast<size_t>(c)] = cand;
                node[static_cast<size_t>(c)] = arena.add(i, best_node);
            }
        }
        int best = 0, best_node = -1;
        for (int a = 0; a < A; ++a)
            if (len[static_cast<size_t>(a)] > best) {
                best = len[static_cast<size_t>(a)];
                best_node = node[static_cast<size_t>(a)];
            }
        return from_positions(s, arena.chain(best_node));
    }

    // l == 3: state = (second-to-last, last) kept symbols, plus the
    // one-symbol states encoded as (A, last).
    auto idx = [A](int a, int b) { return static_cast<size_t>(a) * static_cast<size_t>(A) + static_cast<size_t>(b); };
    std::vector<int> len(static_cast<size_t>(A + 1) * static_cast<size_t>(A), -1);
    std::vector<int> node(len.size(), -1);
    for (int i = 0; i < s.length(); ++i) {
        Symbol c = s[i];
        // Keeping c extends any state (a,b) with a != c, b != c into (b,c);
        // the new second-to-last symbol b constrains future picks, so every b
        // gets its own best.
        for (int b = 0; b < A; ++b) {
            if (b == c) continue;
            int best = -1, best_node = -1;
            for (int a = 0; a <= A; ++a) {
                if (a == c) continue;
                int v = len[idx(a, b)];
                if (v > best) { best = v; best_node = node[idx(a, b)]; }
            }
            if (best < 1) continue;
            size_t st = idx(b, c);
            if (best + 1 > len[st]) {
                len[st] = best + 1;
                node[st] = arena.add(i, best_node);
            }
        }
        // starting fresh with c as the only kept symbol
        if (len[idx(A, c)] < 1) {
            len[idx(A, c)] = 1;
            node[idx(A, c)] = arena.add(i, -1);
        }
    }
    int best = 0, best_node = -1;
    for (size_t st = 0; st < len.size(); ++st)
        if (len[st] > best) { best = len[st]; best_node = node[st]; }
    return from_positions(s, arena.chain(best_node));
}

}  // namespace qp
