// SPDX-License-Identifier: Apache-2.0

#pragma once

// Shared helpers for the unit and acceptance suites: exhaustive string
// enumeration, golden tables, and the definition-level lemma predicates.

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quasi/border.hpp"
#include "quasi/covers.hpp"
#include "quasi/oracle.hpp"
#include "quasi/scer.hpp"

namespace quasi::testing {

using Sizes = std::vector<std::size_t>;

inline const TokenSeq kFibText = TokenSeq::from_bytes("abaababaabaababa");

// Identity.
inline const Sizes kFibIdentityBorder = {0, 0, 1, 1, 2, 3, 2, 3, 4, 5, 6, 4, 5, 6, 7, 8};
inline const Sizes kFibIdentitySCover = {1, 2, 3, 4, 5, 3, 7, 3, 9, 5, 3, 12, 5, 3, 15, 3};
inline const Sizes kFibIdentityLCover = {0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 6, 0, 5, 6, 0, 8};

// Parameterized.
inline const Sizes kFibParamBorder = {0, 1, 2, 1, 2, 3, 3, 3, 4, 5, 6, 4, 5, 6, 7, 8};
inline const Sizes kFibParamSCover = Sizes(16, 1);
inline const Sizes kFibParamLCover = {0, 1, 2, 1, 2, 3, 3, 3, 1, 5, 6, 1, 5, 6, 3, 8};

/// Letters 'a', 'b', ... become tokens 0, 1, ...
inline TokenSeq letters(std::string_view s) {
    std::vector<Token> out;
    for (char c : s) {
        out.push_back(static_cast<Token>(c - 'a'));
    }
    return TokenSeq(std::move(out));
}

inline Sizes to_sizes(std::span<const std::size_t> s) { return Sizes(s.begin(), s.end()); }

inline std::string show(std::span<const Token> t) {
    std::string out;
    for (Token x : t) {
        out += x < 26 ? static_cast<char>('a' + x) : '?';
    }
    return out;
}

/// Calls fn on every string over {0..alphabet-1} of length 0..max_len.
inline void for_each_string(std::size_t alphabet, std::size_t max_len, const std::function<void(const TokenSeq&)>& fn) {
    std::vector<Token> cur;
    std::function<void()> rec = [&] {
        fn(TokenSeq(cur));
        if (cur.size() == max_len) {
            return;
        }
        for (Token c = 0; c < alphabet; ++c) {
            cur.push_back(c);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

/// The acceptance universe: lengths <= 10 over 2 letters, <= 8 over 3 letters.
/// Binary strings of length <= 8 are visited twice; harmless.
inline void for_each_universe_string(const std::function<void(const TokenSeq&)>& fn, std::size_t len2 = 10,
                                     std::size_t len3 = 8) {
    for_each_string(2, len2, fn);
    for_each_string(3, len3, fn);
}

/// Compares every fast array against the oracle; returns a description of the
/// first mismatch.
inline std::optional<std::string> oracle_mismatch(const TokenSeq& text, ScerKind kind) {
    auto t = text.tokens();
    std::ostringstream why;
    why << "text=" << show(t) << " kind=" << to_string(kind) << ": ";

    auto expected_border = oracle::brute_border_array(t, kind);
    auto border = border_array(text, kind);
    if (border != expected_border) {
        return why.str() + "border_array";
    }
    if (border_array_generic(text, kind) != expected_border) {
        return why.str() + "border_array_generic";
    }
    auto sca = shortest_cover_array(border);
    if (to_sizes(sca.values()) != oracle::brute_scover(t, kind)) {
        return why.str() + "shortest_cover_array";
    }
    auto expected_lcover = oracle::brute_lcover(t, kind);
    auto lca = longest_cover_array(border);
    if (to_sizes(lca.values()) != expected_lcover) {
        return why.str() + "longest_cover_array";
    }
    if (to_sizes(longest_cover_array_li_smyth(border).cover.values()) != expected_lcover) {
        return why.str() + "longest_cover_array_li_smyth";
    }
    if (!text.empty() &&
        left_seed_lengths(border, lca, text.size()) != oracle::brute_left_seeds(t, kind, text.size())) {
        return why.str() + "left_seed_lengths";
    }
    return std::nullopt;
}

// --- lemma predicates, each returning a counterexample description ---------

namespace lemma {

using oracle::covers;
using oracle::is_border;
using oracle::is_cover;
using oracle::is_left_seed;
using Text = std::span<const Token>;

/// (a) C ∈ Cov(T), B ∈ Bord(T), |C| <= |B|  =>  C ∈ Cov(B).
inline std::optional<std::string> cover_of_border(Text t, ScerKind kind) {
    for (std::size_t c = 1; c <= t.size(); ++c) {
        if (!is_cover(c, t, kind)) {
            continue;
        }
        for (std::size_t b = c; b <= t.size(); ++b) {
            if (is_border(b, t, kind) && !(covers(t.first(c), t.first(b), kind) && covers(t.first(c), t.last(b), kind))) {
                return "c=" + std::to_string(c) + " b=" + std::to_string(b);
            }
        }
    }
    return std::nullopt;
}

/// (b) C ∈ Cov(T), C' ∈ Cov(C)  =>  C' ∈ Cov(T).
inline std::optional<std::string> cover_of_cover(Text t, ScerKind kind) {
    for (std::size_t c = 1; c <= t.size(); ++c) {
        if (!is_cover(c, t, kind)) {
            continue;
        }
        for (std::size_t c2 = 1; c2 <= c; ++c2) {
            if (covers(t.first(c2), t.first(c), kind) && !is_cover(c2, t, kind)) {
                return "c=" + std::to_string(c) + " c'=" + std::to_string(c2);
            }
        }
    }
    return std::nullopt;
}

/// (c) C, C' ∈ Cov(T), |C| <= |C'|  =>  C ∈ Cov(C').
inline std::optional<std::string> nesting(Text t, ScerKind kind) {
    for (std::size_t c2 = 1; c2 <= t.size(); ++c2) {
        if (!is_cover(c2, t, kind)) {
            continue;
        }
        for (std::size_t c = 1; c <= c2; ++c) {
            if (is_cover(c, t, kind) && !covers(t.first(c), t.first(c2), kind)) {
                return "c=" + std::to_string(c) + " c'=" + std::to_string(c2);
            }
        }
    }
    return std::nullopt;
}

/// (d) Cov(T[:j]) ∩ Cov(T[i:]) ⊆ Cov(T) for 0 <= i-1 <= j <= n.
inline std::optional<std::string> overlap(Text t, ScerKind kind) {
    std::size_t n = t.size();
    for (std::size_t i = 1; i <= n; ++i) {
        Text tail = t.subspan(i - 1);
        for (std::size_t j = i - 1; j <= n; ++j) {
            for (std::size_t c = 1; c <= std::min(j, tail.size()); ++c) {
                // Any member of Cov(T[:j]) is ≈ T[:c].
                if (covers(t.first(c), t.first(j), kind) && covers(t.first(c), tail, kind) && !covers(t.first(c), t, kind)) {
                    return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " c=" + std::to_string(c);
                }
            }
        }
    }
    return std::nullopt;
}

/// (e) proper cover  <=>  border that covers T[:n-i] for some 1 <= i <= c.
inline std::optional<std::string> reach_characterization(Text t, ScerKind kind) {
    std::size_t n = t.size();
    for (std::size_t c = 1; c < n; ++c) {
        bool lhs = is_cover(c, t, kind);
        bool rhs = false;
        if (is_border(c, t, kind)) {
            for (std::size_t i = 1; i <= c && !rhs; ++i) {
                rhs = covers(t.first(c), t.first(n - i), kind);
            }
        }
        if (lhs != rhs) {
            return "c=" + std::to_string(c);
        }
    }
    return std::nullopt;
}

/// (f) every j in [i - Border[i], i] is a left seed of T[:i].
inline std::optional<std::string> primary_left_seeds(Text t, ScerKind kind) {
    auto border = oracle::brute_border_array(t, kind);
    for (std::size_t i = 1; i <= t.size(); ++i) {
        for (std::size_t j = i - border[i]; j <= i; ++j) {
            if (!is_left_seed(t.first(j), t.first(i), kind)) {
                return "i=" + std::to_string(i) + " j=" + std::to_string(j);
            }
        }
    }
    return std::nullopt;
}

/// (g) k <= l  =>  Cov(T[:n-k]) ∩ LSeed(T[n-l+1:]) ⊆ LSeed(T).
inline std::optional<std::string> cov_lseed_composition(Text t, ScerKind kind) {
    std::size_t n = t.size();
    for (std::size_t m = 1; m <= n; ++m) {
        Text s = t.first(m);
        if (is_left_seed(s, t, kind)) {
            continue;  // conclusion holds for every (k, l)
        }
        for (std::size_t k = 0; k + m <= n; ++k) {
            if (!covers(s, t.first(n - k), kind)) {
                continue;
            }
            for (std::size_t l = std::max<std::size_t>(k, 1); l <= n; ++l) {
                if (is_left_seed(s, t.last(l), kind)) {
                    return "m=" + std::to_string(m) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
                }
            }
        }
    }
    return std::nullopt;
}

struct Named {
    const char* name;
    std::optional<std::string> (*check)(Text, ScerKind);
};

inline constexpr Named kAll[] = {
    {"(a) cover of border", cover_of_border},
    {"(b) cover of cover", cover_of_cover},
    {"(c) nesting", nesting},
    {"(d) overlap", overlap},
    {"(e) reach characterization", reach_characterization},
    {"(f) primary left seeds", primary_left_seeds},
    {"(g) Cov/LSeed composition", cov_lseed_composition},
};

}  // namespace lemma

}  // namespace quasi::testing
