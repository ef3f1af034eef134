// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace quasi {

using Token = std::uint64_t;

/// Immutable token sequence. Substring accessors use 1-based inclusive
/// positions; `tokens()` exposes the underlying 0-based storage.
class TokenSeq {
public:
    TokenSeq() = default;
    explicit TokenSeq(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}
    TokenSeq(std::initializer_list<Token> tokens) : tokens_(tokens) {}

    /// Maps each byte to its unsigned code point.
    static TokenSeq from_bytes(std::string_view bytes);

    std::size_t size() const noexcept { return tokens_.size(); }
    bool empty() const noexcept { return tokens_.empty(); }
    std::span<const Token> tokens() const noexcept { return tokens_; }

    /// T[i:j], 1 <= i <= j+1 <= n+1 (i == j+1 yields the empty string).
    std::span<const Token> substr(std::size_t i, std::size_t j) const;
    /// T[:j]
    std::span<const Token> prefix(std::size_t j) const { return substr(1, j); }
    /// T[i:]
    std::span<const Token> suffix(std::size_t i) const { return substr(i, size()); }

    friend bool operator==(const TokenSeq&, const TokenSeq&) = default;

private:
    std::vector<Token> tokens_;
};

enum class ScerKind { Identity, Parameterized, OrderIso };

inline constexpr ScerKind kAllScerKinds[] = {ScerKind::Identity, ScerKind::Parameterized,
                                             ScerKind::OrderIso};

std::string_view to_string(ScerKind kind) noexcept;

/// X ≈ Y under `kind`. Sequences of different lengths are never equivalent.
bool equiv(std::span<const Token> x, std::span<const Token> y, ScerKind kind);

inline bool equiv(const TokenSeq& x, const TokenSeq& y, ScerKind kind) {
    return equiv(x.tokens(), y.tokens(), kind);
}

/// Distance to the previous occurrence of the same token, 0 if none.
/// Equal-length strings are parameterized-equivalent iff their encodings match.
std::vector<std::size_t> prev_encode(std::span<const Token> x);

/// Dense rank of every token among the distinct values of `x`.
std::vector<std::size_t> rank_signature(std::span<const Token> x);

}  // namespace quasi
