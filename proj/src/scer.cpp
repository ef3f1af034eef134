// SPDX-License-Identifier: Apache-2.0

#include "quasi/scer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace quasi {

TokenSeq TokenSeq::from_bytes(std::string_view bytes) {
    std::vector<Token> tokens;
    tokens.reserve(bytes.size());
    for (char c : bytes) {
        tokens.push_back(static_cast<unsigned char>(c));
    }
    return TokenSeq(std::move(tokens));
}

std::span<const Token> TokenSeq::substr(std::size_t i, std::size_t j) const {
    if (i == 0 || j > size() || i > j + 1) {
        throw std::out_of_range("TokenSeq::substr: bad range");
    }
    return std::span<const Token>(tokens_).subspan(i - 1, j + 1 - i);
}

std::string_view to_string(ScerKind kind) noexcept {
    switch (kind) {
    case ScerKind::Identity: return "identity";
    case ScerKind::Parameterized: return "param";
    case ScerKind::OrderIso: return "op";
    }
    return "?";
}

namespace {

// A bijection between the symbols of x and y exists iff the partial maps
// built in both directions never contradict themselves.
bool parameterized_match(std::span<const Token> x, std::span<const Token> y) {
    std::unordered_map<Token, Token> forward;
    std::unordered_map<Token, Token> backward;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto [f, f_new] = forward.try_emplace(x[i], y[i]);
        if (!f_new && f->second != y[i]) {
            return false;
        }
        auto [b, b_new] = backward.try_emplace(y[i], x[i]);
        if (!b_new && b->second != x[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool equiv(std::span<const Token> x, std::span<const Token> y, ScerKind kind) {
    if (x.size() != y.size()) {
        return false;
    }
    switch (kind) {
    case ScerKind::Identity: return std::ranges::equal(x, y);
    case ScerKind::Parameterized: return parameterized_match(x, y);
    case ScerKind::OrderIso: return rank_signature(x) == rank_signature(y);
    }
    return false;
}

std::vector<std::size_t> prev_encode(std::span<const Token> x) {
    std::vector<std::size_t> out(x.size(), 0);
    std::unordered_map<Token, std::size_t> last;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto [it, inserted] = last.try_emplace(x[i], i);
        if (!inserted) {
            out[i] = i - it->second;
            it->second = i;
        }
    }
    return out;
}

std::vector<std::size_t> rank_signature(std::span<const Token> x) {
    std::vector<Token> distinct(x.begin(), x.end());
    std::ranges::sort(distinct);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> out;
    out.reserve(x.size());
    for (Token t : x) {
        out.push_back(static_cast<std::size_t>(std::ranges::lower_bound(distinct, t) - distinct.begin()));
    }
    return out;
}

}  // namespace quasi
