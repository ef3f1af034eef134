// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "quasi/scer.hpp"

namespace quasi {

class MalformedBorderArray : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Per-prefix longest proper border lengths of a text.
///
/// Positions are 1-based: `operator[](i)` is the border of T[:i] for
/// 1 <= i <= n, and `operator[](0)` is 0 by convention. Construction
/// validates the array (0 <= Border[i] < i and Border[i-1] + 1 >= Border[i]),
/// so every BorderArray in the program is well formed.
class BorderArray {
public:
    BorderArray() = default;
    explicit BorderArray(std::vector<std::size_t> values);

    /// Describes the first violated invariant, or nullopt if `values` is valid.
    static std::optional<std::string> check(std::span<const std::size_t> values);

    std::size_t size() const noexcept { return values_.size() - 1; }
    bool empty() const noexcept { return size() == 0; }

    std::size_t operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t at(std::size_t i) const;

    /// Border[1..n] as a 0-based span.
    std::span<const std::size_t> values() const noexcept {
        return std::span<const std::size_t>(values_).subspan(1);
    }

    /// The border array of T[:i].
    BorderArray prefix(std::size_t i) const;

    friend bool operator==(const BorderArray&, const BorderArray&) = default;

private:
    std::vector<std::size_t> values_{0};
};

struct BorderStats {
    std::uint64_t comparisons = 0;   // candidate extension checks
    std::uint64_t link_follows = 0;  // b -> Border[b] descents
};

/// Online failure-function construction for Identity and Parameterized.
/// Parameterized comparisons read the global prev-encoding through the
/// current window: a prev value reaching outside the window counts as 0.
class OnlineBorderBuilder {
public:
    /// Throws std::invalid_argument for kinds without an online builder.
    explicit OnlineBorderBuilder(ScerKind kind);

    /// Appends one token and returns the border of the extended prefix.
    std::size_t push(Token token);

    std::size_t size() const noexcept { return border_.size() - 1; }
    const BorderStats& stats() const noexcept { return stats_; }
    BorderArray result() const { return BorderArray(std::vector<std::size_t>(border_.begin() + 1, border_.end())); }

private:
    bool extends(std::size_t b, std::size_t i) const;

    ScerKind kind_;
    std::vector<Token> tokens_;
    std::vector<std::size_t> prev_;
    std::unordered_map<Token, std::size_t> last_;
    std::vector<std::size_t> border_{0};
    BorderStats stats_;
};

/// Border array of `text` under `kind`. Identity and Parameterized use
/// OnlineBorderBuilder; OrderIso uses border_array_generic.
BorderArray border_array(const TokenSeq& text, ScerKind kind, BorderStats* stats = nullptr);

/// Works for any SCER: for each i tries b = Border[i-1]+1, Border[i-1], ..., 1
/// and keeps the first b with T[:b] ≈ T[i-b+1:i]. Quadratic in the worst case.
BorderArray border_array_generic(const TokenSeq& text, ScerKind kind);

}  // namespace quasi
