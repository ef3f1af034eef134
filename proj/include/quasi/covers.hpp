// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "quasi/border.hpp"

namespace quasi {

// Everything in this header consumes only a BorderArray; which equivalence
// produced it is irrelevant. All positions are 1-based and index 0 is the
// root of the cover tree.

class ShortestCoverArray {
public:
    std::size_t size() const noexcept { return scover_.size() - 1; }

    /// Length of the shortest cover of T[:i], 1 <= i <= n.
    std::size_t operator[](std::size_t i) const noexcept { return scover_[i]; }
    std::size_t at(std::size_t i) const;

    /// Longest p <= n such that T[:j] covers T[:p] when T[:j] is primitive,
    /// otherwise 0.
    std::size_t reach(std::size_t j) const noexcept { return reach_[j]; }

    std::span<const std::size_t> values() const noexcept {
        return std::span<const std::size_t>(scover_).subspan(1);
    }
    std::span<const std::size_t> reach_values() const noexcept {
        return std::span<const std::size_t>(reach_).subspan(1);
    }

private:
    friend class ShortestCoverBuilder;
    std::vector<std::size_t> scover_{0};
    std::vector<std::size_t> reach_{0};
};

/// Online shortest-cover computation, one border value at a time.
class ShortestCoverBuilder {
public:
    /// Throws MalformedBorderArray if `border` cannot extend the values seen so far.
    std::size_t push(std::size_t border);

    std::size_t size() const noexcept { return state_.size(); }
    const ShortestCoverArray& state() const noexcept { return state_; }
    /// Number of Reach/SCover cells written.
    std::uint64_t writes() const noexcept { return writes_; }

private:
    ShortestCoverArray state_;
    std::size_t last_border_ = 0;
    std::uint64_t writes_ = 0;
};

ShortestCoverArray shortest_cover_array(const BorderArray& border);

/// LCover together with the cover-tree bookkeeping it was derived from.
///
/// ls_children(j) counts the children k of j whose prefix T[:k] is a left
/// seed of the whole text; longest_ls_anc(j) is the longest left seed among
/// the covers of T[:j] (maintained only where it is ever read).
class LongestCoverArray {
public:
    std::size_t size() const noexcept { return lcover_.size() - 1; }

    /// Longest proper cover of T[:i], or 0 if T[:i] is primitive.
    std::size_t operator[](std::size_t i) const noexcept { return lcover_[i]; }
    std::size_t at(std::size_t i) const;

    std::size_t border(std::size_t i) const noexcept { return border_[i]; }
    std::size_t ls_children(std::size_t j) const noexcept { return ls_children_[j]; }
    std::size_t longest_ls_anc(std::size_t j) const noexcept { return longest_ls_anc_[j]; }

    std::span<const std::size_t> values() const noexcept {
        return std::span<const std::size_t>(lcover_).subspan(1);
    }
    /// Indexed 0..n.
    std::span<const std::size_t> ls_children_values() const noexcept { return ls_children_; }
    std::span<const std::size_t> longest_ls_anc_values() const noexcept { return longest_ls_anc_; }

private:
    friend class LongestCoverBuilder;
    friend class LiSmythCoverBuilder;

    void grow(std::size_t border);

    std::vector<std::size_t> border_{0};
    std::vector<std::size_t> lcover_{0};
    std::vector<std::size_t> ls_children_{0};
    std::vector<std::size_t> longest_ls_anc_{0};
};

struct CoverStats {
    std::uint64_t outer_iterations = 0;
    std::uint64_t inner_iterations = 0;  // j values visited by the c2..c1-1 loop
    std::uint64_t descents = 0;          // while-loop bodies executed
    std::uint64_t stops = 0;             // while-loop conditions found false

    std::uint64_t total_work() const noexcept {
        return outer_iterations + inner_iterations + descents + stops;
    }
};

class LongestCoverBuilder {
public:
    struct Options {
        /// Record how often each node is descended from (for t(j) <= 1 checks).
        bool track_descents = false;
        /// Called right after LSChildren[LCover[i]] is incremented.
        std::function<void(std::size_t i, const LongestCoverBuilder&)> after_attach;
    };

    LongestCoverBuilder() = default;
    explicit LongestCoverBuilder(Options options) : options_(std::move(options)) {}

    /// Processes position i = size()+1 with Border[i] = border and returns
    /// LCover[i]. Throws MalformedBorderArray on input no text can produce.
    std::size_t push(std::size_t border);

    std::size_t size() const noexcept { return state_.size(); }
    const LongestCoverArray& state() const noexcept { return state_; }
    const CoverStats& stats() const noexcept { return stats_; }
    std::span<const std::uint32_t> descents_per_node() const noexcept { return descents_per_node_; }

private:
    Options options_;
    LongestCoverArray state_;
    CoverStats stats_;
    std::vector<std::uint32_t> descents_per_node_;
};

LongestCoverArray longest_cover_array(const BorderArray& border, CoverStats* stats = nullptr);

/// The original formulation: the retirement loop runs from c1-1 down to c2
/// and a Dead flag stops SetDead from visiting a node twice.
class LiSmythCoverBuilder {
public:
    std::function<void(std::size_t i, const LiSmythCoverBuilder&)> after_attach;

    std::size_t push(std::size_t border);

    std::size_t size() const noexcept { return state_.size(); }
    const LongestCoverArray& state() const noexcept { return state_; }
    /// Indexed 0..n.
    const std::vector<bool>& dead() const noexcept { return dead_; }

private:
    void set_dead(std::size_t j);

    LongestCoverArray state_;
    std::vector<bool> dead_{false};
};

struct LiSmythCoverArray {
    LongestCoverArray cover;
    std::vector<bool> dead;
};

LiSmythCoverArray longest_cover_array_li_smyth(const BorderArray& border);

/// Every j with T[:j] a cover of T[:i] (i itself included), ascending.
std::vector<std::size_t> all_cover_lengths(const LongestCoverArray& lca, std::size_t i);

/// T[:i] has no proper cover.
bool is_primitive(const ShortestCoverArray& sca, std::size_t i);

struct LeftSeedSet {
    std::vector<std::size_t> lengths;  // strictly increasing

    bool contains(std::size_t j) const;
    friend bool operator==(const LeftSeedSet&, const LeftSeedSet&) = default;
};

/// Lengths j such that T[:j] is a left seed of T[:i]: the cover-tree
/// ancestors of every k in [i - Border[i], i]. LCover values are fixed once
/// computed, so any LongestCoverArray of T[:m] with m >= i serves.
LeftSeedSet left_seed_lengths(const LongestCoverArray& lca, std::size_t i);
LeftSeedSet left_seed_lengths(const BorderArray& border, const LongestCoverArray& lca, std::size_t i);

}  // namespace quasi
