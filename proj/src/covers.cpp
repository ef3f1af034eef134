// SPDX-License-Identifier: Apache-2.0

#include "quasi/covers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quasi {

namespace {

void check_step(std::size_t i, std::size_t border, std::size_t last_border) {
    if (border >= i || (i > 1 && border > last_border + 1)) {
        std::ostringstream msg;
        msg << "border[" << i << "] = " << border << " violates the border array invariants";
        throw MalformedBorderArray(msg.str());
    }
}

[[noreturn]] void unrealizable(std::size_t i) {
    std::ostringstream msg;
    msg << "border array is not realizable by any text (detected at position " << i << ")";
    throw MalformedBorderArray(msg.str());
}

void check_position(std::size_t i, std::size_t n) {
    if (i == 0 || i > n) {
        throw std::out_of_range("position out of range");
    }
}

}  // namespace

// --- shortest covers -------------------------------------------------------

std::size_t ShortestCoverArray::at(std::size_t i) const {
    check_position(i, size());
    return scover_[i];
}

std::size_t ShortestCoverBuilder::push(std::size_t border) {
    std::size_t i = size() + 1;
    check_step(i, border, last_border_);
    last_border_ = border;

    auto& scover = state_.scover_;
    auto& reach = state_.reach_;
    scover.push_back(0);
    reach.push_back(0);

    if (border > 0 && reach[scover[border]] >= i - scover[border]) {
        scover[i] = scover[border];
        reach[scover[i]] = i;
    } else {
        scover[i] = i;
        reach[i] = i;
    }
    writes_ += 2;
    return scover[i];
}

ShortestCoverArray shortest_cover_array(const BorderArray& border) {
    ShortestCoverBuilder builder;
    for (std::size_t b : border.values()) {
        builder.push(b);
    }
    return builder.state();
}

// --- longest covers --------------------------------------------------------

std::size_t LongestCoverArray::at(std::size_t i) const {
    check_position(i, size());
    return lcover_[i];
}

void LongestCoverArray::grow(std::size_t border) {
    std::size_t i = size() + 1;
    check_step(i, border, border_.back());
    border_.push_back(border);
    lcover_.push_back(0);
    ls_children_.push_back(0);
    longest_ls_anc_.push_back(i);
}

std::size_t LongestCoverBuilder::push(std::size_t b) {
    state_.grow(b);
    std::size_t i = state_.size();
    auto& lcover = state_.lcover_;
    auto& children = state_.ls_children_;
    auto& anc = state_.longest_ls_anc_;
    ++stats_.outer_iterations;
    if (options_.track_descents) {
        descents_per_node_.resize(i + 1, 0);
    }

    // T[:b] stopped being a left seed: skip to its longest live cover.
    if (children[b] == 0 && 0 < 2 * b && 2 * b < i) {
        anc[b] = anc[lcover[b]];
    }
    lcover[i] = anc[b];
    ++children[lcover[i]];
    if (options_.after_attach) {
        options_.after_attach(i, *this);
    }

    if (i > 1) {
        std::size_t c1 = i - b;
        std::size_t c2 = (i - 1) - state_.border_[i - 1];
        // Ascending order guarantees each node is retired at most once.
        for (std::size_t j = c2; j < c1; ++j) {
            ++stats_.inner_iterations;
            std::size_t k = j;
            while (children[k] == 0) {
                if (k == 0 || children[lcover[k]] == 0) {
                    unrealizable(i);
                }
                --children[lcover[k]];
                ++stats_.descents;
                if (options_.track_descents) {
                    ++descents_per_node_[k];
                }
                k = lcover[k];
            }
            ++stats_.stops;
        }
    }
    return lcover[i];
}

LongestCoverArray longest_cover_array(const BorderArray& border, CoverStats* stats) {
    LongestCoverBuilder builder;
    for (std::size_t b : border.values()) {
        builder.push(b);
    }
    if (stats != nullptr) {
        *stats = builder.stats();
    }
    return builder.state();
}

// LCover[0] is -1 in the original; reaching it means the input was bogus.
void LiSmythCoverBuilder::set_dead(std::size_t j) {
    auto& lcover = state_.lcover_;
    auto& children = state_.ls_children_;
    while (children[j] == 0 && !dead_[j]) {
        if (j == 0 || children[lcover[j]] == 0) {
            unrealizable(size());
        }
        dead_[j] = true;
        --children[lcover[j]];
        j = lcover[j];
    }
}

std::size_t LiSmythCoverBuilder::push(std::size_t b) {
    state_.grow(b);
    dead_.push_back(false);
    std::size_t i = state_.size();
    auto& lcover = state_.lcover_;
    auto& anc = state_.longest_ls_anc_;

    if (dead_[b]) {
        if (b == 0) {
            unrealizable(i);
        }
        anc[b] = anc[lcover[b]];
    }
    lcover[i] = anc[b];
    ++state_.ls_children_[lcover[i]];
    if (after_attach) {
        after_attach(i, *this);
    }

    if (i > 1) {
        std::size_t c1 = i - b;
        std::size_t c2 = (i - 1) - state_.border_[i - 1];
        for (std::size_t j = c1; j-- > c2;) {
            set_dead(j);
        }
    }
    return lcover[i];
}

LiSmythCoverArray longest_cover_array_li_smyth(const BorderArray& border) {
    LiSmythCoverBuilder builder;
    for (std::size_t b : border.values()) {
        builder.push(b);
    }
    return {builder.state(), builder.dead()};
}

// --- queries ---------------------------------------------------------------

std::vector<std::size_t> all_cover_lengths(const LongestCoverArray& lca, std::size_t i) {
    check_position(i, lca.size());
    std::vector<std::size_t> out;
    for (std::size_t j = i; j != 0; j = lca[j]) {
        out.push_back(j);
    }
    std::ranges::reverse(out);
    return out;
}

bool is_primitive(const ShortestCoverArray& sca, std::size_t i) {
    return sca.at(i) == i;
}

bool LeftSeedSet::contains(std::size_t j) const {
    return std::ranges::binary_search(lengths, j);
}

LeftSeedSet left_seed_lengths(const LongestCoverArray& lca, std::size_t i) {
    check_position(i, lca.size());
    std::vector<char> seen(i + 1, 0);
    for (std::size_t k = i - lca.border(i); k <= i; ++k) {
        for (std::size_t j = k; j != 0 && !seen[j]; j = lca[j]) {
            seen[j] = 1;
        }
    }
    LeftSeedSet out;
    for (std::size_t j = 1; j <= i; ++j) {
        if (seen[j]) {
            out.lengths.push_back(j);
        }
    }
    return out;
}

LeftSeedSet left_seed_lengths(const BorderArray& border, const LongestCoverArray& lca, std::size_t i) {
    check_position(i, std::min(border.size(), lca.size()));
    for (std::size_t k = 1; k <= i; ++k) {
        if (border[k] != lca.border(k)) {
            throw std::invalid_argument("left_seed_lengths: cover array was built from a different border array");
        }
    }
    return left_seed_lengths(lca, i);
}

}  // namespace quasi
