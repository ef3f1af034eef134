// SPDX-License-Identifier: Apache-2.0

#pragma once

// Naive reference implementations straight from the definitions. They share
// nothing with border.hpp / covers.hpp except `equiv`, and are meant for
// cross-checking on small inputs only.

#include <cstddef>
#include <span>
#include <vector>

#include "quasi/covers.hpp"
#include "quasi/scer.hpp"

namespace quasi::oracle {

using Text = std::span<const Token>;

/// 1-based start positions p with P ≈ T[p : p+|P|-1]. Throws
/// std::invalid_argument for an empty pattern.
std::vector<std::size_t> occurrences(Text pattern, Text text, ScerKind kind);

/// `cover` ≈-covers `text`: occurrences start at 1, end at n-|C|+1 and no two
/// consecutive ones are more than |C| apart.
bool covers(Text cover, Text text, ScerKind kind);

/// T[:c] covers T. Throws std::out_of_range unless 1 <= c <= n.
bool is_cover(std::size_t c, Text text, ScerKind kind);

/// T[:b] ≈ T[n-b+1:], 0 <= b <= n.
bool is_border(std::size_t b, Text text, ScerKind kind);

/// Some 0 <= k <= l < |S| has S covering T[:n-k] and S[:l] ≈ T[n-l+1:].
bool is_left_seed(Text seed, Text text, ScerKind kind);

BorderArray brute_border_array(Text text, ScerKind kind);
std::vector<std::size_t> brute_scover(Text text, ScerKind kind);
std::vector<std::size_t> brute_lcover(Text text, ScerKind kind);

/// Prefix lengths m <= i with T[:m] a left seed of T[:i].
LeftSeedSet brute_left_seeds(Text text, ScerKind kind, std::size_t i);

}  // namespace quasi::oracle
