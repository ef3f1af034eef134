// SPDX-License-Identifier: Apache-2.0

#include "quasi/oracle.hpp"

#include <stdexcept>

namespace quasi::oracle {

std::vector<std::size_t> occurrences(Text pattern, Text text, ScerKind kind) {
    if (pattern.empty()) {
        throw std::invalid_argument("occurrences: empty pattern");
    }
    std::vector<std::size_t> out;
    if (pattern.size() > text.size()) {
        return out;
    }
    for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p) {
        if (equiv(pattern, text.subspan(p, pattern.size()), kind)) {
            out.push_back(p + 1);
        }
    }
    return out;
}

bool covers(Text cover, Text text, ScerKind kind) {
    if (cover.empty() || cover.size() > text.size()) {
        return false;
    }
    auto occ = occurrences(cover, text, kind);
    if (occ.empty() || occ.front() != 1 || occ.back() != text.size() - cover.size() + 1) {
        return false;
    }
    for (std::size_t k = 1; k < occ.size(); ++k) {
        if (occ[k] - occ[k - 1] > cover.size()) {
            return false;
        }
    }
    return true;
}

bool is_cover(std::size_t c, Text text, ScerKind kind) {
    if (c == 0 || c > text.size()) {
        throw std::out_of_range("is_cover: length out of range");
    }
    return covers(text.first(c), text, kind);
}

bool is_border(std::size_t b, Text text, ScerKind kind) {
    return b <= text.size() && equiv(text.first(b), text.last(b), kind);
}

bool is_left_seed(Text seed, Text text, ScerKind kind) {
    std::size_t m = seed.size();
    for (std::size_t k = 0; k < m && k <= text.size(); ++k) {
        if (!covers(seed, text.first(text.size() - k), kind)) {
            continue;
        }
        for (std::size_t l = k; l < m && l <= text.size(); ++l) {
            if (equiv(seed.first(l), text.last(l), kind)) {
                return true;
            }
        }
    }
    return false;
}

BorderArray brute_border_array(Text text, ScerKind kind) {
    std::vector<std::size_t> values(text.size(), 0);
    for (std::size_t i = 1; i <= text.size(); ++i) {
        for (std::size_t b = i - 1; b > 0; --b) {
            if (is_border(b, text.first(i), kind)) {
                values[i - 1] = b;
                break;
            }
        }
    }
    return BorderArray(std::move(values));
}

std::vector<std::size_t> brute_scover(Text text, ScerKind kind) {
    std::vector<std::size_t> out(text.size(), 0);
    for (std::size_t i = 1; i <= text.size(); ++i) {
        for (std::size_t c = 1; c <= i; ++c) {
            if (is_cover(c, text.first(i), kind)) {
                out[i - 1] = c;
                break;
            }
        }
    }
    return out;
}

std::vector<std::size_t> brute_lcover(Text text, ScerKind kind) {
    std::vector<std::size_t> out(text.size(), 0);
    for (std::size_t i = 1; i <= text.size(); ++i) {
        for (std::size_t c = i - 1; c > 0; --c) {
            if (is_cover(c, text.first(i), kind)) {
                out[i - 1] = c;
                break;
            }
        }
    }
    return out;
}

LeftSeedSet brute_left_seeds(Text text, ScerKind kind, std::size_t i) {
    if (i == 0 || i > text.size()) {
        throw std::out_of_range("brute_left_seeds: position out of range");
    }
    LeftSeedSet out;
    Text prefix = text.first(i);
    for (std::size_t m = 1; m <= i; ++m) {
        if (is_left_seed(text.first(m), prefix, kind)) {
            out.lengths.push_back(m);
        }
    }
    return out;
}

}  // namespace quasi::oracle
