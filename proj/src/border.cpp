// SPDX-License-Identifier: Apache-2.0

#include "quasi/border.hpp"

#include <sstream>

namespace quasi {

BorderArray::BorderArray(std::vector<std::size_t> values) {
    if (auto error = check(values)) {
        throw MalformedBorderArray(*error);
    }
    values_.reserve(values.size() + 1);
    values_.insert(values_.end(), values.begin(), values.end());
}

std::optional<std::string> BorderArray::check(std::span<const std::size_t> values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::size_t i = k + 1;
        if (values[k] >= i) {
            std::ostringstream msg;
            msg << "border[" << i << "] = " << values[k] << " is not a proper border length";
            return msg.str();
        }
        if (i > 1 && values[k - 1] + 1 < values[k]) {
            std::ostringstream msg;
            msg << "border[" << i << "] = " << values[k] << " exceeds border[" << i - 1 << "] + 1";
            return msg.str();
        }
    }
    return std::nullopt;
}

std::size_t BorderArray::at(std::size_t i) const {
    if (i == 0 || i > size()) {
        throw std::out_of_range("BorderArray::at: position out of range");
    }
    return values_[i];
}

BorderArray BorderArray::prefix(std::size_t i) const {
    if (i > size()) {
        throw std::out_of_range("BorderArray::prefix: length out of range");
    }
    BorderArray out;
    out.values_.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    return out;
}

OnlineBorderBuilder::OnlineBorderBuilder(ScerKind kind) : kind_(kind) {
    if (kind != ScerKind::Identity && kind != ScerKind::Parameterized) {
        throw std::invalid_argument("no online border builder for this equivalence");
    }
    prev_.push_back(0);
    tokens_.push_back(0);
}

// Position b+1 of the prefix against position i of the text, both read in
// windows of length b+1 whose first b symbols are already known to match.
bool OnlineBorderBuilder::extends(std::size_t b, std::size_t i) const {
    if (kind_ == ScerKind::Identity) {
        return tokens_[b + 1] == tokens_[i];
    }
    std::size_t lhs = prev_[b + 1] > b ? 0 : prev_[b + 1];
    std::size_t rhs = prev_[i] > b ? 0 : prev_[i];
    return lhs == rhs;
}

std::size_t OnlineBorderBuilder::push(Token token) {
    std::size_t i = border_.size();
    tokens_.push_back(token);
    auto [it, inserted] = last_.try_emplace(token, i);
    prev_.push_back(inserted ? 0 : i - it->second);
    it->second = i;

    std::size_t result = 0;
    if (i > 1) {
        std::size_t b = border_[i - 1];
        while (true) {
            ++stats_.comparisons;
            if (extends(b, i)) {
                result = b + 1;
                break;
            }
            if (b == 0) {
                break;
            }
            b = border_[b];
            ++stats_.link_follows;
        }
    }
    border_.push_back(result);
    return result;
}

BorderArray border_array(const TokenSeq& text, ScerKind kind, BorderStats* stats) {
    if (kind == ScerKind::OrderIso) {
        return border_array_generic(text, kind);
    }
    OnlineBorderBuilder builder(kind);
    for (Token t : text.tokens()) {
        builder.push(t);
    }
    if (stats != nullptr) {
        *stats = builder.stats();
    }
    return builder.result();
}

BorderArray border_array_generic(const TokenSeq& text, ScerKind kind) {
    std::vector<std::size_t> values(text.size(), 0);
    for (std::size_t i = 2; i <= text.size(); ++i) {
        // A border of T[:i] of length b leaves a border of length b-1 on
        // T[:i-1], so nothing above values[i-1]+1 can match.
        std::size_t b = std::min(values[i - 2] + 1, i - 1);
        for (; b > 0; --b) {
            if (equiv(text.prefix(b), text.substr(i - b + 1, i), kind)) {
                break;
            }
        }
        values[i - 1] = b;
    }
    return BorderArray(std::move(values));
}

}  // namespace quasi
