#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "codecomp/code_model.hpp"

// Shared enumeration helpers for the property suites: systematic
// generation of compositions and of composition multisets up to a size
// bound, in a deterministic order.

namespace codecomp::testsupport {

namespace detail {
inline void compositions_rec(std::size_t index, std::int64_t remaining,
                             std::vector<std::int64_t>& counts,
                             std::vector<Composition>& out) {
    if (index + 1 == counts.size()) {
        counts[index] = remaining;
        out.push_back(Composition(counts));
        return;
    }
    for (std::int64_t value = 0; value <= remaining; ++value) {
        counts[index] = value;
        compositions_rec(index + 1, remaining - value, counts, out);
    }
}
}  // namespace detail

// All compositions over `alphabet` symbols with the exact total length.
inline std::vector<Composition> compositions_of_total(std::size_t alphabet, std::int64_t total) {
    std::vector<std::int64_t> counts(alphabet, 0);
    std::vector<Composition> out;
    detail::compositions_rec(0, total, counts, out);
    return out;
}

// All compositions with total length in [1, max_total], shortest first.
inline std::vector<Composition> compositions_up_to(std::size_t alphabet, std::int64_t max_total) {
    std::vector<Composition> out;
    for (std::int64_t total = 1; total <= max_total; ++total)
        for (auto& comp : compositions_of_total(alphabet, total)) out.push_back(std::move(comp));
    return out;
}

// Every multiset of at most `max_words` nonempty compositions whose
// lengths sum to at most `max_total`, each delivered exactly once.
inline void for_each_multiset(std::size_t alphabet, std::size_t max_words, std::int64_t max_total,
                              const std::function<void(const CompositionMultiset&)>& fn) {
    auto pool = compositions_up_to(alphabet, max_total);
    std::vector<Composition> chosen;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t start, std::int64_t used) {
        if (!chosen.empty()) fn(CompositionMultiset(alphabet, chosen));
        if (chosen.size() == max_words) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (used + pool[i].total_length() > max_total) continue;
            chosen.push_back(pool[i]);
            rec(i, used + pool[i].total_length());
            chosen.pop_back();
        }
    };
    rec(0, 0);
}

// Convenience builders for binary test data.
inline Codeword bits(const std::string& text) {
    std::vector<int> symbols;
    for (char c : text) symbols.push_back(c - '0');
    return Codeword(symbols);
}

inline Code bit_code(const std::vector<std::string>& words, std::size_t alphabet = 2) {
    std::vector<Codeword> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(bits(w));
    return Code(alphabet, out);
}

inline Composition comp(std::vector<std::int64_t> counts) { return Composition(std::move(counts)); }

}  // namespace codecomp::testsupport
