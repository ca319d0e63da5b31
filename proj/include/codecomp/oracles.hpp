#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "codecomp/code_model.hpp"

// Brute-force reference implementations for property and acceptance
// tests. Deliberately independent of the counting and builder modules:
// everything here is direct enumeration plus naive affix scans, usable
// only at desk scale and guarded by hard budgets.

namespace codecomp::oracles {

struct OracleBudget {
    std::int64_t max_word_length = 16;
    std::size_t max_alphabet = 4;
    std::size_t max_codewords = 6;
    // refusal cap on the estimated enumeration size (D^L per word slot)
    double max_search_estimate = 1e8;
};

enum class FreeMode { PrefixFree, FixFree };

// All words with exactly the given composition, lexicographic order.
std::vector<Codeword> enumerate_words(const Composition& comp, const OracleBudget& budget = {});

// Backtracking assignment of one word per multiset slot, rejecting affix
// violations per mode. Any alphabet size within budget.
bool exists_code(const CompositionMultiset& ms, FreeMode mode, const OracleBudget& budget = {});

// Of the words realizing `target`, how many have no chosen word as a
// prefix (PrefixFree) or as a prefix or suffix (FixFree).
BigCount count_candidates(const Composition& target, const std::vector<Codeword>& chosen,
                          FreeMode mode, const OracleBudget& budget = {});

// Minimum total cost under letter costs (1, m) over all fix-free codes of
// n distinct binary words of length <= max_len; nullopt when none exists
// within that length bound.
std::optional<Rational> min_cost_fix_free(std::size_t n, const Rational& one_cost,
                                          std::int64_t max_len, const OracleBudget& budget = {});

}  // namespace codecomp::oracles
