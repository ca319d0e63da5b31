#pragma once

#include <cstdint>
#include <optional>

#include "codecomp/code_model.hpp"

// Near-optimal fix-free codes under binary letter costs (1, m), m >= 1:
// a budgeted equal-length construction and a binary search over the
// budget that yields a (5 + 1/(n-1) + epsilon)-approximation of the
// cheapest fix-free code with n codewords.

namespace codecomp {

struct BudgetParams {
    std::uint64_t codeword_count = 2;  // n >= 2
    Rational one_cost = 1;             // m >= 1; a zero costs 1
    Rational budget = 0;               // x >= 0, total-cost budget
};

struct BudgetBuild {
    std::optional<Code> code;   // nullopt: fewer candidates than codewords
    std::int64_t word_length = 0;     // floor(2x/n) + 1
    std::int64_t max_ones = 0;        // min(floor(2x/(n m)) + 1, word_length)
    BigCount candidate_count = 0;     // words of that length within the ones cap

    bool ok() const { return code.has_value(); }
};

// Sum over words of zeros * 1 + ones * m. Code must be binary.
Rational total_cost(const Code& code, const Rational& one_cost);

// Derives a common word length and ones cap from the budget and emits the
// n cheapest candidates (fewest ones first, lexicographic within), which
// are fix-free by equal length. Fails iff fewer than n candidates exist;
// failure does not imply that no fix-free code of cost <= budget exists.
BudgetBuild build_code_for_budget(const BudgetParams& p);

struct ApproxResult {
    Code code;
    Rational achieved_cost;
    Rational budget_used;
    Rational ratio_bound;  // 5 + 1/(n-1) + epsilon
};

// Binary search on the budget over [0, n(n-1+m)] (the high endpoint always
// builds), halving until the interval is within epsilon, returning the
// build at the successful endpoint. Requires n >= 2, m >= 1, epsilon > 0.
ApproxResult approx_optimal(std::uint64_t n, const Rational& one_cost, const Rational& epsilon);

}  // namespace codecomp
