#pragma once

#include <optional>
#include <vector>

#include "codecomp/code_model.hpp"
#include "codecomp/counting.hpp"

// Existence test for a D-ary prefix-free code realizing a composition
// multiset. For each composition d in the multiset, the number of words
// realizing d must be at least the number of words of composition d that
// are ruled out by codewords whose compositions embed into d; the test
// compares both sides exactly.

namespace codecomp {

// One inequality row: words realizing the composition (lhs) versus words
// claimed by embedded codeword compositions, the composition itself
// included (rhs).
struct FeasibilityRow {
    Composition composition;
    BigCount lhs;
    BigCount rhs;

    bool holds() const { return lhs >= rhs; }
};

struct FeasibilityVerdict {
    bool feasible = false;
    // engaged iff infeasible: the violating row of smallest total_length,
    // ties broken lexicographically on counts
    std::optional<FeasibilityRow> witness;
};

// All rows in deterministic order (total_length, then counts lexicographic).
std::vector<FeasibilityRow> feasibility_table(const CompositionMultiset& ms);

FeasibilityVerdict check_prefix_feasibility(const CompositionMultiset& ms);

}  // namespace codecomp
