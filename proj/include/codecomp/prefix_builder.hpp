#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "codecomp/code_model.hpp"
#include "codecomp/counting.hpp"

// Constructs the binary prefix-free code realizing a composition multiset,
// shortest compositions first, emitting at each step the lexicographically
// smallest word of the step's composition that has no previously chosen
// word as a prefix. Candidate words are never enumerated: each bit is
// fixed left to right by exact counting of the remaining completions.

namespace codecomp {

struct BuildOutcome {
    std::optional<Code> code;  // engaged on success
    // set when infeasible: 0-based step index and its composition
    std::size_t failed_step = 0;
    std::optional<Composition> failed_composition;

    bool ok() const { return code.has_value(); }
};

// Number of words of composition `target` with no previously chosen word
// as a prefix, computed from the chosen words' compositions alone:
// word_count(target) minus one disjoint extension block per chosen word.
// Requires every chosen total_length <= target total_length, and a chosen
// list jointly realizable by some prefix-free family (a negative balance
// is reported as invalid input).
BigCount available_count(const Composition& target, const std::vector<Composition>& chosen);

// alphabet_size must be 2
BuildOutcome build_prefix_free(const CompositionMultiset& ms);

}  // namespace codecomp
