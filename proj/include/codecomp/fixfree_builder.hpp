#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "codecomp/code_model.hpp"
#include "codecomp/counting.hpp"

// Constructs a binary fix-free code realizing a composition multiset,
// provided the codeword lengths pairwise satisfy the distinct-code rule
// (equal, or one at least twice the other). Candidate availability is an
// inclusion-exclusion count truncated at prefix/suffix pairs; the length
// rule makes the truncation exact, because no word can have three chosen
// words among its affixes and prefix/suffix blocks of two strictly
// shorter chosen words never overlap.

namespace codecomp {

struct FixFreeOutcome {
    enum class Status { Success, Infeasible, NotApplicable };

    Status status = Status::Infeasible;
    std::optional<Code> code;                     // engaged on Success
    std::size_t failed_step = 0;                  // 0-based, set when Infeasible
    std::optional<Composition> failed_composition;
    std::string reason;                           // set when NotApplicable

    bool ok() const { return status == Status::Success; }
};

// Number of words of composition `target` with no previously chosen word
// as a prefix or suffix, from the chosen words' compositions alone:
//
//   word_count(target)
//     - per chosen word, its prefix extensions and its suffix extensions
//     + per ordered pair (j, k), words with chosen j as prefix and chosen
//       k as suffix, where a pair involving a full-length chosen word
//       contributes 0 unless j == k and the composition equals the target
//       (then 1: the chosen word is its own prefix and suffix and was
//       subtracted twice).
//
// Requires chosen lengths <= target length, the whole length multiset
// distinct, and a chosen list jointly realizable by some fix-free family.
BigCount available_count_fixfree(const Composition& target, const std::vector<Composition>& chosen);

// alphabet_size must be 2; NotApplicable when the lengths are not distinct
FixFreeOutcome build_fix_free(const CompositionMultiset& ms);

}  // namespace codecomp
