#include "codecomp/fixfree_builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace codecomp {

BigCount available_count_fixfree(const Composition& target, const std::vector<Composition>& chosen) {
    std::vector<std::int64_t> lengths;
    lengths.reserve(chosen.size() + 1);
    lengths.push_back(target.total_length());
    for (const auto& comp : chosen) {
        if (comp.total_length() > target.total_length())
            throw std::invalid_argument("chosen composition longer than the target");
        lengths.push_back(comp.total_length());
    }
    if (!is_distinct_code(lengths))
        throw std::invalid_argument("lengths violate the distinct-code rule");

    BigCount available = word_count(target);
    for (const auto& comp : chosen) {
        available -= prefix_extension_count(comp, target);
        available -= suffix_extension_count(comp, target);
    }
    // Add back words claimed both as a prefix extension of one chosen word
    // and a suffix extension of another. Truncating inclusion-exclusion at
    // pairs is exact: prefix blocks of a fix-free family are pairwise
    // disjoint, as are suffix blocks, so no word carries three affixes.
    for (std::size_t j = 0; j < chosen.size(); ++j) {
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            const Composition& pre = chosen[j];
            const Composition& suf = chosen[k];
            bool pre_full = pre.total_length() == target.total_length();
            bool suf_full = suf.total_length() == target.total_length();
            if (pre_full || suf_full) {
                // a full-length chosen word is the only word it prefixes, and
                // by fix-freeness no other chosen word is its suffix; the word
                // itself, subtracted once per direction, comes back here
                if (j == k && pre == target) available += 1;
                continue;
            }
            // both strictly shorter: the distinct-code rule bounds each by
            // half the target, so the prefix and suffix ranges are disjoint
            available += sandwich_count(pre, suf, target);
        }
    }
    if (available < 0)
        throw std::invalid_argument("chosen compositions admit no fix-free family");
    return available;
}

// Lexicographically smallest word of composition `target` with no chosen
// word as a prefix or suffix, pinning bits left to right. The completion
// count under a pattern is the same pair-truncated inclusion-exclusion,
// evaluated on merged patterns so that overlaps between the pinned
// prefix, a chosen prefix block and a chosen suffix block are resolved
// positionwise (any clash kills the term).
static Codeword smallest_unblocked_word(const Composition& target,
                                        const std::vector<Codeword>& chosen) {
    const auto length = static_cast<std::size_t>(target.total_length());
    std::vector<PartialWord> prefix_patterns;
    std::vector<PartialWord> suffix_patterns;
    prefix_patterns.reserve(chosen.size());
    suffix_patterns.reserve(chosen.size());
    for (const auto& word : chosen) {
        prefix_patterns.push_back(PartialWord::prefix_of(word, length));
        suffix_patterns.push_back(PartialWord::suffix_of(word, length));
    }

    auto completions = [&](const PartialWord& pattern) {
        BigCount count = pattern_count(pattern, target);
        for (const auto& pp : prefix_patterns) count -= pattern_count(merge_patterns(pattern, pp), target);
        for (const auto& sp : suffix_patterns) count -= pattern_count(merge_patterns(pattern, sp), target);
        for (const auto& pp : prefix_patterns) {
            auto with_prefix = merge_patterns(pattern, pp);
            if (!with_prefix) continue;
            for (const auto& sp : suffix_patterns)
                count += pattern_count(merge_patterns(*with_prefix, sp), target);
        }
        return count;
    };

    PartialWord pattern(length);
    for (std::size_t pos = 0; pos < length; ++pos) {
        PartialWord zero_branch = pattern.with_fixed(pos, 0);
        if (completions(zero_branch) >= 1) {
            pattern = std::move(zero_branch);
        } else {
            pattern = pattern.with_fixed(pos, 1);
        }
    }
    if (completions(pattern) != 1) throw std::logic_error("pattern search lost the candidate");
    return pattern.to_codeword();
}

FixFreeOutcome build_fix_free(const CompositionMultiset& ms) {
    if (ms.alphabet_size() != 2)
        throw std::invalid_argument("fix-free construction is binary only");

    FixFreeOutcome out;
    if (!is_distinct_code(ms.lengths())) {
        out.status = FixFreeOutcome::Status::NotApplicable;
        out.reason = "codeword lengths must be pairwise equal or differ by a factor of at least 2";
        return out;
    }

    std::vector<Composition> steps = ms.expanded();
    std::sort(steps.begin(), steps.end(), [](const Composition& a, const Composition& b) {
        if (a.total_length() != b.total_length()) return a.total_length() < b.total_length();
        return a.count(1) < b.count(1);
    });

    std::vector<Codeword> words;
    std::vector<Composition> chosen_comps;
    words.reserve(steps.size());
    chosen_comps.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Composition& target = steps[i];
        if (available_count_fixfree(target, chosen_comps) == 0) {
            out.status = FixFreeOutcome::Status::Infeasible;
            out.failed_step = i;
            out.failed_composition = target;
            return out;
        }
        words.push_back(smallest_unblocked_word(target, words));
        chosen_comps.push_back(target);
    }
    out.status = FixFreeOutcome::Status::Success;
    out.code = Code(2, std::move(words));
    return out;
}

}  // namespace codecomp
