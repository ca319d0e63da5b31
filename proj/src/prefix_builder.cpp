#include "codecomp/prefix_builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace codecomp {

BigCount available_count(const Composition& target, const std::vector<Composition>& chosen) {
    BigCount available = word_count(target);
    for (const auto& comp : chosen) {
        if (comp.total_length() > target.total_length())
            throw std::invalid_argument("chosen composition longer than the target");
        available -= prefix_extension_count(comp, target);
    }
    // extension blocks of a prefix-free family are pairwise disjoint, so
    // the balance cannot go negative for a realizable chosen list
    if (available < 0)
        throw std::invalid_argument("chosen compositions admit no prefix-free family");
    return available;
}

// Lexicographically smallest word of composition `target` with no chosen
// word as a prefix. Bits are pinned left to right; a 0 survives iff at
// least one valid completion of the extended pattern remains. The chosen
// words are pairwise prefix-free, so their extension sets inside the
// pattern's branch are disjoint and a plain subtraction per chosen word
// is an exact count (a chosen word that is itself a prefix of the pattern
// wipes the whole branch via the pattern merge).
static Codeword smallest_unblocked_word(const Composition& target,
                                        const std::vector<Codeword>& chosen) {
    const auto length = static_cast<std::size_t>(target.total_length());
    std::vector<PartialWord> chosen_patterns;
    chosen_patterns.reserve(chosen.size());
    for (const auto& word : chosen)
        chosen_patterns.push_back(PartialWord::prefix_of(word, length));

    auto completions = [&](const PartialWord& pattern) {
        BigCount count = pattern_count(pattern, target);
        for (const auto& cp : chosen_patterns) count -= pattern_count(merge_patterns(pattern, cp), target);
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

BuildOutcome build_prefix_free(const CompositionMultiset& ms) {
    if (ms.alphabet_size() != 2)
        throw std::invalid_argument("prefix-free construction is binary only");

    std::vector<Composition> steps = ms.expanded();
    std::sort(steps.begin(), steps.end(), [](const Composition& a, const Composition& b) {
        if (a.total_length() != b.total_length()) return a.total_length() < b.total_length();
        return a.count(1) < b.count(1);  // fewer ones first among equal lengths
    });

    std::vector<Codeword> words;
    std::vector<Composition> chosen_comps;
    words.reserve(steps.size());
    chosen_comps.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Composition& target = steps[i];
        if (available_count(target, chosen_comps) == 0) {
            BuildOutcome out;
            out.failed_step = i;
            out.failed_composition = target;
            return out;
        }
        words.push_back(smallest_unblocked_word(target, words));
        chosen_comps.push_back(target);
    }
    BuildOutcome out;
    out.code = Code(2, std::move(words));
    return out;
}

}  // namespace codecomp
