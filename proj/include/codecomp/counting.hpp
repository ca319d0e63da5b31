#pragma once

#include <cstdint>
#include <optional>

#include "codecomp/code_model.hpp"

// Exact combinatorial counting of codewords under composition and affix
// constraints. Everything returns arbitrary-precision integers; binomials
// with out-of-range arguments count zero objects and return 0 so that
// inclusion-exclusion sums need no guards.

namespace codecomp {

// C(n, k); 0 when k < 0 or k > n. Requires n >= 0.
BigCount binomial(std::int64_t n, std::int64_t k);

// Number of words realizing the composition, as the telescoping product
// of binomials over suffix count sums (equals the multinomial
// total_length! / prod counts[i]!).
BigCount word_count(const Composition& comp);

// Number of words of composition `target` having some fixed word of
// composition `prefix` as a prefix: word_count(target - prefix), or 0 if
// target does not dominate prefix. The value depends on the prefix word
// only through its composition.
BigCount prefix_extension_count(const Composition& prefix, const Composition& target);

// Same count with the fixed word as a suffix; equal to
// prefix_extension_count by left-right symmetry.
BigCount suffix_extension_count(const Composition& suffix, const Composition& target);

// Number of words of composition `target` with a fixed prefix word and a
// fixed suffix word occupying disjoint position ranges. Refuses
// overlapping ranges (prefix length + suffix length > target length);
// overlapping constraints are served by pattern_count on merged patterns.
BigCount sandwich_count(const Composition& prefix, const Composition& suffix,
                        const Composition& target);

// A word of known length with some positions pinned to symbols.
class PartialWord {
public:
    explicit PartialWord(std::size_t length);

    // `word` pinned at positions [0, |word|); requires |word| <= length
    static PartialWord prefix_of(const Codeword& word, std::size_t length);
    // `word` pinned at positions [length - |word|, length)
    static PartialWord suffix_of(const Codeword& word, std::size_t length);

    std::size_t length() const { return slots_.size(); }
    bool is_fixed(std::size_t pos) const { return slots_.at(pos) >= 0; }
    int symbol_at(std::size_t pos) const;  // requires is_fixed(pos)
    std::size_t fixed_count() const { return fixed_; }

    // copy with one more pinned position; pos must currently be free
    PartialWord with_fixed(std::size_t pos, int symbol) const;

    // fully pinned pattern as a codeword; requires fixed_count() == length()
    Codeword to_codeword() const;

    friend bool operator==(const PartialWord&, const PartialWord&) = default;

private:
    std::vector<int> slots_;  // -1 = free
    std::size_t fixed_ = 0;
};

// Union of two constraint sets of equal length; nullopt when some position
// is pinned to two different symbols.
std::optional<PartialWord> merge_patterns(const PartialWord& a, const PartialWord& b);

// Number of words of the composition matching the pattern: pinned symbols
// are charged against the composition, the remainder is arranged freely.
// Pattern length must equal comp.total_length().
BigCount pattern_count(const PartialWord& pattern, const Composition& comp);

// Conflict counts zero.
BigCount pattern_count(const std::optional<PartialWord>& pattern, const Composition& comp);

}  // namespace codecomp
