#include "codecomp/counting.hpp"

#include <stdexcept>

namespace codecomp {

BigCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) after this step
    }
    return result;
}

BigCount word_count(const Composition& comp) {
    // product over symbols of C(counts[i] + counts[i+1] + ... , counts[i])
    BigCount result = 1;
    std::int64_t suffix_total = comp.total_length();
    for (std::size_t i = 0; i + 1 < comp.alphabet_size(); ++i) {
        result *= binomial(suffix_total, comp.count(i));
        suffix_total -= comp.count(i);
    }
    return result;
}

BigCount prefix_extension_count(const Composition& prefix, const Composition& target) {
    if (prefix.alphabet_size() != target.alphabet_size())
        throw std::invalid_argument("composition alphabet sizes differ");
    if (!target.dominates(prefix)) return 0;
    return word_count(target.minus(prefix));
}

BigCount suffix_extension_count(const Composition& suffix, const Composition& target) {
    // reversing every word bijects suffix extensions onto prefix extensions
    return prefix_extension_count(suffix, target);
}

BigCount sandwich_count(const Composition& prefix, const Composition& suffix,
                        const Composition& target) {
    if (prefix.alphabet_size() != target.alphabet_size() ||
        suffix.alphabet_size() != target.alphabet_size())
        throw std::invalid_argument("composition alphabet sizes differ");
    if (prefix.total_length() + suffix.total_length() > target.total_length())
        throw std::invalid_argument(
            "sandwich_count requires non-overlapping prefix and suffix ranges");
    for (std::size_t i = 0; i < target.alphabet_size(); ++i)
        if (prefix.count(i) + suffix.count(i) > target.count(i)) return 0;
    return word_count(target.minus(prefix).minus(suffix));
}

PartialWord::PartialWord(std::size_t length) : slots_(length, -1) {
    if (length == 0) throw std::invalid_argument("partial word length must be positive");
}

PartialWord PartialWord::prefix_of(const Codeword& word, std::size_t length) {
    if (word.length() > length)
        throw std::invalid_argument("prefix word longer than the pattern");
    PartialWord p(length);
    for (std::size_t i = 0; i < word.length(); ++i) p.slots_[i] = word.symbols()[i];
    p.fixed_ = word.length();
    return p;
}

PartialWord PartialWord::suffix_of(const Codeword& word, std::size_t length) {
    if (word.length() > length)
        throw std::invalid_argument("suffix word longer than the pattern");
    PartialWord p(length);
    std::size_t offset = length - word.length();
    for (std::size_t i = 0; i < word.length(); ++i) p.slots_[offset + i] = word.symbols()[i];
    p.fixed_ = word.length();
    return p;
}

int PartialWord::symbol_at(std::size_t pos) const {
    int s = slots_.at(pos);
    if (s < 0) throw std::logic_error("position is not fixed");
    return s;
}

PartialWord PartialWord::with_fixed(std::size_t pos, int symbol) const {
    if (symbol < 0) throw std::invalid_argument("symbols must be nonnegative");
    if (slots_.at(pos) >= 0) throw std::logic_error("position is already fixed");
    PartialWord copy = *this;
    copy.slots_[pos] = symbol;
    ++copy.fixed_;
    return copy;
}

Codeword PartialWord::to_codeword() const {
    if (fixed_ != slots_.size()) throw std::logic_error("pattern has free positions");
    return Codeword(slots_);
}

std::optional<PartialWord> merge_patterns(const PartialWord& a, const PartialWord& b) {
    if (a.length() != b.length()) throw std::invalid_argument("pattern lengths differ");
    PartialWord merged = a;
    for (std::size_t i = 0; i < b.length(); ++i) {
        if (!b.is_fixed(i)) continue;
        if (!merged.is_fixed(i)) {
            merged = merged.with_fixed(i, b.symbol_at(i));
        } else if (merged.symbol_at(i) != b.symbol_at(i)) {
            return std::nullopt;
        }
    }
    return merged;
}

BigCount pattern_count(const PartialWord& pattern, const Composition& comp) {
    if (static_cast<std::int64_t>(pattern.length()) != comp.total_length())
        throw std::invalid_argument("pattern length must equal the composition length");
    std::vector<std::int64_t> remaining = comp.counts();
    for (std::size_t i = 0; i < pattern.length(); ++i) {
        if (!pattern.is_fixed(i)) continue;
        int s = pattern.symbol_at(i);
        if (s >= static_cast<int>(comp.alphabet_size()))
            throw std::invalid_argument("pattern symbol outside the alphabet");
        if (--remaining[static_cast<std::size_t>(s)] < 0) return 0;
    }
    return word_count(Composition(remaining));
}

BigCount pattern_count(const std::optional<PartialWord>& pattern, const Composition& comp) {
    return pattern ? pattern_count(*pattern, comp) : BigCount(0);
}

}  // namespace codecomp
