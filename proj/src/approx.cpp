#include "codecomp/approx.hpp"

#include <algorithm>
#include <stdexcept>

#include "codecomp/counting.hpp"

namespace codecomp {

namespace {

// floor of a nonnegative rational
BigCount floor_nonneg(const Rational& value) {
    return numerator(value) / denominator(value);
}

std::int64_t to_word_length(const BigCount& value) {
    // word lengths beyond this are not materializable anyway
    constexpr std::int64_t kMaxLength = std::int64_t(1) << 20;
    if (value > kMaxLength) throw std::overflow_error("budget implies an absurd word length");
    return value.convert_to<std::int64_t>();
}

void validate(const BudgetParams& p) {
    if (p.codeword_count < 2) throw std::invalid_argument("codeword count must be at least 2");
    if (p.one_cost < 1) throw std::invalid_argument("cost of symbol 1 must be at least 1");
    if (p.budget < 0) throw std::invalid_argument("budget must be nonnegative");
}

}  // namespace

Rational total_cost(const Code& code, const Rational& one_cost) {
    if (code.alphabet_size() != 2) throw std::invalid_argument("total_cost expects a binary code");
    Rational cost = 0;
    for (const auto& word : code.words()) {
        std::int64_t ones = std::count(word.symbols().begin(), word.symbols().end(), 1);
        std::int64_t zeros = static_cast<std::int64_t>(word.length()) - ones;
        cost += zeros + ones * one_cost;
    }
    return cost;
}

BudgetBuild build_code_for_budget(const BudgetParams& p) {
    validate(p);
    const Rational mean_doubled = 2 * p.budget / p.codeword_count;  // 2x/n
    const std::int64_t length = to_word_length(floor_nonneg(mean_doubled)) + 1;
    const std::int64_t ones_cap =
        std::min<std::int64_t>(to_word_length(floor_nonneg(mean_doubled / p.one_cost)) + 1, length);

    BudgetBuild build;
    build.word_length = length;
    build.max_ones = ones_cap;
    for (std::int64_t t = 0; t <= ones_cap; ++t) build.candidate_count += binomial(length, t);
    if (build.candidate_count < p.codeword_count) return build;  // fewer candidates than codewords

    // emit the n cheapest candidates: fewest ones first, lexicographic
    // within a ones count (words of one length are fix-free outright)
    std::vector<Codeword> words;
    words.reserve(p.codeword_count);
    for (std::int64_t t = 0; t <= ones_cap && words.size() < p.codeword_count; ++t) {
        std::vector<int> bits(static_cast<std::size_t>(length), 0);
        std::fill(bits.end() - t, bits.end(), 1);
        do {
            words.emplace_back(bits);
        } while (words.size() < p.codeword_count && std::next_permutation(bits.begin(), bits.end()));
    }
    build.code = Code(2, std::move(words));
    return build;
}

ApproxResult approx_optimal(std::uint64_t n, const Rational& one_cost, const Rational& epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");

    Rational lo = 0;
    Rational hi = Rational(n) * (Rational(n) - 1 + one_cost);
    BudgetBuild at_hi = build_code_for_budget({n, one_cost, hi});
    if (!at_hi.ok()) throw std::logic_error("the n one-hot words always fit the top budget");

    // halve [lo, hi] keeping success at hi; failures raise lo
    while (hi - lo > epsilon) {
        Rational mid = (lo + hi) / 2;
        BudgetBuild at_mid = build_code_for_budget({n, one_cost, mid});
        if (at_mid.ok()) {
            hi = mid;
            at_hi = std::move(at_mid);
        } else {
            lo = mid;
        }
    }

    ApproxResult result{std::move(*at_hi.code), 0, hi,
                        Rational(5) + Rational(1, n - 1) + epsilon};
    result.achieved_cost = total_cost(result.code, one_cost);
    return result;
}

}  // namespace codecomp
