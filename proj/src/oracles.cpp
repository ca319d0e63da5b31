#include "codecomp/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace codecomp::oracles {

namespace {

bool starts_with(const std::vector<int>& w, const std::vector<int>& p) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool ends_with(const std::vector<int>& w, const std::vector<int>& s) {
    return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

// true when `candidate` may join `placed` under the mode
bool compatible(const std::vector<int>& candidate, const std::vector<std::vector<int>>& placed,
                FreeMode mode) {
    for (const auto& w : placed) {
        if (starts_with(candidate, w) || starts_with(w, candidate)) return false;
        if (mode == FreeMode::FixFree && (ends_with(candidate, w) || ends_with(w, candidate)))
            return false;
    }
    return true;
}

void check_word_budget(std::size_t alphabet_size, std::int64_t length, const OracleBudget& b) {
    if (alphabet_size > b.max_alphabet) throw std::length_error("oracle budget: alphabet too large");
    if (length > b.max_word_length) throw std::length_error("oracle budget: word too long");
    if (std::pow(static_cast<double>(alphabet_size), static_cast<double>(length)) >
        b.max_search_estimate)
        throw std::length_error("oracle budget: enumeration too large");
}

}  // namespace

std::vector<Codeword> enumerate_words(const Composition& comp, const OracleBudget& budget) {
    if (comp.total_length() < 1) throw std::invalid_argument("cannot enumerate the empty composition");
    check_word_budget(comp.alphabet_size(), comp.total_length(), budget);

    std::vector<int> symbols;
    symbols.reserve(static_cast<std::size_t>(comp.total_length()));
    for (std::size_t s = 0; s < comp.alphabet_size(); ++s)
        symbols.insert(symbols.end(), static_cast<std::size_t>(comp.count(s)), static_cast<int>(s));

    std::vector<Codeword> words;
    do {
        words.emplace_back(symbols);
    } while (std::next_permutation(symbols.begin(), symbols.end()));
    return words;
}

bool exists_code(const CompositionMultiset& ms, FreeMode mode, const OracleBudget& budget) {
    if (ms.total_words() > budget.max_codewords)
        throw std::length_error("oracle budget: too many codewords");
    std::vector<Composition> slots = ms.expanded();
    std::sort(slots.begin(), slots.end(), [](const Composition& a, const Composition& b) {
        if (a.total_length() != b.total_length()) return a.total_length() < b.total_length();
        return a.counts() < b.counts();
    });
    double estimate = 1.0;
    for (const auto& slot : slots) {
        check_word_budget(slot.alphabet_size(), slot.total_length(), budget);
        estimate *= std::pow(static_cast<double>(slot.alphabet_size()),
                             static_cast<double>(slot.total_length()));
        if (estimate > budget.max_search_estimate)
            throw std::length_error("oracle budget: search too large");
    }

    std::vector<std::vector<Codeword>> options;
    options.reserve(slots.size());
    for (const auto& slot : slots) options.push_back(enumerate_words(slot, budget));

    std::vector<std::vector<int>> placed;
    auto search = [&](auto&& self, std::size_t slot, std::size_t min_index) -> bool {
        if (slot == slots.size()) return true;
        // identical consecutive slots take words in increasing order; their
        // words are interchangeable, so this skips only permuted repeats
        std::size_t start = (slot > 0 && slots[slot] == slots[slot - 1]) ? min_index + 1 : 0;
        for (std::size_t i = start; i < options[slot].size(); ++i) {
            const auto& candidate = options[slot][i].symbols();
            if (!compatible(candidate, placed, mode)) continue;
            placed.push_back(candidate);
            if (self(self, slot + 1, i)) return true;
            placed.pop_back();
        }
        return false;
    };
    return search(search, 0, 0);
}

BigCount count_candidates(const Composition& target, const std::vector<Codeword>& chosen,
                          FreeMode mode, const OracleBudget& budget) {
    std::vector<std::vector<int>> placed;
    placed.reserve(chosen.size());
    for (const auto& w : chosen) placed.push_back(w.symbols());
    BigCount count = 0;
    for (const auto& word : enumerate_words(target, budget))
        if (compatible(word.symbols(), placed, mode)) ++count;
    return count;
}

std::optional<Rational> min_cost_fix_free(std::size_t n, const Rational& one_cost,
                                          std::int64_t max_len, const OracleBudget& budget) {
    if (n == 0) throw std::invalid_argument("need at least one codeword");
    if (max_len < 1) throw std::invalid_argument("max_len must be positive");
    if (n > budget.max_codewords) throw std::length_error("oracle budget: too many codewords");
    check_word_budget(2, max_len, budget);
    double words_total = std::pow(2.0, static_cast<double>(max_len) + 1.0) - 2.0;
    if (std::pow(words_total, static_cast<double>(n)) > budget.max_search_estimate)
        throw std::length_error("oracle budget: search too large");

    // all binary words of length 1..max_len, cheapest first
    struct Entry {
        std::vector<int> word;
        Rational cost;
    };
    std::vector<Entry> entries;
    for (std::int64_t len = 1; len <= max_len; ++len) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
            std::vector<int> word(static_cast<std::size_t>(len));
            std::int64_t ones = 0;
            for (std::int64_t i = 0; i < len; ++i) {
                word[static_cast<std::size_t>(i)] = (bits >> (len - 1 - i)) & 1;
                ones += word[static_cast<std::size_t>(i)];
            }
            entries.push_back({std::move(word), (len - ones) + ones * one_cost});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.word < b.word;
    });

    std::optional<Rational> best;
    std::vector<std::vector<int>> placed;
    auto search = [&](auto&& self, std::size_t next, const Rational& partial) -> void {
        if (placed.size() == n) {
            if (!best || partial < *best) best = partial;
            return;
        }
        auto remaining = static_cast<std::int64_t>(n - placed.size());
        for (std::size_t i = next; i < entries.size(); ++i) {
            // entries are cost-sorted: everything still to pick costs at least entries[i].cost
            if (best && partial + remaining * entries[i].cost >= *best) return;
            if (!compatible(entries[i].word, placed, FreeMode::FixFree)) continue;
            placed.push_back(entries[i].word);
            self(self, i + 1, partial + entries[i].cost);
            placed.pop_back();
        }
    };
    search(search, 0, Rational(0));
    return best;
}

}  // namespace codecomp::oracles
