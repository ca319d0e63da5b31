#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Core domain types for codes with prescribed codeword compositions:
// compositions, composition multisets, codewords, codes, letter costs,
// and the class-membership predicates (prefix-free / fix-free / UD).
//
// All arithmetic is exact: counts are arbitrary-precision integers and
// costs are arbitrary-precision rationals. No floating point anywhere.

namespace codecomp {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Per-symbol occurrence counts of one codeword. counts()[i] is the number
// of times symbol i appears; total_length() is the codeword length.
class Composition {
public:
    explicit Composition(std::vector<std::int64_t> counts);

    std::size_t alphabet_size() const { return counts_.size(); }
    std::int64_t count(std::size_t symbol) const { return counts_.at(symbol); }
    std::int64_t total_length() const { return total_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }

    // componentwise counts >= other.counts
    bool dominates(const Composition& other) const;
    // componentwise difference; requires dominates(other)
    Composition minus(const Composition& other) const;

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<std::int64_t> counts_;
    std::int64_t total_ = 0;
};

// A set of compositions with multiplicities (how many codewords of each
// composition a code must realize). Entries are deduplicated and kept
// sorted by (total_length, counts lexicographic) so iteration order is
// deterministic.
class CompositionMultiset {
public:
    CompositionMultiset(std::size_t alphabet_size,
                        std::vector<std::pair<Composition, std::uint64_t>> entries);
    // convenience: all multiplicities 1 (duplicates aggregate)
    CompositionMultiset(std::size_t alphabet_size, const std::vector<Composition>& compositions);

    std::size_t alphabet_size() const { return alphabet_size_; }
    const std::vector<std::pair<Composition, std::uint64_t>>& entries() const { return entries_; }
    std::uint64_t total_words() const { return total_words_; }
    // one entry per codeword, multiplicities expanded, entry order
    std::vector<Composition> expanded() const;
    // codeword lengths, multiplicities expanded
    std::vector<std::int64_t> lengths() const;

    friend bool operator==(const CompositionMultiset&, const CompositionMultiset&) = default;

private:
    std::size_t alphabet_size_ = 0;
    std::vector<std::pair<Composition, std::uint64_t>> entries_;
    std::uint64_t total_words_ = 0;
};

// A nonempty sequence of symbol indices.
class Codeword {
public:
    explicit Codeword(std::vector<int> symbols);

    const std::vector<int>& symbols() const { return symbols_; }
    std::size_t length() const { return symbols_.size(); }
    int max_symbol() const;
    Codeword reversed() const;

    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    std::vector<int> symbols_;
};

// An ordered list of codewords over a fixed alphabet.
class Code {
public:
    Code(std::size_t alphabet_size, std::vector<Codeword> words);

    std::size_t alphabet_size() const { return alphabet_size_; }
    const std::vector<Codeword>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }

    friend bool operator==(const Code&, const Code&) = default;

private:
    std::size_t alphabet_size_ = 1;
    std::vector<Codeword> words_;
};

// Positive exact-rational cost per alphabet symbol.
class CostModel {
public:
    explicit CostModel(std::vector<Rational> costs);
    // binary costs (1, m) with m >= 1
    static CostModel binary(const Rational& one_cost);

    std::size_t alphabet_size() const { return costs_.size(); }
    const std::vector<Rational>& costs() const { return costs_; }

private:
    std::vector<Rational> costs_;
};

// Nonnegative exact rationals summing to exactly 1.
class Distribution {
public:
    explicit Distribution(std::vector<Rational> probs);
    static Distribution uniform(std::size_t n);

    std::size_t size() const { return probs_.size(); }
    const std::vector<Rational>& probs() const { return probs_; }

private:
    std::vector<Rational> probs_;
};

Composition composition_of(const Codeword& word, std::size_t alphabet_size);

// Composition multiset realized by a code (alphabet_size >= 2 required).
CompositionMultiset multiset_of(const Code& code);

// Affix predicates. A duplicate codeword counts as a prefix/suffix of its
// twin, so codes with duplicates fail every one of these.
bool is_prefix_free(const Code& code);
bool is_suffix_free(const Code& code);
bool is_fix_free(const Code& code);

// Sardinas-Patterson dangling-suffix iteration.
bool is_uniquely_decodable(const Code& code);

Rational codeword_cost(const Composition& comp, const CostModel& cm);
Rational average_cost(const Code& code, const Distribution& dist, const CostModel& cm);

// True iff every pair of lengths is equal or one is at least twice the other.
bool is_distinct_code(const std::vector<std::int64_t>& lengths);

}  // namespace codecomp
