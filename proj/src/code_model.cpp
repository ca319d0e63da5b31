#include "codecomp/code_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace codecomp {

namespace {

bool starts_with(const std::vector<int>& w, const std::vector<int>& p) {
    if (p.size() > w.size()) return false;
    return std::equal(p.begin(), p.end(), w.begin());
}

bool ends_with(const std::vector<int>& w, const std::vector<int>& s) {
    if (s.size() > w.size()) return false;
    return std::equal(s.rbegin(), s.rend(), w.rbegin());
}

}  // namespace

Composition::Composition(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::invalid_argument("composition needs at least one symbol count");
    for (std::int64_t c : counts_) {
        if (c < 0) throw std::invalid_argument("composition counts must be nonnegative");
        total_ += c;
    }
}

bool Composition::dominates(const Composition& other) const {
    if (other.counts_.size() != counts_.size())
        throw std::invalid_argument("composition alphabet sizes differ");
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] < other.counts_[i]) return false;
    return true;
}

Composition Composition::minus(const Composition& other) const {
    if (!dominates(other)) throw std::invalid_argument("composition difference would be negative");
    std::vector<std::int64_t> diff(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) diff[i] = counts_[i] - other.counts_[i];
    return Composition(diff);
}

CompositionMultiset::CompositionMultiset(std::size_t alphabet_size,
                                         std::vector<std::pair<Composition, std::uint64_t>> entries)
    : alphabet_size_(alphabet_size) {
    if (alphabet_size_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (entries.empty()) throw std::invalid_argument("composition multiset must not be empty");
    std::map<Composition, std::uint64_t> agg;
    for (auto& [comp, mult] : entries) {
        if (comp.alphabet_size() != alphabet_size_)
            throw std::invalid_argument("composition alphabet size does not match multiset");
        if (comp.total_length() < 1)
            throw std::invalid_argument("empty composition not allowed in a multiset");
        if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
        agg[comp] += mult;
    }
    for (auto& [comp, mult] : agg) {
        entries_.emplace_back(comp, mult);
        total_words_ += mult;
    }
    // shortest first, then lexicographic on counts
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
        if (a.first.total_length() != b.first.total_length())
            return a.first.total_length() < b.first.total_length();
        return a.first.counts() < b.first.counts();
    });
}

CompositionMultiset::CompositionMultiset(std::size_t alphabet_size,
                                         const std::vector<Composition>& compositions)
    : CompositionMultiset(alphabet_size, [&] {
          std::vector<std::pair<Composition, std::uint64_t>> entries;
          entries.reserve(compositions.size());
          for (const auto& c : compositions) entries.emplace_back(c, 1);
          return entries;
      }()) {}

std::vector<Composition> CompositionMultiset::expanded() const {
    std::vector<Composition> out;
    out.reserve(total_words_);
    for (const auto& [comp, mult] : entries_)
        for (std::uint64_t i = 0; i < mult; ++i) out.push_back(comp);
    return out;
}

std::vector<std::int64_t> CompositionMultiset::lengths() const {
    std::vector<std::int64_t> out;
    out.reserve(total_words_);
    for (const auto& [comp, mult] : entries_)
        for (std::uint64_t i = 0; i < mult; ++i) out.push_back(comp.total_length());
    return out;
}

Codeword::Codeword(std::vector<int> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("codeword must not be empty");
    for (int s : symbols_)
        if (s < 0) throw std::invalid_argument("codeword symbols must be nonnegative");
}

int Codeword::max_symbol() const { return *std::max_element(symbols_.begin(), symbols_.end()); }

Codeword Codeword::reversed() const {
    return Codeword(std::vector<int>(symbols_.rbegin(), symbols_.rend()));
}

Code::Code(std::size_t alphabet_size, std::vector<Codeword> words)
    : alphabet_size_(alphabet_size), words_(std::move(words)) {
    if (alphabet_size_ < 1) throw std::invalid_argument("alphabet size must be at least 1");
    for (const auto& w : words_)
        if (w.max_symbol() >= static_cast<int>(alphabet_size_))
            throw std::invalid_argument("codeword symbol outside the alphabet");
}

CostModel::CostModel(std::vector<Rational> costs) : costs_(std::move(costs)) {
    if (costs_.empty()) throw std::invalid_argument("cost model needs at least one symbol");
    for (const auto& c : costs_)
        if (c <= 0) throw std::invalid_argument("letter costs must be positive");
}

CostModel CostModel::binary(const Rational& one_cost) {
    if (one_cost < 1) throw std::invalid_argument("binary cost model requires m >= 1");
    return CostModel({Rational(1), one_cost});
}

Distribution::Distribution(std::vector<Rational> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::invalid_argument("distribution must not be empty");
    Rational sum = 0;
    for (const auto& p : probs_) {
        if (p < 0) throw std::invalid_argument("probabilities must be nonnegative");
        sum += p;
    }
    if (sum != 1) throw std::invalid_argument("probabilities must sum to exactly 1");
}

Distribution Distribution::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform distribution needs n >= 1");
    return Distribution(std::vector<Rational>(n, Rational(1, n)));
}

Composition composition_of(const Codeword& word, std::size_t alphabet_size) {
    std::vector<std::int64_t> counts(alphabet_size, 0);
    for (int s : word.symbols()) {
        if (s >= static_cast<int>(alphabet_size))
            throw std::invalid_argument("codeword symbol outside the alphabet");
        ++counts[static_cast<std::size_t>(s)];
    }
    return Composition(counts);
}

CompositionMultiset multiset_of(const Code& code) {
    if (code.alphabet_size() < 2)
        throw std::invalid_argument("composition multisets need alphabet size >= 2");
    std::vector<Composition> comps;
    comps.reserve(code.size());
    for (const auto& w : code.words()) comps.push_back(composition_of(w, code.alphabet_size()));
    return CompositionMultiset(code.alphabet_size(), comps);
}

bool is_prefix_free(const Code& code) {
    const auto& words = code.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (i != j && starts_with(words[j].symbols(), words[i].symbols())) return false;
    return true;
}

bool is_suffix_free(const Code& code) {
    const auto& words = code.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (i != j && ends_with(words[j].symbols(), words[i].symbols())) return false;
    return true;
}

bool is_fix_free(const Code& code) { return is_prefix_free(code) && is_suffix_free(code); }

bool is_uniquely_decodable(const Code& code) {
    const auto& words = code.words();
    std::set<std::vector<int>> codeset;
    for (const auto& w : words) {
        if (!codeset.insert(w.symbols()).second) return false;  // duplicate
    }

    // dangling suffixes seeded from codeword-on-codeword overlaps
    std::set<std::vector<int>> dangling;
    auto drop_prefix = [](const std::vector<int>& w, std::size_t n) {
        return std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
    };
    for (const auto& u : codeset)
        for (const auto& v : codeset)
            if (u != v && starts_with(v, u)) dangling.insert(drop_prefix(v, u.size()));

    std::set<std::vector<int>> seen = dangling;
    while (!dangling.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& d : dangling) {
            if (codeset.count(d)) return false;
            for (const auto& w : codeset) {
                if (starts_with(d, w)) {
                    auto tail = drop_prefix(d, w.size());
                    if (!tail.empty() && seen.insert(tail).second) next.insert(tail);
                } else if (starts_with(w, d)) {
                    auto tail = drop_prefix(w, d.size());
                    if (!tail.empty() && seen.insert(tail).second) next.insert(tail);
                }
            }
        }
        dangling.swap(next);
    }
    return true;
}

Rational codeword_cost(const Composition& comp, const CostModel& cm) {
    if (comp.alphabet_size() != cm.alphabet_size())
        throw std::invalid_argument("composition and cost model alphabet sizes differ");
    Rational cost = 0;
    for (std::size_t i = 0; i < comp.alphabet_size(); ++i) cost += comp.count(i) * cm.costs()[i];
    return cost;
}

Rational average_cost(const Code& code, const Distribution& dist, const CostModel& cm) {
    if (dist.size() != code.size())
        throw std::invalid_argument("distribution length must match the codeword count");
    Rational avg = 0;
    for (std::size_t k = 0; k < code.size(); ++k)
        avg += dist.probs()[k] * codeword_cost(composition_of(code.words()[k], code.alphabet_size()), cm);
    return avg;
}

bool is_distinct_code(const std::vector<std::int64_t>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("length multiset must not be empty");
    for (std::size_t i = 0; i < lengths.size(); ++i)
        for (std::size_t j = i + 1; j < lengths.size(); ++j) {
            std::int64_t lo = std::min(lengths[i], lengths[j]);
            std::int64_t hi = std::max(lengths[i], lengths[j]);
            if (lo != hi && 2 * lo > hi) return false;
        }
    return true;
}

}  // namespace codecomp
