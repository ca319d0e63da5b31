#include "codecomp/feasibility.hpp"

namespace codecomp {

// rhs of the row for `target`: every multiset entry whose composition
// embeds componentwise (the entry for `target` itself included) claims
// multiplicity * word_count(target - entry) words.
static BigCount required_count(const Composition& target, const CompositionMultiset& ms) {
    BigCount rhs = 0;
    for (const auto& [comp, mult] : ms.entries()) {
        if (!target.dominates(comp)) continue;
        rhs += BigCount(mult) * word_count(target.minus(comp));
    }
    return rhs;
}

std::vector<FeasibilityRow> feasibility_table(const CompositionMultiset& ms) {
    std::vector<FeasibilityRow> rows;
    rows.reserve(ms.entries().size());
    for (const auto& [comp, mult] : ms.entries())
        rows.push_back({comp, word_count(comp), required_count(comp, ms)});
    return rows;
}

FeasibilityVerdict check_prefix_feasibility(const CompositionMultiset& ms) {
    // entries are sorted shortest first, ties lexicographic, so the first
    // violating row is the deterministic witness
    for (auto& row : feasibility_table(ms))
        if (!row.holds()) return {false, std::move(row)};
    return {true, std::nullopt};
}

}  // namespace codecomp
