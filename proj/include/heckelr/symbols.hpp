#pragma once

#include <compare>
#include <vector>

#include "heckelr/error.hpp"
#include "heckelr/partitions.hpp"

namespace heckelr {

/// Two-row Lusztig symbol. The top row has at least as many entries as the
/// bottom row; rows are aligned on their first entries.
class Symbol {
public:
    Symbol(BetaRow top, BetaRow bottom);
    Symbol(std::vector<Int> top, std::vector<Int> bottom)
        : Symbol(BetaRow(std::move(top)), BetaRow(std::move(bottom))) {}

    const BetaRow& top() const { return top_; }
    const BetaRow& bottom() const { return bottom_; }

    /// Canonical order: lexicographic on the top row, then on the bottom row.
    auto operator<=>(const Symbol&) const = default;

private:
    BetaRow top_;
    BetaRow bottom_;
};

/// A pair (source, target) of the psi-injection with target < source. The
/// source lives in the bottom row, the target in the top row.
struct Pair {
    Int source;
    Int target;

    auto operator<=>(const Pair&) const = default;
};

/// The injection psi: bottom row -> top row of a standard symbol, split into
/// its fixed points (the common entries of both rows) and its pairs.
struct PairStructure {
    std::vector<Int> fixed;
    std::vector<Pair> pairs; // increasing source

    /// psi(j) for j in the bottom row. Throws DomainError otherwise.
    Int psi(Int j) const;
};

struct Ancestor {
    Symbol symbol;
    int swaps;

    auto operator<=>(const Ancestor&) const = default;
};

/// Top row = beta(cp2), bottom row = beta(cp1). Requires charge(cp1) <= charge(cp2).
Symbol symbol_of(const ChargedPartition& cp1, const ChargedPartition& cp2);

/// top[k] <= bottom[k] for every column k of the bottom row.
bool is_standard(const Symbol& s);

/// Builds psi level by level: level 0 fixes the common entries, level l >= 1
/// sends each still unassigned bottom entry j to j - l when that top entry is
/// still free. Throws DomainError on a non-standard symbol.
PairStructure pair_structure(const Symbol& s);

/// Exchange the selected pairs between the rows and re-sort both rows.
/// `selected` has one flag per entry of ps.pairs.
Symbol swap_pairs(const Symbol& s, const PairStructure& ps, const std::vector<bool>& selected);

/// All 2^p symbols obtained by swapping a subset of the p pairs, sorted
/// canonically. Includes s itself.
std::vector<Symbol> swap_family(const Symbol& s);

/// Number of pairs of the standard symbol s that must be swapped to reach
/// sigma. Throws DomainError when sigma is not in swap_family(s).
int swap_count(const Symbol& s, const Symbol& sigma);

/// Every standard symbol S whose swap family contains sigma, paired with the
/// number of swaps leading to sigma. Sorted canonically.
std::vector<Ancestor> standard_ancestors(const Symbol& sigma);

} // namespace heckelr
