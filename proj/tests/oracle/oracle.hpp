#pragma once

// Brute-force reference implementations. Only the Symbol value type is shared
// with the library; every algorithm here is re-derived from the definitions.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "heckelr/symbols.hpp"

namespace oracle {

using heckelr::Int;
using heckelr::Symbol;

struct Bounds {
    std::size_t max_entries = 12;
    std::size_t max_pairs = 12;
};

/// psi as an explicit map bottom entry -> top entry, built from the level sets.
std::map<Int, Int> brute_psi(const Symbol& s);

/// All pair subsets applied by bit pattern. Checks |result| = 2^p.
std::set<Symbol> brute_C(const Symbol& s, Bounds bounds = {});

/// Every standard symbol T with sigma in C(T), with the swap count.
std::set<std::pair<Symbol, int>> brute_ancestors(const Symbol& sigma, Bounds bounds = {});

} // namespace oracle
