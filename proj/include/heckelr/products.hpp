#pragma once

#include <vector>

#include "heckelr/multisegments.hpp"
#include "heckelr/partitions.hpp"
#include "heckelr/symbols.hpp"

namespace heckelr {

/// The evaluation module S(lambda; t^exponent). Unvalidated until normalized.
struct EvaluationModuleSpec {
    Partition partition;
    Int exponent = 1;
};

/// Charged partitions ordered so that first.charge() <= second.charge().
struct NormalizedPair {
    ChargedPartition first;
    ChargedPartition second;
};

/// Validates exponent >= max(1, length) for both inputs and orders them by
/// charge. Equal charges are ordered by beta row, lexicographically smaller first.
NormalizedPair normalize_inputs(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2);

struct ExpansionTerm {
    Symbol symbol;       // standard symbol S
    int swaps;           // exponent of v attached to S
    Multisegment factor; // m(S)
};

/// b*_{m1} b*_{m2} = v^offset * sum_S v^{swaps(S)} b*_{m(S)}.
struct Expansion {
    Int offset = 0;
    Symbol input;                     // the symbol of the normalized pair
    std::vector<ExpansionTerm> terms; // canonical symbol order
};

Expansion expansion(const NormalizedPair& pair);
Expansion expansion(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2);

/// Multisegments labelling the composition factors of the induction product,
/// each of multiplicity one, sorted canonically.
std::vector<Multisegment> composition_factors(const NormalizedPair& pair);
std::vector<Multisegment> composition_factors(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2);

bool is_irreducible(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2);

} // namespace heckelr
