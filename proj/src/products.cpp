#include "heckelr/products.hpp"

#include <algorithm>
#include <string>

namespace heckelr {

NormalizedPair normalize_inputs(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2)
{
    auto charged = [](const EvaluationModuleSpec& e, int which) {
        try {
            return ChargedPartition(e.partition, e.exponent);
        } catch (const DomainError& err) {
            throw DomainError("evaluation module " + std::to_string(which) + ": " + err.what()
                              + " (shift both spectral parameters by a common power of t first)");
        }
    };
    ChargedPartition cp1 = charged(e1, 1);
    ChargedPartition cp2 = charged(e2, 2);
    const bool swap = cp1.charge() > cp2.charge()
                      || (cp1.charge() == cp2.charge() && beta_row(cp2) < beta_row(cp1));
    if (swap)
        return {std::move(cp2), std::move(cp1)};
    return {std::move(cp1), std::move(cp2)};
}

Expansion expansion(const NormalizedPair& pair)
{
    Expansion result{-content_count(pair.second, pair.first.charge()),
                     symbol_of(pair.first, pair.second), {}};
    for (Ancestor& a : standard_ancestors(result.input)) {
        Multisegment m = multisegment_of(a.symbol);
        result.terms.push_back({std::move(a.symbol), a.swaps, std::move(m)});
    }
    if (result.terms.empty())
        throw IntegrityError("the input symbol has no standard ancestor");

    std::vector<Multisegment> labels;
    for (const ExpansionTerm& t : result.terms)
        labels.push_back(t.factor);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw IntegrityError("two expansion terms share a multisegment");
    return result;
}

Expansion expansion(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2)
{
    return expansion(normalize_inputs(e1, e2));
}

std::vector<Multisegment> composition_factors(const NormalizedPair& pair)
{
    std::vector<Multisegment> factors;
    for (ExpansionTerm& t : expansion(pair).terms)
        factors.push_back(std::move(t.factor));
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<Multisegment> composition_factors(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2)
{
    return composition_factors(normalize_inputs(e1, e2));
}

bool is_irreducible(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2)
{
    return composition_factors(e1, e2).size() == 1;
}

} // namespace heckelr
