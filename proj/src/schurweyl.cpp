#include "heckelr/schurweyl.hpp"

#include <algorithm>
#include <string>

namespace heckelr {

DrinfeldData::DrinfeldData(Int rank) : rank_(rank)
{
    if (rank_ < 2)
        throw DomainError("rank N must be at least 2, got " + std::to_string(rank_));
    roots_.resize(static_cast<std::size_t>(rank_ - 1));
}

const std::vector<Int>& DrinfeldData::roots(Int k) const
{
    if (k < 1 || k >= rank_)
        throw DomainError("Drinfeld polynomial index " + std::to_string(k) + " out of range");
    return roots_[static_cast<std::size_t>(k - 1)];
}

void DrinfeldData::add_root(Int k, Int exponent)
{
    if (k < 1 || k >= rank_)
        throw DomainError("Drinfeld polynomial index " + std::to_string(k) + " out of range");
    auto& r = roots_[static_cast<std::size_t>(k - 1)];
    r.insert(std::upper_bound(r.begin(), r.end(), exponent), exponent);
}

Int DrinfeldData::weighted_degree() const
{
    Int total = 0;
    for (std::size_t i = 0; i < roots_.size(); ++i)
        total += static_cast<Int>(i + 1) * static_cast<Int>(roots_[i].size());
    return total;
}

SegmentRoot segment_root(const Segment& s)
{
    return {s.length(), s.start() + s.end()};
}

DrinfeldResult drinfeld(const Multisegment& m, Int rank)
{
    if (rank < 2)
        throw DomainError("rank N must be at least 2, got " + std::to_string(rank));
    const Int longest = max_segment_length(m);
    if (longest > rank - 1)
        return ZeroModule{longest};
    DrinfeldData d(rank);
    for (const Segment& s : m.segments()) {
        const SegmentRoot r = segment_root(s);
        d.add_root(r.degree, r.exponent);
    }
    return d;
}

Multisegment multisegment_of(const DrinfeldData& d)
{
    std::vector<Segment> segments;
    for (Int k = 1; k < d.rank(); ++k) {
        for (Int e : d.roots(k)) {
            if ((e - k + 1) % 2 != 0)
                throw DomainError("root exponent parity does not match any segment");
            const Int start = (e - k + 1) / 2;
            segments.emplace_back(start, start + k - 1);
        }
    }
    return Multisegment(std::move(segments));
}

std::vector<TensorFactor> tensor_factors(const EvaluationModuleSpec& e1, const EvaluationModuleSpec& e2, Int rank)
{
    const NormalizedPair pair = normalize_inputs(e1, e2);
    for (const ChargedPartition* cp : {&pair.first, &pair.second}) {
        if (std::holds_alternative<ZeroModule>(drinfeld(multisegment_of(*cp), rank)))
            throw DomainError("an input evaluation module vanishes at N = " + std::to_string(rank)
                              + " (its longest segment exceeds N - 1)");
    }
    std::vector<TensorFactor> out;
    for (Multisegment& m : composition_factors(pair)) {
        DrinfeldResult r = drinfeld(m, rank);
        if (auto* d = std::get_if<DrinfeldData>(&r))
            out.push_back({std::move(m), std::move(*d)});
    }
    return out;
}

} // namespace heckelr
