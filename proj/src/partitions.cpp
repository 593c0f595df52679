#include "heckelr/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace heckelr {

Int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition make_partition(std::span<const Int> raw)
{
    Partition p;
    for (Int x : raw) {
        if (x < 0)
            throw DomainError("partition parts must be non-negative, got " + std::to_string(x));
        if (x > 0)
            p.parts_.push_back(x);
    }
    std::sort(p.parts_.begin(), p.parts_.end());
    return p;
}

ChargedPartition::ChargedPartition(Partition partition, Int charge)
    : partition_(std::move(partition)), charge_(charge)
{
    if (charge_ < 1)
        throw DomainError("charge must be positive, got " + std::to_string(charge_));
    if (charge_ < static_cast<Int>(partition_.length()))
        throw DomainError("charge " + std::to_string(charge_) + " is below the partition length "
                          + std::to_string(partition_.length())
                          + "; the spectral exponent a must satisfy a >= l(lambda)");
}

std::vector<Int> ChargedPartition::padded_parts() const
{
    std::vector<Int> padded(static_cast<std::size_t>(charge_) - partition_.length(), 0);
    padded.insert(padded.end(), partition_.parts().begin(), partition_.parts().end());
    return padded;
}

BetaRow::BetaRow(std::vector<Int> entries) : entries_(std::move(entries))
{
    if (!entries_.empty() && entries_.front() < 1)
        throw DomainError("beta row entries must be positive");
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] >= entries_[i])
            throw DomainError("beta row must be strictly increasing");
}

bool BetaRow::contains(Int value) const
{
    return std::binary_search(entries_.begin(), entries_.end(), value);
}

BetaRow beta_row(const ChargedPartition& cp)
{
    std::vector<Int> beta = cp.padded_parts();
    for (std::size_t j = 0; j < beta.size(); ++j)
        beta[j] += static_cast<Int>(j) + 1;
    return BetaRow(std::move(beta));
}

ChargedPartition from_beta(const BetaRow& row)
{
    if (row.size() == 0)
        throw DomainError("an empty beta row has no charged partition");
    std::vector<Int> parts(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        parts[j] = row[j] - static_cast<Int>(j) - 1;
    return ChargedPartition(make_partition(parts), static_cast<Int>(row.size()));
}

Int content_count(const ChargedPartition& cp, Int j)
{
    // Row k (1-based) of the padded diagram covers contents k .. k + lambda_k - 1.
    const std::vector<Int> lambda = cp.padded_parts();
    Int count = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const Int k = static_cast<Int>(i) + 1;
        if (k <= j && j <= k + lambda[i] - 1)
            ++count;
    }
    return count;
}

Multisegment multisegment_of(const ChargedPartition& cp)
{
    const std::vector<Int> lambda = cp.padded_parts();
    std::vector<Segment> rows;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0)
            continue;
        const Int k = static_cast<Int>(i) + 1;
        rows.emplace_back(k, k + lambda[i] - 1);
    }
    return Multisegment(std::move(rows));
}

} // namespace heckelr
