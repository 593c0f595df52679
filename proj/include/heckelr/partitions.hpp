#pragma once

#include <compare>
#include <span>
#include <vector>

#include "heckelr/error.hpp"
#include "heckelr/multisegments.hpp"

namespace heckelr {

/// A partition stored with its parts in weakly increasing order, zero parts
/// removed.
class Partition {
public:
    Partition() = default;

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    Int weight() const;

    auto operator<=>(const Partition&) const = default;

    friend Partition make_partition(std::span<const Int> raw);

private:
    std::vector<Int> parts_;
};

/// Strips zeros and sorts. Throws DomainError on negative entries.
Partition make_partition(std::span<const Int> raw);

inline Partition make_partition(std::initializer_list<Int> raw)
{
    return make_partition(std::span<const Int>(raw.begin(), raw.size()));
}

/// A partition together with a charge a >= max(1, length). Encodes the
/// evaluation module S(lambda; t^a).
class ChargedPartition {
public:
    ChargedPartition(Partition partition, Int charge);

    const Partition& partition() const { return partition_; }
    Int charge() const { return charge_; }

    /// The parts left-padded with zeros to length charge().
    std::vector<Int> padded_parts() const;

    auto operator<=>(const ChargedPartition&) const = default;

private:
    Partition partition_;
    Int charge_;
};

/// Strictly increasing sequence of positive integers.
class BetaRow {
public:
    BetaRow() = default;
    explicit BetaRow(std::vector<Int> entries);

    const std::vector<Int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    Int operator[](std::size_t i) const { return entries_[i]; }
    bool contains(Int value) const;

    auto operator<=>(const BetaRow&) const = default;

private:
    std::vector<Int> entries_;
};

/// beta_j = j + lambda_j (1-based) with lambda padded to length a.
BetaRow beta_row(const ChargedPartition& cp);

/// Inverse of beta_row: lambda_j = beta_j - j, charge = row length.
/// An empty row has no valid charge and is rejected.
ChargedPartition from_beta(const BetaRow& row);

/// Number of cells of the charged Young diagram holding the content j.
Int content_count(const ChargedPartition& cp, Int j);

/// Row multisegment: sum over k of [k, k + lambda_k - 1], empty rows dropped.
Multisegment multisegment_of(const ChargedPartition& cp);

} // namespace heckelr
