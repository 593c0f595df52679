#pragma once

#include <compare>
#include <span>
#include <vector>

#include "heckelr/error.hpp"

namespace heckelr {

class Symbol;

/// Closed integer interval [start, end] with 1 <= start <= end.
class Segment {
public:
    Segment(Int start, Int end);

    Int start() const { return start_; }
    Int end() const { return end_; }
    Int length() const { return end_ - start_ + 1; }
    bool contains(Int j) const { return start_ <= j && j <= end_; }

    auto operator<=>(const Segment&) const = default;

private:
    Int start_;
    Int end_;
};

/// A multiset of segments, kept sorted by (start, end). Multiplicity is
/// represented by repetition.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }
    /// Total number of cells, i.e. the rank m of the Hecke algebra it labels.
    Int size() const;

    auto operator<=>(const Multisegment&) const = default;

private:
    std::vector<Segment> segments_;
};

Multisegment sum(const Multisegment& lhs, const Multisegment& rhs);

/// Translate every segment by c. Throws DomainError if a start would drop below 1.
Multisegment shift(const Multisegment& m, Int c);

/// 0 for the empty multisegment.
Int max_segment_length(const Multisegment& m);

/// m(lambda1, a1) + m(lambda2, a2), decoding both rows of the symbol.
Multisegment multisegment_of(const Symbol& s);

} // namespace heckelr
