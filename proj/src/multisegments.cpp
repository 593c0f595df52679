#include "heckelr/multisegments.hpp"

#include <algorithm>
#include <string>

#include "heckelr/partitions.hpp"
#include "heckelr/symbols.hpp"

namespace heckelr {

Segment::Segment(Int start, Int end) : start_(start), end_(end)
{
    if (start_ < 1 || end_ < start_)
        throw DomainError("invalid segment [" + std::to_string(start_) + "," + std::to_string(end_) + "]");
}

Multisegment::Multisegment(std::vector<Segment> segments) : segments_(std::move(segments))
{
    std::sort(segments_.begin(), segments_.end());
}

Int Multisegment::size() const
{
    Int total = 0;
    for (const Segment& s : segments_)
        total += s.length();
    return total;
}

Multisegment sum(const Multisegment& lhs, const Multisegment& rhs)
{
    std::vector<Segment> merged;
    merged.reserve(lhs.segments().size() + rhs.segments().size());
    std::merge(lhs.segments().begin(), lhs.segments().end(),
               rhs.segments().begin(), rhs.segments().end(), std::back_inserter(merged));
    return Multisegment(std::move(merged));
}

Multisegment shift(const Multisegment& m, Int c)
{
    std::vector<Segment> moved;
    moved.reserve(m.segments().size());
    for (const Segment& s : m.segments()) {
        if (s.start() + c < 1)
            throw DomainError("shift by " + std::to_string(c) + " moves a segment start below 1");
        moved.emplace_back(s.start() + c, s.end() + c);
    }
    return Multisegment(std::move(moved));
}

Int max_segment_length(const Multisegment& m)
{
    Int longest = 0;
    for (const Segment& s : m.segments())
        longest = std::max(longest, s.length());
    return longest;
}

Multisegment multisegment_of(const Symbol& s)
{
    auto row_multisegment = [](const BetaRow& row) {
        return row.size() == 0 ? Multisegment{} : multisegment_of(from_beta(row));
    };
    return sum(row_multisegment(s.bottom()), row_multisegment(s.top()));
}

} // namespace heckelr
