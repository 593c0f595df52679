#include "heckelr/symbols.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace heckelr {

namespace {

std::vector<Int> set_difference(const std::vector<Int>& a, const std::vector<Int>& b)
{
    std::vector<Int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Int> set_intersection(const std::vector<Int>& a, const std::vector<Int>& b)
{
    std::vector<Int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Int> set_union(const std::vector<Int>& a, const std::vector<Int>& b)
{
    std::vector<Int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

BetaRow checked_row(std::vector<Int> entries)
{
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] == entries[i])
            throw IntegrityError("pair swap produced a repeated entry " + std::to_string(entries[i]));
    return BetaRow(std::move(entries));
}

// Calls visit(chosen) for every k-element subset of pool, chosen in increasing order.
template <typename Visit>
void for_each_subset(const std::vector<Int>& pool, std::size_t k, Visit&& visit)
{
    std::vector<Int> chosen;
    chosen.reserve(k);
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        if (chosen.size() == k) {
            visit(chosen);
            return;
        }
        for (std::size_t i = from; i + (k - chosen.size()) <= pool.size(); ++i) {
            chosen.push_back(pool[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
}

} // namespace

Symbol::Symbol(BetaRow top, BetaRow bottom) : top_(std::move(top)), bottom_(std::move(bottom))
{
    if (top_.size() < bottom_.size())
        throw DomainError("symbol top row must be at least as long as the bottom row");
}

Int PairStructure::psi(Int j) const
{
    if (std::binary_search(fixed.begin(), fixed.end(), j))
        return j;
    for (const Pair& p : pairs)
        if (p.source == j)
            return p.target;
    throw DomainError("psi is undefined at " + std::to_string(j));
}

Symbol symbol_of(const ChargedPartition& cp1, const ChargedPartition& cp2)
{
    if (cp1.charge() > cp2.charge())
        throw DomainError("symbol_of requires charge(first) <= charge(second); normalize the inputs first");
    return Symbol(beta_row(cp2), beta_row(cp1));
}

bool is_standard(const Symbol& s)
{
    for (std::size_t k = 0; k < s.bottom().size(); ++k)
        if (s.top()[k] > s.bottom()[k])
            return false;
    return true;
}

PairStructure pair_structure(const Symbol& s)
{
    if (!is_standard(s))
        throw DomainError("pair structure is only defined for standard symbols");

    const std::vector<Int>& top = s.top().entries();
    const std::vector<Int>& bottom = s.bottom().entries();

    PairStructure ps;
    ps.fixed = set_intersection(bottom, top);

    std::vector<bool> taken(top.size(), false);
    for (Int j : ps.fixed)
        taken[std::lower_bound(top.begin(), top.end(), j) - top.begin()] = true;

    std::vector<Int> pending = set_difference(bottom, top);
    // Every target is >= 1, so no level beyond the largest source can assign anything.
    const Int last_level = pending.empty() ? 0 : pending.back();
    for (Int level = 1; level <= last_level && !pending.empty(); ++level) {
        std::vector<Int> still_pending;
        for (Int j : pending) {
            const Int target = j - level;
            auto it = std::lower_bound(top.begin(), top.end(), target);
            if (it != top.end() && *it == target && !taken[it - top.begin()]) {
                taken[it - top.begin()] = true;
                ps.pairs.push_back({j, target});
            } else {
                still_pending.push_back(j);
            }
        }
        pending = std::move(still_pending);
    }
    if (!pending.empty())
        throw IntegrityError("psi left " + std::to_string(pending.size())
                             + " bottom entries unassigned on a standard symbol");
    std::sort(ps.pairs.begin(), ps.pairs.end());
    return ps;
}

Symbol swap_pairs(const Symbol& s, const PairStructure& ps, const std::vector<bool>& selected)
{
    if (selected.size() != ps.pairs.size())
        throw DomainError("swap selection size does not match the number of pairs");
    std::vector<Int> sources, targets;
    for (std::size_t i = 0; i < ps.pairs.size(); ++i) {
        if (selected[i]) {
            sources.push_back(ps.pairs[i].source);
            targets.push_back(ps.pairs[i].target);
        }
    }
    std::sort(sources.begin(), sources.end());
    std::sort(targets.begin(), targets.end());

    // Sources move up, targets move down. Merge instead of set_union so that
    // a collision shows up as a duplicate rather than being absorbed.
    auto move_in = [](const std::vector<Int>& row, const std::vector<Int>& removed,
                      const std::vector<Int>& added) {
        std::vector<Int> kept = set_difference(row, removed);
        if (kept.size() + removed.size() != row.size())
            throw IntegrityError("pair swap removes an entry absent from its row");
        std::vector<Int> merged;
        std::merge(kept.begin(), kept.end(), added.begin(), added.end(), std::back_inserter(merged));
        return checked_row(std::move(merged));
    };
    return Symbol(move_in(s.top().entries(), targets, sources),
                  move_in(s.bottom().entries(), sources, targets));
}

std::vector<Symbol> swap_family(const Symbol& s)
{
    const PairStructure ps = pair_structure(s);
    const std::size_t p = ps.pairs.size();
    if (p >= 63)
        throw DomainError("too many pairs to enumerate the swap family");

    std::vector<Symbol> family;
    family.reserve(std::size_t{1} << p);
    std::vector<bool> selected(p);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
        for (std::size_t i = 0; i < p; ++i)
            selected[i] = (mask >> i) & 1;
        family.push_back(swap_pairs(s, ps, selected));
    }
    std::sort(family.begin(), family.end());
    if (std::adjacent_find(family.begin(), family.end()) != family.end())
        throw IntegrityError("swap family contains a repeated symbol");
    return family;
}

namespace {

// The swap subset is forced: a pair was swapped iff its source now sits in
// sigma's top row. Returns -1 when that subset does not reproduce sigma.
int forced_swap_count(const Symbol& s, const PairStructure& ps, const Symbol& sigma)
{
    if (s.top().size() != sigma.top().size() || s.bottom().size() != sigma.bottom().size())
        return -1;
    std::vector<bool> selected(ps.pairs.size());
    int count = 0;
    for (std::size_t i = 0; i < ps.pairs.size(); ++i) {
        selected[i] = sigma.top().contains(ps.pairs[i].source);
        count += selected[i] ? 1 : 0;
    }
    return swap_pairs(s, ps, selected) == sigma ? count : -1;
}

} // namespace

int swap_count(const Symbol& s, const Symbol& sigma)
{
    const int n = forced_swap_count(s, pair_structure(s), sigma);
    if (n < 0)
        throw DomainError("symbol is not obtained from the standard symbol by swapping pairs");
    return n;
}

std::vector<Ancestor> standard_ancestors(const Symbol& sigma)
{
    const std::vector<Int>& top = sigma.top().entries();
    const std::vector<Int>& bottom = sigma.bottom().entries();
    const std::vector<Int> down_pool = set_difference(top, bottom); // may move to the bottom row
    const std::vector<Int> up_pool = set_difference(bottom, top);   // may move to the top row

    // A candidate S differs from sigma by exchanging `up` (entries of sigma's
    // bottom row that sit in S's top row) with `down`. In S, every entry of
    // `down` is a pair source and every entry of `up` its strictly smaller
    // target, so sorted up[i] < down[i] is necessary.
    std::vector<Ancestor> found;
    const std::size_t max_k = std::min(up_pool.size(), down_pool.size());
    for (std::size_t k = 0; k <= max_k; ++k) {
        for_each_subset(up_pool, k, [&](const std::vector<Int>& up) {
            for_each_subset(down_pool, k, [&](const std::vector<Int>& down) {
                for (std::size_t i = 0; i < k; ++i)
                    if (up[i] >= down[i])
                        return;
                Symbol candidate(set_union(set_difference(top, down), up),
                                 set_union(set_difference(bottom, up), down));
                if (!is_standard(candidate))
                    return;
                const PairStructure ps = pair_structure(candidate);
                const int n = forced_swap_count(candidate, ps, sigma);
                if (n >= 0)
                    found.push_back({std::move(candidate), n});
            });
        });
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace heckelr
