#include "heckelr/sweep.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "heckelr/json_io.hpp"

namespace heckelr {

namespace {

// Weakly increasing part lists, each part >= min_part, total <= budget, length <= slots.
void grow_partitions(std::vector<Int>& parts, Int min_part, Int budget, Int slots,
                     std::vector<Partition>& out)
{
    out.push_back(make_partition(parts));
    if (slots == 0)
        return;
    for (Int next = min_part; next <= budget; ++next) {
        parts.push_back(next);
        grow_partitions(parts, next, budget - next, slots - 1, out);
        parts.pop_back();
    }
}

bool normalized_order(const ChargedPartition& a, const ChargedPartition& b)
{
    if (a.charge() != b.charge())
        return a.charge() < b.charge();
    return beta_row(a) < beta_row(b);
}

} // namespace

std::vector<ChargedPartition> charged_partitions(Int max_weight, Int max_charge)
{
    std::vector<ChargedPartition> out;
    for (Int a = 1; a <= max_charge; ++a) {
        std::vector<Partition> parts;
        std::vector<Int> scratch;
        grow_partitions(scratch, 1, max_weight, a, parts);
        for (Partition& p : parts)
            out.emplace_back(std::move(p), a);
    }
    std::sort(out.begin(), out.end(), normalized_order);
    return out;
}

std::vector<NormalizedPair> sweep_pairs(Int max_weight, Int max_charge)
{
    const std::vector<ChargedPartition> all = charged_partitions(max_weight, max_charge);
    std::vector<NormalizedPair> pairs;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j)
            if (all[i].partition().weight() + all[j].partition().weight() <= max_weight)
                pairs.push_back({all[i], all[j]});
    return pairs;
}

std::string batch_record(const NormalizedPair& pair)
{
    const Expansion e = expansion(pair);
    json_io::json record = {
        {"schema_version", json_io::schema_version},
        {"first", json_io::to_json(pair.first)},
        {"second", json_io::to_json(pair.second)},
        {"symbol", json_io::to_json(e.input)},
        {"expansion", json_io::to_json(e)},
    };
    return record.dump();
}

std::vector<std::string> batch_records_serial(std::span<const NormalizedPair> pairs)
{
    std::vector<std::string> out;
    out.reserve(pairs.size());
    for (const NormalizedPair& p : pairs)
        out.push_back(batch_record(p));
    return out;
}

std::vector<std::string> batch_records_parallel(std::span<const NormalizedPair> pairs, int threads)
{
    const auto n = static_cast<std::ptrdiff_t>(pairs.size());
    std::vector<std::string> out(pairs.size());
    std::exception_ptr failure;
    if (threads <= 0)
        threads = omp_get_max_threads();

    #pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = batch_record(pairs[i]);
        } catch (...) {
            #pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace heckelr
