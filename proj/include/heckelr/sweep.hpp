#pragma once

#include <span>
#include <string>
#include <vector>

#include "heckelr/products.hpp"

namespace heckelr {

/// All charged partitions with weight <= max_weight and charge in
/// [1, max_charge], ordered by (charge, beta row).
std::vector<ChargedPartition> charged_partitions(Int max_weight, Int max_charge);

/// Every unordered pair of charged partitions with total weight <=
/// max_weight and charges <= max_charge, each in normalized orientation.
/// Deterministic order.
std::vector<NormalizedPair> sweep_pairs(Int max_weight, Int max_charge);

/// One compact JSON line describing the expansion of a normalized pair.
std::string batch_record(const NormalizedPair& pair);

/// Reference implementation: one record per pair, in input order.
std::vector<std::string> batch_records_serial(std::span<const NormalizedPair> pairs);

/// OpenMP version of batch_records_serial; identical output. threads <= 0
/// uses the OpenMP default.
std::vector<std::string> batch_records_parallel(std::span<const NormalizedPair> pairs, int threads = 0);

} // namespace heckelr
