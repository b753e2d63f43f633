#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "frk/freiman.hpp"

namespace frk {

using MapTable = std::vector<std::size_t>;
using MapPredicate = std::function<bool(const MapTable&)>;

/// Every table t : [0, domain) -> [0, codomain) with pred(t), in
/// lexicographic order. `pred` must be pure; the parallel kernel evaluates it
/// from multiple threads and merges matches deterministically.
std::vector<MapTable> search_maps(std::size_t domain, std::size_t codomain,
                                  const MapPredicate& pred,
                                  std::uint64_t budget, bool parallel);

/// Serial reference used by tests and the benchmark.
std::vector<MapTable> search_maps_serial(std::size_t domain,
                                         std::size_t codomain,
                                         const MapPredicate& pred,
                                         std::uint64_t budget);

}  // namespace frk
