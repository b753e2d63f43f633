#include "frk/mapsearch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frk {

namespace {

std::uint64_t pow_checked(std::size_t base, std::size_t exp,
                          std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > budget / base)
      throw BudgetExceeded("search_maps: candidate-map budget exceeded");
    total *= base;
  }
  if (total > budget)
    throw BudgetExceeded("search_maps: candidate-map budget exceeded");
  return total;
}

// Digits of idx in base `codomain`, most significant first, so ascending idx
// is lexicographic table order.
void decode(std::uint64_t idx, std::size_t domain, std::size_t codomain,
            MapTable& out) {
  for (std::size_t i = domain; i-- > 0;) {
    out[i] = static_cast<std::size_t>(idx % codomain);
    idx /= codomain;
  }
}

}  // namespace

std::vector<MapTable> search_maps_serial(std::size_t domain,
                                         std::size_t codomain,
                                         const MapPredicate& pred,
                                         std::uint64_t budget) {
  const std::uint64_t total = pow_checked(codomain, domain, budget);
  std::vector<MapTable> out;
  MapTable table(domain);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, domain, codomain, table);
    if (pred(table)) out.push_back(table);
  }
  return out;
}

std::vector<MapTable> search_maps(std::size_t domain, std::size_t codomain,
                                  const MapPredicate& pred,
                                  std::uint64_t budget, bool parallel) {
  if (!parallel) return search_maps_serial(domain, codomain, pred, budget);
  const std::uint64_t total = pow_checked(codomain, domain, budget);
  std::vector<char> match(total, 0);
#ifdef _OPENMP
#pragma omp parallel
  {
    MapTable table(domain);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      decode(static_cast<std::uint64_t>(idx), domain, codomain, table);
      match[idx] = pred(table) ? 1 : 0;
    }
  }
#else
  {
    MapTable table(domain);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode(idx, domain, codomain, table);
      match[idx] = pred(table) ? 1 : 0;
    }
  }
#endif
  std::vector<MapTable> out;
  MapTable table(domain);
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (match[idx]) {
      decode(idx, domain, codomain, table);
      out.push_back(table);
    }
  return out;
}

}  // namespace frk
