// Times the OpenMP map-search kernel against the serial reference on a
// brute-force homset filter and checks they agree.

#include <chrono>
#include <cstdio>

#include "frk/addset.hpp"
#include "frk/mapsearch.hpp"

using namespace frk;

namespace {

double seconds(std::chrono::steady_clock::time_point t0,
               std::chrono::steady_clock::time_point t1) {
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
  // k-hom filter from a 7-element AP into Z/8: 8^7 ~ 2M candidate maps.
  AdditiveSet a = set_in_z({0, 1, 2, 3, 4, 5, 6});
  FgaGroup z8 = FgaGroup::cyclic(8);
  AdditiveSet b = set_in(z8, {{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}});
  const int k = 2;
  SumFibers fibers = ksum_fibers(a, k);

  auto pred = [&](const MapTable& t) {
    for (const SumFiber& fiber : fibers.fibers) {
      if (fiber.multisets.size() < 2) continue;
      auto sum_of = [&](const std::vector<std::size_t>& ms) {
        GroupElement s = b[t[ms[0]]];
        for (std::size_t i = 1; i < ms.size(); ++i) s = s + b[t[ms[i]]];
        return s;
      };
      GroupElement base = sum_of(fiber.multisets[0]);
      for (std::size_t j = 1; j < fiber.multisets.size(); ++j)
        if (sum_of(fiber.multisets[j]) != base) return false;
    }
    return true;
  };

  const std::uint64_t budget = 1ull << 32;
  auto t0 = std::chrono::steady_clock::now();
  auto serial = search_maps_serial(a.size(), b.size(), pred, budget);
  auto t1 = std::chrono::steady_clock::now();
  auto parallel = search_maps(a.size(), b.size(), pred, budget, true);
  auto t2 = std::chrono::steady_clock::now();

  std::printf("candidates: %llu\n",
              static_cast<unsigned long long>(1ull << 21));
  std::printf("homs found: serial=%zu parallel=%zu (%s)\n", serial.size(),
              parallel.size(), serial == parallel ? "identical" : "MISMATCH");
  std::printf("serial:   %.3f s\n", seconds(t0, t1));
  std::printf("parallel: %.3f s (speedup %.2fx)\n", seconds(t1, t2),
              seconds(t0, t1) / seconds(t1, t2));
  return serial == parallel ? 0 : 1;
}
