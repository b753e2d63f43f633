#include "frk/addset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace frk {

AdditiveSet::AdditiveSet(FgaGroup ambient, std::vector<GroupElement> elements)
    : ambient_(std::move(ambient)), elems_(std::move(elements)) {
  if (elems_.empty())
    throw std::invalid_argument("AdditiveSet: must be non-empty");
  for (const GroupElement& e : elems_)
    if (e.group() != ambient_)
      throw std::invalid_argument("AdditiveSet: element outside ambient group");
  std::sort(elems_.begin(), elems_.end(), coord_less);
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool AdditiveSet::contains(const GroupElement& x) const {
  return index_of(x).has_value();
}

std::optional<std::size_t> AdditiveSet::index_of(const GroupElement& x) const {
  if (x.group() != ambient_) return std::nullopt;
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x, coord_less);
  if (it != elems_.end() && *it == x)
    return static_cast<std::size_t>(it - elems_.begin());
  return std::nullopt;
}

bool AdditiveSet::is_normalized() const {
  return contains(zero_of(ambient_));
}

std::size_t AdditiveSet::zero_index() const {
  auto idx = index_of(zero_of(ambient_));
  if (!idx) throw std::logic_error("AdditiveSet: set is not normalized");
  return *idx;
}

AdditiveSet set_in_z(const std::vector<long>& values) {
  FgaGroup z = FgaGroup::free(1);
  std::vector<GroupElement> elems;
  for (long v : values) elems.push_back(GroupElement(z, {Int(v)}));
  return AdditiveSet(z, std::move(elems));
}

AdditiveSet set_in(const FgaGroup& g, const std::vector<IntVec>& coords) {
  std::vector<GroupElement> elems;
  for (const IntVec& c : coords) elems.push_back(GroupElement(g, c));
  return AdditiveSet(g, std::move(elems));
}

AdditiveSet sumset(const AdditiveSet& a, const AdditiveSet& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("sumset: ambient group mismatch");
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const GroupElement& x : a.elements())
    for (const GroupElement& y : b.elements()) out.push_back(x + y);
  return AdditiveSet(a.ambient(), std::move(out));
}

AdditiveSet signed_sumset(
    const std::vector<std::pair<int, AdditiveSet>>& terms) {
  if (terms.empty())
    throw std::invalid_argument("signed_sumset: empty term list");
  const FgaGroup& g = terms.front().second.ambient();
  std::vector<GroupElement> acc = {zero_of(g)};
  for (const auto& [sign, set] : terms) {
    if (set.ambient() != g)
      throw std::invalid_argument("signed_sumset: ambient group mismatch");
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("signed_sumset: sign must be +-1");
    std::vector<GroupElement> next;
    next.reserve(acc.size() * set.size());
    for (const GroupElement& x : acc)
      for (const GroupElement& y : set.elements())
        next.push_back(sign > 0 ? x + y : x - y);
    acc = AdditiveSet(g, std::move(next)).elements();
  }
  return AdditiveSet(g, std::move(acc));
}

DoublingReport doubling(const AdditiveSet& a) {
  AdditiveSet twice = sumset(a, a);
  Rat sigma(Int(twice.size()), Int(a.size()));
  sigma.canonicalize();
  return {sigma, twice.size(), a.size()};
}

std::size_t SumFibers::multiset_count() const {
  std::size_t n = 0;
  for (const SumFiber& f : fibers) n += f.multisets.size();
  return n;
}

SumFibers ksum_fibers(const AdditiveSet& a, int k) {
  if (k < 1) throw std::invalid_argument("ksum_fibers: order must be >= 1");
  std::map<IntVec, SumFiber> by_sum;
  std::vector<std::size_t> pick(k, 0);
  const std::size_t n = a.size();
  for (;;) {
    GroupElement s = a[pick[0]];
    for (int i = 1; i < k; ++i) s = s + a[pick[i]];
    auto [it, fresh] = by_sum.try_emplace(s.coords(), SumFiber{s, {}});
    it->second.multisets.push_back(pick);
    // Next non-decreasing index vector.
    int i = k;
    while (i > 0) {
      --i;
      if (pick[i] + 1 < n) {
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[i];
        break;
      }
      if (i == 0) {
        SumFibers out{k, {}};
        for (auto& [key, fiber] : by_sum)
          out.fibers.push_back(std::move(fiber));
        return out;
      }
    }
  }
}

AdditiveSet product_set(const AdditiveSet& a, const AdditiveSet& b) {
  DirectSum ds = direct_sum(a.ambient(), b.ambient());
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const GroupElement& x : a.elements())
    for (const GroupElement& y : b.elements())
      out.push_back(ds.inj1.apply(x) + ds.inj2.apply(y));
  return AdditiveSet(ds.group, std::move(out));
}

AdditiveSet union_disjoint(const AdditiveSet& a, const AdditiveSet& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("union_disjoint: ambient group mismatch");
  for (const GroupElement& x : a.elements())
    if (b.contains(x))
      throw std::invalid_argument("union_disjoint: sets are not disjoint");
  std::vector<GroupElement> out = a.elements();
  out.insert(out.end(), b.elements().begin(), b.elements().end());
  return AdditiveSet(a.ambient(), std::move(out));
}

}  // namespace frk
