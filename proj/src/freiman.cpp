#include "frk/freiman.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace frk {

FreimanMap::FreimanMap(AdditiveSet source, AdditiveSet target,
                       std::vector<std::size_t> table, int order)
    : source_(std::move(source)),
      target_(std::move(target)),
      table_(std::move(table)),
      order_(order) {
  if (order_ < 1) throw std::invalid_argument("FreimanMap: order must be >= 1");
  if (table_.size() != source_.size())
    throw std::invalid_argument("FreimanMap: table must cover the source");
  for (std::size_t t : table_)
    if (t >= target_.size())
      throw std::invalid_argument("FreimanMap: image index out of range");
}

FreimanMap FreimanMap::identity(const AdditiveSet& a, int order) {
  std::vector<std::size_t> table(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) table[i] = i;
  return FreimanMap(a, a, std::move(table), order);
}

FreimanMap FreimanMap::constant(const AdditiveSet& source,
                                const AdditiveSet& target,
                                std::size_t target_index, int order) {
  return FreimanMap(source, target,
                    std::vector<std::size_t>(source.size(), target_index),
                    order);
}

FreimanMap FreimanMap::from_pairs(
    const AdditiveSet& source, const AdditiveSet& target,
    const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
    int order) {
  std::vector<std::size_t> table(source.size(), source.size());
  std::size_t assigned = 0;
  for (const auto& [s, t] : pairs) {
    auto si = source.index_of(s);
    auto ti = target.index_of(t);
    if (!si || !ti)
      throw std::invalid_argument("FreimanMap: pair element not in set");
    if (table[*si] != source.size())
      throw std::invalid_argument("FreimanMap: duplicate source assignment");
    table[*si] = *ti;
    ++assigned;
  }
  if (assigned != source.size())
    throw std::invalid_argument("FreimanMap: table is not total");
  return FreimanMap(source, target, std::move(table), order);
}

FreimanMap FreimanMap::restrict_hom(const GroupHom& h,
                                    const AdditiveSet& source,
                                    const AdditiveSet& target, int order) {
  std::vector<std::size_t> table;
  for (const GroupElement& x : source.elements()) {
    auto ti = target.index_of(h.apply(x));
    if (!ti)
      throw std::invalid_argument("restrict_hom: image escapes the target set");
    table.push_back(*ti);
  }
  return FreimanMap(source, target, std::move(table), order);
}

GroupElement FreimanMap::apply(const GroupElement& x) const {
  auto i = source_.index_of(x);
  if (!i) throw std::invalid_argument("FreimanMap: element not in source set");
  return target_[table_[*i]];
}

bool FreimanMap::is_injective() const {
  std::vector<bool> seen(target_.size(), false);
  for (std::size_t t : table_) {
    if (seen[t]) return false;
    seen[t] = true;
  }
  return true;
}

bool FreimanMap::is_surjective() const {
  std::vector<bool> seen(target_.size(), false);
  for (std::size_t t : table_) seen[t] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool FreimanMap::preserves_zero() const {
  if (!source_.is_normalized() || !target_.is_normalized()) return false;
  return table_[source_.zero_index()] == target_.zero_index();
}

namespace {

GroupElement image_sum(const FreimanMap& f,
                       const std::vector<std::size_t>& multiset) {
  GroupElement s = f.target()[f.apply_index(multiset[0])];
  for (std::size_t i = 1; i < multiset.size(); ++i)
    s = s + f.target()[f.apply_index(multiset[i])];
  return s;
}

}  // namespace

std::optional<HomViolation> hom_violation(const FreimanMap& f) {
  SumFibers fibers = ksum_fibers(f.source(), f.order());
  for (const SumFiber& fiber : fibers.fibers) {
    if (fiber.multisets.size() < 2) continue;
    GroupElement base = image_sum(f, fiber.multisets[0]);
    for (std::size_t j = 1; j < fiber.multisets.size(); ++j) {
      GroupElement other = image_sum(f, fiber.multisets[j]);
      if (other != base)
        return HomViolation{fiber.multisets[0], fiber.multisets[j], fiber.sum,
                            {base, other}};
    }
  }
  return std::nullopt;
}

bool is_freiman_hom(const FreimanMap& f) { return !hom_violation(f); }

std::optional<FreimanMap> try_inverse(const FreimanMap& f) {
  if (f.source().size() != f.target().size() || !f.is_injective())
    return std::nullopt;
  std::vector<std::size_t> inv(f.target().size());
  for (std::size_t i = 0; i < f.table().size(); ++i) inv[f.table()[i]] = i;
  return FreimanMap(f.target(), f.source(), std::move(inv), f.order());
}

bool is_freiman_iso(const FreimanMap& f) {
  auto inv = try_inverse(f);
  return inv && is_freiman_hom(f) && is_freiman_hom(*inv);
}

bool is_mono(const FreimanMap& f) { return f.is_injective(); }
bool is_epi(const FreimanMap& f) { return f.is_surjective(); }

FreimanMap compose(const FreimanMap& g, const FreimanMap& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose: boundary mismatch");
  if (f.order() != g.order())
    throw std::invalid_argument("compose: order mismatch");
  std::vector<std::size_t> table(f.table().size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = g.table()[f.table()[i]];
  return FreimanMap(f.source(), g.target(), std::move(table), f.order());
}

namespace {

// Fiber constraints indexed by the largest source element they mention, so a
// partial assignment is checked as soon as it could fail.
struct HomSearch {
  const AdditiveSet& a;
  const AdditiveSet& b;
  SumFibers fibers;
  // (fiber id, multiset) pairs keyed by max source index.
  std::vector<std::vector<std::pair<std::size_t, const std::vector<std::size_t>*>>>
      checks_at;
  std::vector<std::optional<IntVec>> fiber_sum;  // committed image sums
  std::vector<std::size_t> table;

  HomSearch(const AdditiveSet& a_, const AdditiveSet& b_, int k)
      : a(a_), b(b_), fibers(ksum_fibers(a_, k)), checks_at(a_.size()),
        fiber_sum(fibers.fibers.size()), table(a_.size()) {
    for (std::size_t fi = 0; fi < fibers.fibers.size(); ++fi)
      for (const auto& ms : fibers.fibers[fi].multisets)
        checks_at[*std::max_element(ms.begin(), ms.end())].push_back(
            {fi, &ms});
  }

  IntVec image_sum(const std::vector<std::size_t>& ms) const {
    GroupElement s = b[table[ms[0]]];
    for (std::size_t i = 1; i < ms.size(); ++i) s = s + b[table[ms[i]]];
    return s.coords();
  }
};

}  // namespace

std::vector<FreimanMap> enumerate_homs(const AdditiveSet& a,
                                       const AdditiveSet& b, int k,
                                       bool preserve_zero,
                                       std::uint64_t budget) {
  double total = std::pow(static_cast<double>(b.size()),
                          static_cast<double>(a.size()));
  if (total > static_cast<double>(budget))
    throw BudgetExceeded("enumerate_homs: homset search budget exceeded");

  HomSearch search(a, b, k);
  std::optional<std::size_t> zero_pos, zero_img;
  if (preserve_zero) {
    if (!a.is_normalized() || !b.is_normalized())
      throw std::invalid_argument(
          "enumerate_homs: preserve_zero requires normalized sets");
    zero_pos = a.zero_index();
    zero_img = b.zero_index();
  }

  // Depth-first over source positions in sorted order; the zero constraint
  // just pins one position.
  std::vector<FreimanMap> out;
  std::vector<std::size_t>& table = search.table;
  std::vector<std::vector<std::size_t>> committed_stack(a.size() + 1);

  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == a.size()) {
      out.push_back(FreimanMap(a, b, table, k));
      return;
    }
    std::size_t lo = 0, hi = b.size();
    if (zero_pos && pos == *zero_pos) {
      lo = *zero_img;
      hi = *zero_img + 1;
    }
    for (std::size_t t = lo; t < hi; ++t) {
      table[pos] = t;
      auto& committed = committed_stack[pos];
      committed.clear();
      bool ok = true;
      for (const auto& [fi, ms] : search.checks_at[pos]) {
        IntVec s = search.image_sum(*ms);
        if (search.fiber_sum[fi]) {
          if (*search.fiber_sum[fi] != s) {
            ok = false;
            break;
          }
        } else {
          search.fiber_sum[fi] = std::move(s);
          committed.push_back(fi);
        }
      }
      if (ok) dfs(pos + 1);
      for (std::size_t fi : committed) search.fiber_sum[fi].reset();
    }
  };
  dfs(0);
  return out;
}

}  // namespace frk
