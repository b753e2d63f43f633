#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "frk/group.hpp"

namespace frk {

/// Finite non-empty subset of an ambient group; elements are kept canonical,
/// deduplicated, and sorted lexicographically by coordinates.
class AdditiveSet {
public:
  AdditiveSet(FgaGroup ambient, std::vector<GroupElement> elements);

  const FgaGroup& ambient() const { return ambient_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elems_[i]; }

  bool contains(const GroupElement& x) const;
  std::optional<std::size_t> index_of(const GroupElement& x) const;
  bool is_normalized() const;  // 0 in the set
  std::size_t zero_index() const;

  bool operator==(const AdditiveSet& rhs) const {
    return ambient_ == rhs.ambient_ && elems_ == rhs.elems_;
  }

private:
  FgaGroup ambient_;
  std::vector<GroupElement> elems_;
};

/// Builds a set over a free-rank-1 ambient from plain integers.
AdditiveSet set_in_z(const std::vector<long>& values);
AdditiveSet set_in(const FgaGroup& g, const std::vector<IntVec>& coords);

AdditiveSet sumset(const AdditiveSet& a, const AdditiveSet& b);

/// All sums e_1 x_1 + ... + e_n x_n with x_i from the i-th set and e_i the
/// declared sign.
AdditiveSet signed_sumset(
    const std::vector<std::pair<int, AdditiveSet>>& terms);

struct DoublingReport {
  Rat sigma;  // |A+A| / |A|, lowest terms
  std::size_t sumset_size = 0;
  std::size_t set_size = 0;
};

DoublingReport doubling(const AdditiveSet& a);

/// One fiber: every k-multiset of element indices sharing a common sum.
struct SumFiber {
  GroupElement sum;
  std::vector<std::vector<std::size_t>> multisets;  // non-decreasing indices
};

struct SumFibers {
  int order = 1;
  std::vector<SumFiber> fibers;  // sorted by sum coordinates
  std::size_t multiset_count() const;
};

SumFibers ksum_fibers(const AdditiveSet& a, int k);

/// Cartesian product embedded in the canonical direct sum of the ambients.
AdditiveSet product_set(const AdditiveSet& a, const AdditiveSet& b);

/// Set union of disjoint same-ambient sets; overlap is an error.
AdditiveSet union_disjoint(const AdditiveSet& a, const AdditiveSet& b);

}  // namespace frk
