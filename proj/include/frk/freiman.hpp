#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frk/addset.hpp"

namespace frk {

inline constexpr std::uint64_t kDefaultHomBudget = 1'000'000;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Total map between the underlying sets of two additive sets, with a
/// declared order k. table[i] is the target index of source element i.
class FreimanMap {
public:
  FreimanMap(AdditiveSet source, AdditiveSet target,
             std::vector<std::size_t> table, int order);

  static FreimanMap identity(const AdditiveSet& a, int order);
  static FreimanMap constant(const AdditiveSet& source,
                             const AdditiveSet& target,
                             std::size_t target_index, int order);
  static FreimanMap from_pairs(
      const AdditiveSet& source, const AdditiveSet& target,
      const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
      int order);
  /// Restriction of a group homomorphism to a set (image must land in
  /// `target`).
  static FreimanMap restrict_hom(const GroupHom& h, const AdditiveSet& source,
                                 const AdditiveSet& target, int order);

  const AdditiveSet& source() const { return source_; }
  const AdditiveSet& target() const { return target_; }
  const std::vector<std::size_t>& table() const { return table_; }
  int order() const { return order_; }

  std::size_t apply_index(std::size_t i) const { return table_[i]; }
  GroupElement apply(const GroupElement& x) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool preserves_zero() const;

  bool operator==(const FreimanMap& rhs) const {
    return order_ == rhs.order_ && table_ == rhs.table_ &&
           source_ == rhs.source_ && target_ == rhs.target_;
  }

private:
  AdditiveSet source_;
  AdditiveSet target_;
  std::vector<std::size_t> table_;
  int order_;
};

/// Two k-multisets with equal source sums whose image sums differ.
struct HomViolation {
  std::vector<std::size_t> left;   // source indices, non-decreasing
  std::vector<std::size_t> right;
  GroupElement common_sum;
  std::pair<GroupElement, GroupElement> image_sums;
};

/// nullopt when f is a Freiman k-homomorphism; otherwise the first violation
/// in fiber order (lex-first pair inside the fiber).
std::optional<HomViolation> hom_violation(const FreimanMap& f);
bool is_freiman_hom(const FreimanMap& f);

std::optional<FreimanMap> try_inverse(const FreimanMap& f);
bool is_freiman_iso(const FreimanMap& f);

bool is_mono(const FreimanMap& f);
bool is_epi(const FreimanMap& f);

FreimanMap compose(const FreimanMap& g, const FreimanMap& f);

/// All Freiman k-homomorphisms from a to b, in lexicographic table order.
/// Backtracks over source elements with incremental fiber checks; throws
/// BudgetExceeded when |b|^|a| > budget.
std::vector<FreimanMap> enumerate_homs(const AdditiveSet& a,
                                       const AdditiveSet& b, int k,
                                       bool preserve_zero = false,
                                       std::uint64_t budget = kDefaultHomBudget);

}  // namespace frk
