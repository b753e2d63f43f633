#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "frk/intmat.hpp"

namespace frk {

/// Finitely generated abelian group in invariant-factor canonical form:
/// Z^free_rank + Z/d_1 + ... + Z/d_m with d_i >= 2 and d_1 | d_2 | ... | d_m.
/// Element coordinates list the free part first, then the torsion part.
struct FgaGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  FgaGroup() = default;
  FgaGroup(std::size_t rank, std::vector<Int> tors);

  static FgaGroup trivial() { return FgaGroup(0, {}); }
  static FgaGroup free(std::size_t rank) { return FgaGroup(rank, {}); }
  static FgaGroup cyclic(const Int& n) { return FgaGroup(0, {n}); }

  std::size_t dim() const { return free_rank + torsion.size(); }
  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return dim() == 0; }
  Int order() const;  // finite groups only

  bool operator==(const FgaGroup&) const = default;
  std::string to_string() const;
};

class GroupElement {
public:
  GroupElement(FgaGroup group, IntVec coords);

  const FgaGroup& group() const { return group_; }
  const IntVec& coords() const { return coords_; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-() const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement scaled(const Int& n) const;

  // Comparing elements of distinct groups is an error, never a coercion.
  bool operator==(const GroupElement& rhs) const;
  bool operator!=(const GroupElement& rhs) const { return !(*this == rhs); }

private:
  FgaGroup group_;
  IntVec coords_;
};

GroupElement zero_of(const FgaGroup& g);

/// Strict lexicographic order on coordinates (same-group elements).
bool coord_less(const GroupElement& a, const GroupElement& b);

/// Homomorphism given by generator images: column j of `matrix` is the image
/// of the j-th generator of `source`, in `target` coordinates.
class GroupHom {
public:
  GroupHom(FgaGroup source, FgaGroup target, IntMatrix matrix);

  static GroupHom identity(const FgaGroup& g);
  static GroupHom zero(const FgaGroup& source, const FgaGroup& target);

  const FgaGroup& source() const { return source_; }
  const FgaGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement apply(const GroupElement& x) const;
  GroupHom compose(const GroupHom& inner) const;  // this after inner

private:
  FgaGroup source_;
  FgaGroup target_;
  IntMatrix matrix_;
};

/// True iff every torsion relation of the source maps to zero.
bool hom_is_well_defined(const GroupHom& h);

struct DirectSum {
  FgaGroup group;  // canonical form of g + h
  GroupHom inj1, inj2;
  GroupHom proj1, proj2;
};

DirectSum direct_sum(const FgaGroup& g, const FgaGroup& h);

struct QuotientResult {
  FgaGroup quotient;
  GroupHom projection;  // g -> quotient; kernel = subgroup generated by gens
  // Columns lift quotient generators back to g coordinates; not a hom in
  // general, used to pick coset representatives.
  IntMatrix section;
};

QuotientResult quotient(const FgaGroup& g,
                        const std::vector<GroupElement>& gens);

bool subgroup_generated_equals(const FgaGroup& g,
                               const std::vector<GroupElement>& gens);

/// Every element of a finite group, in lexicographic coordinate order.
std::vector<GroupElement> enumerate_elements(const FgaGroup& g);

}  // namespace frk
