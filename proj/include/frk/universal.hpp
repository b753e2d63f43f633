#pragma once

#include "frk/freiman.hpp"

namespace frk {

/// The universal ambient group of (A, Z) at order k: the free abelian group
/// on A modulo the relations forced by coinciding k-fold sums, together with
/// the embedded copy A' and the unit A -> A'.
struct UniversalResult {
  AdditiveSet original;
  AdditiveSet embedded;            // A' inside Z'
  FreimanMap unit;                 // a |-> class of the basis vector e_a
  IntMatrix relation_matrix;       // rows span the relation lattice in Z^|A|
  QuotientResult cover_quotient;   // Z^|A| -> Z'
};

UniversalResult build_universal(const AdditiveSet& a, int k);

/// Raised when a claimed k-homomorphism sends some relation row to a nonzero
/// element, so no group-homomorphic extension exists.
struct ExtendHomError : std::runtime_error {
  ExtendHomError(std::string msg, IntVec row, GroupElement image)
      : std::runtime_error(std::move(msg)),
        relation_row(std::move(row)),
        image(std::move(image)) {}
  IntVec relation_row;
  GroupElement image;
};

/// The unique group homomorphism h : Z' -> W with h(unit(a)) = g(a), for a
/// k-homomorphism g out of the original set.
GroupHom extend_hom(const UniversalResult& u, const FreimanMap& g);

/// theta(f) = f o unit : precompose a map out of A' with the unit.
FreimanMap adjunction_theta(const UniversalResult& u, const FreimanMap& f);

/// eta(g) : A' -> B with eta(g)(unit(a)) = g(a).
FreimanMap adjunction_eta(const UniversalResult& u, const FreimanMap& g);

}  // namespace frk
