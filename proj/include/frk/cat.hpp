#pragma once

#include <functional>

#include "frk/freiman.hpp"
#include "frk/mapsearch.hpp"

namespace frk {

enum class ConeKind { limit, colimit };

/// Raised by a mediator builder when no mediating morphism exists for the
/// given competitor (the defining formula escapes the competitor's set or is
/// inconsistent on an equivalence class).
struct MediatorUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A (co)limit construction: the apex object, its legs, and a builder that
/// turns a competing (co)cone into the mediating morphism.
struct ConeResult {
  ConeKind kind;
  int order;
  AdditiveSet apex;
  std::vector<FreimanMap> legs;
  // limit:   competitor legs D -> X_i, mediator D -> apex
  // colimit: competitor legs X_i -> D, mediator apex -> D
  std::function<FreimanMap(const std::vector<FreimanMap>&)> mediator;
};

/// Carrier bookkeeping for pushouts and coequalizers: the equivalence classes
/// on the underlying finite set and their images in the ambient quotient.
struct QuotientObject {
  std::vector<std::vector<std::size_t>> classes;
  QuotientResult ambient_quotient;
  std::vector<GroupElement> class_images;  // aligned with classes
  // True when two distinct equivalence classes share one quotient-group
  // image; the constructed set then keeps a single element.
  bool classes_collapsed = false;
};

ConeResult product(const AdditiveSet& a, const AdditiveSet& b, int k);

/// Coproduct in the normalized category; a and b must contain 0.
ConeResult coproduct0(const AdditiveSet& a, const AdditiveSet& b, int k);

/// f : A -> C, g : B -> C, both 0-preserving with a common target.
ConeResult pullback0(const FreimanMap& f, const FreimanMap& g);

struct PushoutResult {
  ConeResult cone;
  QuotientObject object;
};

/// f : C -> A, g : C -> B, both 0-preserving with a common source.
PushoutResult pushout0(const FreimanMap& f, const FreimanMap& g);

/// Parallel 0-preserving f, g : A -> B.
ConeResult equalizer0(const FreimanMap& f, const FreimanMap& g);

struct CoequalizerResult {
  ConeResult cone;
  QuotientObject object;
};

CoequalizerResult coequalizer0(const FreimanMap& f, const FreimanMap& g);

/// ({0}, Z) — both initial and terminal in the normalized category.
AdditiveSet zero_object(const FgaGroup& z);
FreimanMap unique_to_terminal(const AdditiveSet& a, const FgaGroup& z, int k);
FreimanMap unique_from_initial(const FgaGroup& z, const AdditiveSet& b, int k);
/// All maps out of a singleton (weak initial object of the full category).
std::vector<FreimanMap> maps_from_singleton(const AdditiveSet& single,
                                            const AdditiveSet& b, int k);

inline constexpr std::uint64_t kDefaultVerifyBudget = 1'000'000;

/// Exhaustively checks that exactly one k-homomorphism commutes with the
/// competitor's legs and that it equals the construction's mediator.
bool verify_universal_property(const ConeResult& cone,
                               const std::vector<FreimanMap>& competitor,
                               int k, bool preserve_zero = true,
                               std::uint64_t budget = kDefaultVerifyBudget,
                               bool parallel = true);

}  // namespace frk
