#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nearprim/automorphism.hpp"
#include "nearprim/group.hpp"

namespace nearprim {

/// The data (group, automorphism group, sandwich function). X is never
/// stored: it is the fixed-point set of phi.
struct SandwichScheme {
  FiniteGroup gamma;
  AutomorphismSet s;
  std::vector<Element> phi;

  ElementSet x() const;
  /// X without 0.
  ElementSet x1() const;

  friend bool operator==(const SandwichScheme&, const SandwichScheme&) = default;
};

struct SchemeCheck {
  std::string name;
  bool passed = true;
  std::optional<Element> gamma;
  std::optional<std::size_t> s;  // index into scheme.s
  std::string detail;
};

/// One entry per invariant, in a fixed order:
///   phi-shape, phi-zero, phi-range, s-automorphisms, s-invariant-x,
///   equivariance, x1-nonempty, fixedpointfree-x1.
/// The first counterexample of each failed check is recorded, scanning
/// gamma first and then s in index order.
struct ValidationReport {
  std::vector<SchemeCheck> checks;

  bool ok() const;
  const SchemeCheck& at(std::string_view name) const;
  const SchemeCheck* first_failure() const;
};

ValidationReport validate_scheme(const SandwichScheme& scheme);
/// Throws invalid_argument naming the first failed invariant.
void require_valid(const SandwichScheme& scheme);

/// Gamma_0, the zero fiber of phi.
ElementSet gamma0(const SandwichScheme& scheme);

/// Number of S-orbits on X1.
std::size_t x1_orbit_count(const SandwichScheme& scheme);

/// |Gamma|^k where k = x1_orbit_count, or nullopt if that exceeds `cap`.
std::optional<std::size_t> centralizer_size(const SandwichScheme& scheme, std::size_t cap);

/// Input to the phi construction: an S-invariant G on which S acts without
/// fixed points, one representative per S-orbit of G, the nonempty index set
/// J of orbits that form X1, and f sending each remaining representative
/// into X1.
struct PhiRecipe {
  FiniteGroup gamma;
  AutomorphismSet s;
  ElementSet g;
  std::vector<Element> reps;
  std::vector<std::size_t> j;
  std::vector<std::pair<Element, Element>> f;

  friend bool operator==(const PhiRecipe&, const PhiRecipe&) = default;
};

/// Throws invalid_recipe when the recipe violates its invariants.
SandwichScheme build_phi(const PhiRecipe& recipe);

/// Inverse of build_phi, canonicalized: G = Gamma minus Gamma_0, reps are the
/// orbit minima in orbit order, f(e_k) = phi(e_k).
PhiRecipe decompose_phi(const SandwichScheme& scheme);

/// Calls `visit` once for every sandwich function phi over (gamma, s) that
/// yields a valid scheme with |Gamma|^k <= max_elements, in a deterministic
/// order. Each phi is produced from its canonical recipe and appears once.
/// Returns the number of schemes visited.
std::size_t for_each_canonical_scheme(const FiniteGroup& gamma, const AutomorphismSet& s,
                                      std::size_t max_elements,
                                      const std::function<void(const SandwichScheme&)>& visit);

}  // namespace nearprim
