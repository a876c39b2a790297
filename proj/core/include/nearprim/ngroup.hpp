#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nearprim/automorphism.hpp"
#include "nearprim/group.hpp"
#include "nearprim/limits.hpp"
#include "nearprim/nearring.hpp"
#include "nearprim/sandwich.hpp"

namespace nearprim {

/// A near-ring acting on a group: at(m, g) = m . g. Row 0 belongs to the
/// zero element of the near-ring.
class NGroupAction {
 public:
  /// Raw action table, one row per near-ring element. Validates the shape
  /// only; no near-ring is attached, so the N-group laws cannot be checked.
  NGroupAction(FiniteGroup carrier, const std::vector<std::vector<Element>>& rows);
  NGroupAction(std::shared_ptr<const NearRing> nearring, FiniteGroup carrier,
               std::vector<Element> table);

  const FiniteGroup& carrier() const noexcept { return carrier_; }
  /// Number of near-ring elements.
  std::size_t size() const noexcept { return size_; }
  Element at(std::size_t m, Element g) const { return act_[m * carrier_.order() + g]; }
  std::span<const Element> row(std::size_t m) const {
    return {act_.data() + m * carrier_.order(), carrier_.order()};
  }
  /// The near-ring acting, or null for a raw table.
  const NearRing* nearring() const noexcept { return nearring_.get(); }
  const std::shared_ptr<const NearRing>& shared_nearring() const noexcept { return nearring_; }

 private:
  FiniteGroup carrier_;
  std::size_t size_ = 0;
  std::vector<Element> act_;
  std::shared_ptr<const NearRing> nearring_;
};

/// m . g = m(phi(g)). Requires n to be built from `scheme`; the N-group laws
/// are re-verified and a violation raises internal_inconsistency.
NGroupAction action_from_scheme(std::shared_ptr<const NearRing> n, const SandwichScheme& scheme,
                                const Limits& limits = {});
/// m . g = m(g) for a transformation near-ring.
NGroupAction action_from_transformation(std::shared_ptr<const NearRing> n);

struct LawReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  /// False when the pair laws ran on a sample (|N|^2 above the pair budget).
  bool exhaustive = true;
  /// (m1, m2, g) and the law's name on failure.
  std::optional<std::array<std::size_t, 3>> witness;
  std::string law;
};

/// (m1 + m2) . g = m1 . g + m2 . g, (m1 m2) . g = m1 . (m2 . g), and the
/// zero element acting as 0. Throws invalid_argument for a raw table.
LawReport verify_ngroup_laws(const NGroupAction& a, const Limits& limits = {});

/// Only the zero element annihilates the whole carrier.
bool is_faithful(const NGroupAction& a);
/// (0 : d), as near-ring element indices.
ElementSet annihilator(const NGroupAction& a, const ElementSet& d);

struct GeneratorSplit {
  ElementSet theta1;  // N g = Gamma
  ElementSet theta0;  // N g = {0}
  ElementSet other;
};
GeneratorSplit generators_split(const NGroupAction& a);

/// N g for every g.
std::vector<ElementSet> orbit_images(const NGroupAction& a);

struct IdealWitness {
  std::size_t m;
  Element gamma;
  Element i;
  /// m . (gamma + i) - m . gamma, which lies outside the candidate.
  Element difference;
};

/// nullopt when the normal subgroup `ideal` is an N-ideal, otherwise the
/// first failing (gamma, i) in lexicographic order with the smallest m.
/// Throws invalid_argument when `ideal` is not a normal subgroup.
std::optional<IdealWitness> check_n_ideal(const NGroupAction& a, const ElementSet& ideal);
bool is_n_subgroup(const NGroupAction& a, const ElementSet& k);

/// All N-ideals, in the order of normal_subgroups().
std::vector<ElementSet> n_ideals(const NGroupAction& a, const Limits& limits = {});
/// All N-subgroups, in the order of subgroups().
std::vector<ElementSet> n_subgroups(const NGroupAction& a, const Limits& limits = {});

struct TypeVerdict {
  bool faithful = false;
  ElementSet theta0;
  ElementSet theta1;
  ElementSet other;
  bool type0 = false;
  bool type1 = false;
  bool type2 = false;
  /// First nontrivial proper N-ideal, if any.
  std::optional<ElementSet> ideal_witness;
  /// First nontrivial proper N-subgroup, if any.
  std::optional<ElementSet> subgroup_witness;
  /// First g with {0} != N g != Gamma, if any.
  std::optional<Element> non_generator;
};

/// Type 0: Gamma != {0}, only trivial N-ideals, and a generator exists.
/// Type 1: type 0 and every N g is {0} or Gamma. Type 2: N Gamma != {0}
/// and only trivial N-subgroups.
TypeVerdict classify(const NGroupAction& a, const Limits& limits = {});

/// Classes of g1 ~ g2 (m . g1 = m . g2 for all m), listed by smallest member.
std::vector<ElementSet> equiv_classes(const NGroupAction& a);

/// Automorphisms of the carrier commuting with the action.
AutomorphismSet aut_n(const NGroupAction& a, const Limits& limits = {});
/// Same, filtering a precomputed Aut(carrier).
AutomorphismSet aut_n(const NGroupAction& a, const AutomorphismSet& full_aut);

/// X = {0} plus one element of every ~ class inside theta1, closed under s.
/// Picks the smallest unrepresented generator and adjoins its whole orbit,
/// until every class is met. Throws not_type_1 when some N g is neither
/// {0} nor Gamma.
ElementSet invariant_representatives(const NGroupAction& a, const AutomorphismSet& s);
ElementSet invariant_representatives(const NGroupAction& a, const Limits& limits = {});

}  // namespace nearprim
