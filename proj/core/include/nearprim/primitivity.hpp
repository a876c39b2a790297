#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "nearprim/automorphism.hpp"
#include "nearprim/group.hpp"
#include "nearprim/limits.hpp"
#include "nearprim/nearring.hpp"
#include "nearprim/ngroup.hpp"
#include "nearprim/sandwich.hpp"

namespace nearprim {

/// phi(gamma1 + i) = s(phi(gamma1)) and s(gamma) - gamma outside I.
struct PWitness {
  Element i;
  Element gamma1;
  std::size_t s;  // index into scheme.s
  Element gamma;

  friend bool operator==(const PWitness&, const PWitness&) = default;
};

struct PropertyPReport {
  /// The set C, in normal_subgroups() order.
  std::vector<ElementSet> c_members;
  /// witnesses[j] belongs to c_members[j]; nullopt for {0} and for members
  /// without a witness.
  std::vector<std::optional<PWitness>> witnesses;
  bool holds = true;
  /// First nontrivial member of C without a witness.
  std::optional<ElementSet> violation;
};

/// Normal subgroups I inside Gamma_0 such that Gamma_0 is a union of cosets
/// of I and S(phi(g + i)) = S(phi(g)) for g outside Gamma_0, i in I.
std::vector<ElementSet> compute_c(const SandwichScheme& scheme, const Limits& limits = {});

/// Searches witnesses in lexicographic order of (i, gamma1, s, gamma), with
/// gamma ranging over all of Gamma.
PropertyPReport property_p(const SandwichScheme& scheme, const Limits& limits = {});

struct TheoremSide {
  bool cond_2a = true;  // Gamma is a group
  bool cond_2b = false;  // X = {0} u X1, X1 nonempty
  bool cond_2c = false;  // S <= Aut, S(X) in X, fixedpointfree on X1
  bool cond_2d = false;  // phi|X = id, phi(0) = 0, phi equivariant
  PropertyPReport p;
  bool gamma0_subgroup_free = false;
  /// Smallest nontrivial subgroup found inside Gamma_0.
  std::optional<ElementSet> gamma0_subgroup;
  bool one_primitive = false;
  bool two_primitive = false;
};

struct DirectSide {
  TypeVerdict types;
  LawReport laws;
  bool one_primitive = false;
  bool two_primitive = false;
};

struct PrimitivityVerdict {
  std::size_t nearring_size = 0;
  bool ring = false;
  /// The theorems assume a non-ring; false on ring instances.
  bool applicable = true;
  std::optional<TheoremSide> theorem;
  std::optional<DirectSide> direct;
  /// Both sides give the same answer at both levels. Computed whenever both
  /// sides are present, including on ring instances.
  bool agree = false;
  IdentityReport identities;
  bool one_primitive = false;
  bool two_primitive = false;
};

/// Theorem conditions only; the near-ring is still built for the ring flag.
/// Throws invalid_argument for an invalid scheme.
PrimitivityVerdict theorem_verdict(const SandwichScheme& scheme, const Limits& limits = {});
/// Faithfulness and type of the sandwich action on Gamma.
PrimitivityVerdict direct_verdict(const SandwichScheme& scheme, const Limits& limits = {});
/// Both sides over one shared near-ring. Never throws theorem_mismatch.
PrimitivityVerdict evaluate(const SandwichScheme& scheme, const Limits& limits = {});
/// Same, over an existing action of a sandwich centralizer near-ring on its
/// scheme group. The N-group laws are re-verified as usual.
PrimitivityVerdict evaluate(const NGroupAction& action, const Limits& limits = {});
/// Like evaluate, but a disagreement on a non-ring instance raises
/// theorem_mismatch.
PrimitivityVerdict cross_check(const SandwichScheme& scheme, const Limits& limits = {});

/// Building blocks of evaluate, for callers that already hold the near-ring.
TheoremSide theorem_side(const SandwichScheme& scheme, const Limits& limits = {});
DirectSide direct_side(const NGroupAction& action, const Limits& limits = {});

struct EmbedResult {
  SandwichScheme scheme;
  /// image[n] = f_n as values over the sorted X of `scheme`.
  std::vector<std::vector<Element>> image;
  /// pairing[n] = index of f_n in M0(X, Gamma, phi, S).
  std::vector<NrIndex> pairing;
  std::size_t pairs_checked = 0;
  bool exhaustive = true;
};

/// n -> f_n with f_n(x) = n . x, over S = Aut_N(Gamma), X from
/// invariant_representatives and phi sending each g to its class
/// representative. Throws not_embeddable unless the action is faithful and
/// of type 1, and internal_inconsistency if f is not an injective
/// homomorphism.
EmbedResult embed(const NGroupAction& action, const Limits& limits = {});
EmbedResult embed(const NGroupAction& action, const AutomorphismSet& full_aut,
                  const Limits& limits = {});

/// At finite scale density is equality: true iff `image` is exactly the
/// element set of M0(X, Gamma, phi, S).
bool density_check(const std::vector<std::vector<Element>>& image, const SandwichScheme& scheme,
                   const Limits& limits = {});

}  // namespace nearprim
