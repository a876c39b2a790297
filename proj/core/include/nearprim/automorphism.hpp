#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nearprim/group.hpp"
#include "nearprim/limits.hpp"

namespace nearprim {

/// A total self-map of a group, stored as its image array.
class GroupMap {
 public:
  GroupMap() = default;
  explicit GroupMap(std::vector<Element> image) : image_(std::move(image)) {}

  static GroupMap identity(std::size_t n);

  Element operator()(Element x) const { return image_[x]; }
  std::span<const Element> image() const noexcept { return image_; }
  std::size_t size() const noexcept { return image_.size(); }
  bool is_identity() const;

  /// (*this)(other(x)).
  GroupMap after(const GroupMap& other) const;
  /// Inverse of a bijective map.
  GroupMap inverse() const;

  friend bool operator==(const GroupMap&, const GroupMap&) = default;
  friend auto operator<=>(const GroupMap&, const GroupMap&) = default;

 private:
  std::vector<Element> image_;
};

bool is_endomorphism(const FiniteGroup& g, const GroupMap& m);
/// Additive and bijective. Throws invalid_argument on a length mismatch.
bool is_automorphism(const FiniteGroup& g, const GroupMap& m);

/// A group of automorphisms. Maps are kept sorted, so the identity (the
/// lexicographically smallest permutation) is always at index 0.
class AutomorphismSet {
 public:
  /// Validates bijectivity, presence of the identity, and closure under
  /// composition; throws invalid_argument otherwise.
  explicit AutomorphismSet(std::vector<GroupMap> maps);

  static AutomorphismSet trivial(std::size_t n);

  std::size_t size() const noexcept { return maps_.size(); }
  std::size_t degree() const noexcept { return maps_.front().size(); }
  const GroupMap& operator[](std::size_t i) const { return maps_[i]; }
  const std::vector<GroupMap>& maps() const noexcept { return maps_; }
  auto begin() const noexcept { return maps_.begin(); }
  auto end() const noexcept { return maps_.end(); }
  static constexpr std::size_t identity_index() noexcept { return 0; }

  bool contains(const GroupMap& m) const;
  /// Position of m, or size() when absent.
  std::size_t index_of(const GroupMap& m) const;
  /// Index of the composite maps_[a] after maps_[b].
  std::size_t compose_index(std::size_t a, std::size_t b) const;

  /// The orbit S(x), sorted.
  ElementSet orbit(Element x) const;

  friend bool operator==(const AutomorphismSet& a, const AutomorphismSet& b) {
    return a.maps_ == b.maps_;
  }

 private:
  std::vector<GroupMap> maps_;
};

/// Aut(g), found by extending images of a generating set.
AutomorphismSet automorphism_group(const FiniteGroup& g, const Limits& limits = {});

/// Smallest automorphism group containing the given maps.
AutomorphismSet closure_as_group(const FiniteGroup& g, std::span<const GroupMap> maps);

/// Every subgroup of s, sorted by size then lexicographically on map indices.
std::vector<AutomorphismSet> automorphism_subgroups(const AutomorphismSet& s);

/// Partition of an S-invariant carrier into orbits, each sorted, listed by
/// smallest member. Throws invalid_argument if the carrier is not invariant.
std::vector<ElementSet> orbits(const AutomorphismSet& s, const ElementSet& carrier);

/// Minimum element of each orbit, in orbit order.
std::vector<Element> orbit_representatives(const AutomorphismSet& s, const ElementSet& carrier);

/// No non-identity map fixes a point of m. Requires 0 not in m and m invariant.
bool is_fixedpointfree_on(const AutomorphismSet& s, const ElementSet& m);

/// Orbit label (index of the orbit's smallest member) for every element.
std::vector<Element> orbit_labels(const AutomorphismSet& s);

}  // namespace nearprim
