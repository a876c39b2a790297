#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "nearprim/limits.hpp"

namespace nearprim {

/// Group elements are dense indices 0..n-1; index 0 is always the identity.
using Element = std::uint32_t;

/// Sorted, duplicate-free set of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> members);
  explicit ElementSet(std::vector<Element> members);

  /// Builds the set {i : mask[i] != 0}.
  static ElementSet from_mask(std::span<const char> mask);

  bool contains(Element e) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Element>& members() const noexcept { return members_; }
  Element operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Membership flags over 0..n-1.
  std::vector<char> mask(std::size_t n) const;

  bool is_subset_of(const ElementSet& other) const;
  ElementSet set_union(const ElementSet& other) const;
  ElementSet set_difference(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> members_;
};

/// Orders sets by size, then lexicographically.
bool size_then_lex(const ElementSet& a, const ElementSet& b);

/// A finite group given by its Cayley table. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates the table: Latin square, identity at index 0, associativity.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table);

  std::size_t order() const noexcept { return n_; }
  Element add(Element a, Element b) const { return table_[a * n_ + b]; }
  Element neg(Element a) const { return inverse_[a]; }
  /// a - b, i.e. a + (-b).
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  bool is_abelian() const noexcept { return abelian_; }

  /// Smallest k >= 1 with k*a = 0.
  std::size_t element_order(Element a) const;

  std::vector<std::vector<Element>> table() const;
  std::span<const Element> inverses() const noexcept { return inverse_; }
  ElementSet all() const;
  /// Every element except 0.
  ElementSet nonzero() const;
  void check_member(Element a) const;
  void check_members(const ElementSet& s) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  bool abelian_ = true;
};

FiniteGroup cyclic(std::size_t n);
FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table);
/// Componentwise product; the pair (a, b) gets index a * |h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Smallest subgroup containing the given elements.
ElementSet generated_subgroup(const FiniteGroup& g, std::span<const Element> generators);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);

/// All subgroups, sorted by size then lexicographically. Fails with
/// resource_limit when the group order exceeds limits.max_group_order.
std::vector<ElementSet> subgroups(const FiniteGroup& g, const Limits& limits = {});
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// True iff a is a union of cosets delta + i.
bool is_union_of_cosets(const FiniteGroup& g, const ElementSet& a, const ElementSet& i);

}  // namespace nearprim
