#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nearprim/group.hpp"

namespace nearprim {

/// Group generated by permutations of {0..k-1}; a + b is "apply b, then a".
/// Elements are labelled in lexicographic order of their permutations, so
/// the identity permutation lands on index 0.
FiniteGroup permutation_group(const std::vector<std::vector<std::size_t>>& generators);

/// Z_n x| Z_m where the generator of Z_m acts on Z_n as multiplication by r.
/// Requires r^m = 1 (mod n).
FiniteGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t r);

FiniteGroup symmetric3();
/// Symmetries of the regular m-gon (order 2m).
FiniteGroup dihedral(std::size_t m);
FiniteGroup quaternion8();
FiniteGroup alternating4();

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Groups of order <= max_order. Complete up to isomorphism through order 12;
/// above that only cyclic, dihedral and the abelian Z_a x Z_b groups appear.
std::vector<NamedGroup> small_groups(std::size_t max_order, bool cyclic_only = false);

}  // namespace nearprim
