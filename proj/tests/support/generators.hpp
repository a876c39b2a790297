#pragma once

// Hand-rolled random generators for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "nearprim/automorphism.hpp"
#include "nearprim/catalog.hpp"
#include "nearprim/sandwich.hpp"

namespace gen {

using nearprim::AutomorphismSet;
using nearprim::Element;
using nearprim::ElementSet;
using nearprim::FiniteGroup;
using nearprim::PhiRecipe;

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

/// A random group of order 2..max_order together with a random
/// automorphism subgroup.
struct GroupWithS {
  std::string name;
  FiniteGroup gamma;
  AutomorphismSet s;
};

inline GroupWithS group_with_s(std::mt19937& rng, std::size_t max_order) {
  static const auto groups = nearprim::small_groups(max_order);
  while (true) {
    const auto& ng = pick(rng, groups);
    if (ng.group.order() < 2) continue;
    const auto subs = nearprim::automorphism_subgroups(nearprim::automorphism_group(ng.group));
    return {ng.name, ng.group, pick(rng, subs)};
  }
}

/// A random valid recipe over (gamma, s), or nothing if S has no regular
/// orbit. Representatives are random orbit members, not orbit minima.
inline std::optional<PhiRecipe> recipe(std::mt19937& rng, const GroupWithS& gs) {
  std::vector<ElementSet> regular;
  for (auto& o : nearprim::orbits(gs.s, gs.gamma.nonzero())) {
    if (o.size() == gs.s.size()) regular.push_back(std::move(o));
  }
  if (regular.empty()) return std::nullopt;
  std::shuffle(regular.begin(), regular.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, regular.size());
  regular.resize(count(rng));
  const std::size_t j_count = std::uniform_int_distribution<std::size_t>(1, regular.size())(rng);

  PhiRecipe r{gs.gamma, gs.s, {}, {}, {}, {}};
  std::vector<Element> g, x1;
  for (std::size_t i = 0; i < regular.size(); ++i) {
    g.insert(g.end(), regular[i].begin(), regular[i].end());
    r.reps.push_back(pick(rng, regular[i].members()));
    if (i < j_count) {
      r.j.push_back(i);
      x1.insert(x1.end(), regular[i].begin(), regular[i].end());
    }
  }
  for (std::size_t i = j_count; i < regular.size(); ++i) r.f.emplace_back(r.reps[i], pick(rng, x1));
  r.g = ElementSet(std::move(g));
  return r;
}

}  // namespace gen
