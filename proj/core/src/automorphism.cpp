#include "nearprim/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "nearprim/error.hpp"

namespace nearprim {

GroupMap GroupMap::identity(std::size_t n) {
  std::vector<Element> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Element>(i);
  return GroupMap(std::move(image));
}

bool GroupMap::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

GroupMap GroupMap::after(const GroupMap& other) const {
  std::vector<Element> image(other.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = image_[other.image_[i]];
  return GroupMap(std::move(image));
}

GroupMap GroupMap::inverse() const {
  std::vector<Element> image(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) image[image_[i]] = static_cast<Element>(i);
  return GroupMap(std::move(image));
}

namespace {

bool is_bijection(std::span<const Element> image) {
  std::vector<char> hit(image.size(), 0);
  for (Element y : image) {
    if (y >= image.size() || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

}  // namespace

bool is_endomorphism(const FiniteGroup& g, const GroupMap& m) {
  const std::size_t n = g.order();
  if (m.size() != n) {
    throw Error(Errc::invalid_argument, "map of length " + std::to_string(m.size()) +
                                            " on group of order " + std::to_string(n));
  }
  for (Element y : m.image()) {
    if (y >= n) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
      if (m(g.add(ea, eb)) != g.add(m(ea), m(eb))) return false;
    }
  }
  return true;
}

bool is_automorphism(const FiniteGroup& g, const GroupMap& m) {
  return is_endomorphism(g, m) && is_bijection(m.image());
}

AutomorphismSet::AutomorphismSet(std::vector<GroupMap> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw Error(Errc::invalid_argument, "empty automorphism set");
  std::sort(maps_.begin(), maps_.end());
  maps_.erase(std::unique(maps_.begin(), maps_.end()), maps_.end());
  const std::size_t n = maps_.front().size();
  for (const auto& m : maps_) {
    if (m.size() != n) throw Error(Errc::invalid_argument, "maps of mixed length");
    if (!is_bijection(m.image())) throw Error(Errc::invalid_argument, "map is not bijective");
  }
  if (!maps_.front().is_identity()) {
    throw Error(Errc::invalid_argument, "automorphism set lacks the identity");
  }
  for (const auto& a : maps_) {
    for (const auto& b : maps_) {
      if (!contains(a.after(b))) {
        throw Error(Errc::invalid_argument, "automorphism set not closed under composition");
      }
    }
  }
}

AutomorphismSet AutomorphismSet::trivial(std::size_t n) {
  return AutomorphismSet({GroupMap::identity(n)});
}

bool AutomorphismSet::contains(const GroupMap& m) const {
  return std::binary_search(maps_.begin(), maps_.end(), m);
}

std::size_t AutomorphismSet::index_of(const GroupMap& m) const {
  auto it = std::lower_bound(maps_.begin(), maps_.end(), m);
  if (it == maps_.end() || *it != m) return maps_.size();
  return static_cast<std::size_t>(it - maps_.begin());
}

std::size_t AutomorphismSet::compose_index(std::size_t a, std::size_t b) const {
  return index_of(maps_[a].after(maps_[b]));
}

ElementSet AutomorphismSet::orbit(Element x) const {
  std::vector<Element> out;
  out.reserve(maps_.size());
  for (const auto& m : maps_) out.push_back(m(x));
  return ElementSet(std::move(out));
}

AutomorphismSet automorphism_group(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.max_group_order) {
    throw Error(Errc::resource_limit, "automorphism search capped at order " +
                                          std::to_string(limits.max_group_order) + ", got " +
                                          std::to_string(n));
  }
  // Greedy generating set and the chain of subgroups it generates.
  std::vector<Element> gens;
  std::vector<ElementSet> chain;
  ElementSet current{0};
  for (std::size_t x = 1; x < n; ++x) {
    if (current.contains(static_cast<Element>(x))) continue;
    gens.push_back(static_cast<Element>(x));
    current = generated_subgroup(g, gens);
    chain.push_back(current);
  }
  std::vector<std::size_t> orders(n);
  for (std::size_t x = 0; x < n; ++x) orders[x] = g.element_order(static_cast<Element>(x));

  std::vector<GroupMap> found;
  std::vector<Element> image_of_gen(gens.size());

  // Extends the partial assignment for gens[0..t] to <gens[0..t]> and checks
  // consistency and injectivity there. Returns the partial map on success.
  auto extend = [&](std::size_t t, std::vector<Element>& map) -> bool {
    constexpr Element unset = ~Element{0};
    map.assign(n, unset);
    std::vector<char> used(n, 0);
    map[0] = 0;
    used[0] = 1;
    std::deque<Element> queue{0};
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i <= t; ++i) {
        const Element y = g.add(x, gens[i]);
        const Element img = g.add(map[x], image_of_gen[i]);
        if (map[y] == unset) {
          if (used[img]) return false;
          map[y] = img;
          used[img] = 1;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<Element> scratch;
  auto search = [&](auto&& self, std::size_t t) -> void {
    if (t == gens.size()) {
      extend(t - 1, scratch);
      found.emplace_back(scratch);
      if (found.size() > limits.max_automorphisms) {
        throw Error(Errc::resource_limit, "automorphism group exceeds " +
                                              std::to_string(limits.max_automorphisms) + " maps");
      }
      return;
    }
    for (std::size_t y = 1; y < n; ++y) {
      if (orders[y] != orders[gens[t]]) continue;
      image_of_gen[t] = static_cast<Element>(y);
      if (extend(t, scratch)) self(self, t + 1);
    }
  };

  if (gens.empty()) return AutomorphismSet::trivial(n);
  search(search, 0);
  for (const auto& m : found) {
    if (!is_automorphism(g, m)) {
      throw Error(Errc::internal_inconsistency, "extended map is not an automorphism");
    }
  }
  return AutomorphismSet(std::move(found));
}

AutomorphismSet closure_as_group(const FiniteGroup& g, std::span<const GroupMap> maps) {
  for (const auto& m : maps) {
    if (!is_automorphism(g, m)) throw Error(Errc::invalid_argument, "generator is not an automorphism");
  }
  std::set<GroupMap> seen{GroupMap::identity(g.order())};
  std::deque<GroupMap> queue{GroupMap::identity(g.order())};
  while (!queue.empty()) {
    GroupMap x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : maps) {
      GroupMap y = x.after(s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return AutomorphismSet(std::vector<GroupMap>(seen.begin(), seen.end()));
}

std::vector<AutomorphismSet> automorphism_subgroups(const AutomorphismSet& s) {
  const std::size_t m = s.size();
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a][b] = static_cast<Element>(s.compose_index(a, b));
  }
  const FiniteGroup as_group = FiniteGroup::from_table(table);
  Limits unbounded;
  unbounded.max_group_order = m;
  std::vector<AutomorphismSet> out;
  for (const auto& sub : subgroups(as_group, unbounded)) {
    std::vector<GroupMap> maps;
    for (Element i : sub) maps.push_back(s[i]);
    out.emplace_back(std::move(maps));
  }
  return out;
}

namespace {

void check_invariant(const AutomorphismSet& s, const ElementSet& carrier) {
  for (Element x : carrier) {
    if (x >= s.degree()) throw Error(Errc::invalid_argument, "carrier element out of range");
    for (const auto& m : s) {
      if (!carrier.contains(m(x))) {
        throw Error(Errc::invalid_argument,
                    "carrier not S-invariant: " + std::to_string(x) + " maps to " +
                        std::to_string(m(x)));
      }
    }
  }
}

}  // namespace

std::vector<ElementSet> orbits(const AutomorphismSet& s, const ElementSet& carrier) {
  check_invariant(s, carrier);
  std::vector<char> done(s.degree(), 0);
  std::vector<ElementSet> out;
  for (Element x : carrier) {
    if (done[x]) continue;
    ElementSet o = s.orbit(x);
    for (Element y : o) done[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Element> orbit_representatives(const AutomorphismSet& s, const ElementSet& carrier) {
  std::vector<Element> reps;
  for (const auto& o : orbits(s, carrier)) reps.push_back(o[0]);
  return reps;
}

bool is_fixedpointfree_on(const AutomorphismSet& s, const ElementSet& m) {
  if (m.contains(0)) throw Error(Errc::invalid_argument, "fixedpointfreeness set contains 0");
  check_invariant(s, m);
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (Element x : m) {
      if (s[i](x) == x) return false;
    }
  }
  return true;
}

std::vector<Element> orbit_labels(const AutomorphismSet& s) {
  const std::size_t n = s.degree();
  std::vector<Element> label(n, static_cast<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] != n) continue;
    for (const auto& m : s) label[m(static_cast<Element>(x))] = static_cast<Element>(x);
  }
  return label;
}

}  // namespace nearprim
