#include "nearprim/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "nearprim/error.hpp"

namespace nearprim {

ElementSet::ElementSet(std::initializer_list<Element> members)
    : ElementSet(std::vector<Element>(members)) {}

ElementSet::ElementSet(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSet ElementSet::from_mask(std::span<const char> mask) {
  ElementSet s;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) s.members_.push_back(static_cast<Element>(i));
  }
  return s;
}

bool ElementSet::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

std::vector<char> ElementSet::mask(std::size_t n) const {
  std::vector<char> m(n, 0);
  for (Element e : members_) {
    if (e < n) m[e] = 1;
  }
  return m;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

ElementSet ElementSet::set_union(const ElementSet& other) const {
  ElementSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

ElementSet ElementSet::set_difference(const ElementSet& other) const {
  ElementSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

bool size_then_lex(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(Errc::invalid_order, "empty Cayley table");
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw Error(Errc::not_a_group, "row " + std::to_string(a) + " has length " +
                                         std::to_string(table[a].size()) + ", expected " +
                                         std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw Error(Errc::not_a_group, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                           ") out of range");
      }
      g.table_[a * n + b] = table[a][b];
    }
  }

  // Latin square.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Element v = g.table_[a * n + b];
      if (seen[v]) {
        throw Error(Errc::not_a_group, "row " + std::to_string(a) + " repeats " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      Element v = g.table_[a * n + b];
      if (seen[v]) {
        throw Error(Errc::not_a_group,
                    "column " + std::to_string(b) + " repeats " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }

  // Identity must sit at index 0. We never relabel.
  auto is_identity = [&](std::size_t e) {
    for (std::size_t a = 0; a < n; ++a) {
      if (g.table_[e * n + a] != a || g.table_[a * n + e] != a) return false;
    }
    return true;
  };
  if (!is_identity(0)) {
    for (std::size_t e = 1; e < n; ++e) {
      if (is_identity(e)) {
        throw Error(Errc::bad_labeling,
                    "identity is element " + std::to_string(e) + ", expected 0");
      }
    }
    throw Error(Errc::not_a_group, "no identity element");
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = g.table_[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (g.table_[ab * n + c] != g.table_[a * n + g.table_[b * n + c]]) {
          throw Error(Errc::not_a_group, "associativity fails at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }

  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table_[a * n + b] == 0) {
        g.inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  for (std::size_t a = 0; a < n && g.abelian_; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.table_[a * n + b] != g.table_[b * n + a]) {
        g.abelian_ = false;
        break;
      }
    }
  }
  return g;
}

std::size_t FiniteGroup::element_order(Element a) const {
  check_member(a);
  std::size_t k = 1;
  for (Element x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> t(n_, std::vector<Element>(n_));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
  }
  return t;
}

ElementSet FiniteGroup::all() const {
  std::vector<Element> v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = static_cast<Element>(i);
  return ElementSet(std::move(v));
}

ElementSet FiniteGroup::nonzero() const {
  std::vector<Element> v;
  for (std::size_t i = 1; i < n_; ++i) v.push_back(static_cast<Element>(i));
  return ElementSet(std::move(v));
}

void FiniteGroup::check_member(Element a) const {
  if (a >= n_) {
    throw Error(Errc::invalid_argument,
                "element " + std::to_string(a) + " outside group of order " + std::to_string(n_));
  }
}

void FiniteGroup::check_members(const ElementSet& s) const {
  if (!s.empty()) check_member(s.members().back());
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_order, "cyclic group of order 0");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup::from_table(t);
}

FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table) {
  return FiniteGroup::from_table(table);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = g.add(static_cast<Element>(x / m), static_cast<Element>(y / m));
      const auto b = h.add(static_cast<Element>(x % m), static_cast<Element>(y % m));
      t[x][y] = static_cast<Element>(a * m + b);
    }
  }
  return FiniteGroup::from_table(t);
}

namespace {

// Closure of `seed` (already a subgroup or {0}) under right addition by `gens`.
std::vector<char> close_under(const FiniteGroup& g, std::vector<char> member,
                              std::span<const Element> gens) {
  std::deque<Element> queue;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) queue.push_back(static_cast<Element>(i));
  }
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      const Element y = g.add(x, s);
      if (!member[y]) {
        member[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return member;
}

}  // namespace

ElementSet generated_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  for (Element e : generators) g.check_member(e);
  std::vector<char> member(g.order(), 0);
  member[0] = 1;
  return ElementSet::from_mask(close_under(g, std::move(member), generators));
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.empty() || !s.contains(0)) return false;
  if (s.members().back() >= g.order()) return false;
  for (Element a : s) {
    if (!s.contains(g.neg(a))) return false;
    for (Element b : s) {
      if (!s.contains(g.add(a, b))) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  if (g.is_abelian()) return true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto ea = static_cast<Element>(a);
    for (Element h : s) {
      if (!s.contains(g.sub(g.add(ea, h), ea))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> subgroups(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.max_group_order) {
    throw Error(Errc::resource_limit, "subgroup enumeration capped at order " +
                                          std::to_string(limits.max_group_order) + ", got " +
                                          std::to_string(n));
  }
  struct Node {
    std::vector<char> member;
    std::vector<Element> gens;
  };
  std::set<std::vector<char>> seen;
  std::vector<ElementSet> out;
  std::deque<Node> queue;

  std::vector<char> trivial(n, 0);
  trivial[0] = 1;
  seen.insert(trivial);
  queue.push_back({trivial, {}});
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    out.push_back(ElementSet::from_mask(node.member));
    for (std::size_t x = 1; x < n; ++x) {
      if (node.member[x]) continue;
      std::vector<Element> gens = node.gens;
      gens.push_back(static_cast<Element>(x));
      auto grown = close_under(g, node.member, gens);
      if (seen.insert(grown).second) queue.push_back({std::move(grown), std::move(gens)});
    }
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, const Limits& limits) {
  auto all = subgroups(g, limits);
  std::vector<ElementSet> out;
  for (auto& s : all) {
    if (is_normal_subgroup(g, s)) out.push_back(std::move(s));
  }
  return out;
}

bool is_union_of_cosets(const FiniteGroup& g, const ElementSet& a, const ElementSet& i) {
  g.check_members(a);
  if (!is_subgroup(g, i)) throw Error(Errc::invalid_argument, "coset base is not a subgroup");
  for (Element d : a) {
    for (Element x : i) {
      if (!a.contains(g.add(d, x))) return false;
    }
  }
  return true;
}

}  // namespace nearprim
