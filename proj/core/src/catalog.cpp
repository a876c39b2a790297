#include "nearprim/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nearprim/error.hpp"

namespace nearprim {

using Perm = std::vector<std::size_t>;

FiniteGroup permutation_group(const std::vector<Perm>& generators) {
  if (generators.empty()) return cyclic(1);
  const std::size_t k = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != k) throw Error(Errc::invalid_argument, "permutations of mixed degree");
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < k; ++i) {
      if (sorted[i] != i) throw Error(Errc::invalid_argument, "generator is not a permutation");
    }
  }
  auto compose = [k](const Perm& a, const Perm& b) {
    Perm c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = a[b[i]];
    return c;
  };

  Perm id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = i;
  std::set<Perm> elements{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& s : generators) {
        Perm y = compose(x, s);
        if (elements.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Perm> list(elements.begin(), elements.end());
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> table(list.size(), std::vector<Element>(list.size()));
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b < list.size(); ++b) table[a][b] = index.at(compose(list[a], list[b]));
  }
  return FiniteGroup::from_table(table);
}

FiniteGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t r) {
  if (n == 0 || m == 0) throw Error(Errc::invalid_order, "semidirect factor of order 0");
  // powers[b] = r^b mod n
  std::vector<std::size_t> powers(m + 1, 1 % n);
  for (std::size_t b = 1; b <= m; ++b) powers[b] = (powers[b - 1] * r) % n;
  if (powers[m] != 1 % n) throw Error(Errc::invalid_argument, "r^m != 1 mod n");
  const std::size_t order = n * m;
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a1 = x % n, b1 = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a2 = y % n, b2 = y / n;
      const std::size_t a = (a1 + powers[b1] * a2) % n;
      const std::size_t b = (b1 + b2) % m;
      table[x][y] = static_cast<Element>(b * n + a);
    }
  }
  return FiniteGroup::from_table(table);
}

FiniteGroup symmetric3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup dihedral(std::size_t m) {
  if (m < 1) throw Error(Errc::invalid_order, "dihedral group of a 0-gon");
  return semidirect_cyclic(m, 2, m - 1);
}

FiniteGroup quaternion8() {
  // Index 2*u + sign, u in {1, i, j, k}, sign 0 for +, 1 for -.
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Element>> table(8, std::vector<Element>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2) ^ (y % 2) ^ sign[u][v];
      table[x][y] = static_cast<Element>(2 * unit[u][v] + s);
    }
  }
  return FiniteGroup::from_table(table);
}

FiniteGroup alternating4() { return permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

std::vector<NamedGroup> small_groups(std::size_t max_order, bool cyclic_only) {
  std::vector<NamedGroup> out;
  auto z = [](std::size_t n) { return "Z" + std::to_string(n); };
  for (std::size_t n = 1; n <= max_order; ++n) {
    out.push_back({z(n), cyclic(n)});
    if (cyclic_only) continue;
    switch (n) {
      case 4: out.push_back({"Z2xZ2", direct_product(cyclic(2), cyclic(2))}); break;
      case 6: out.push_back({"S3", symmetric3()}); break;
      case 8:
        out.push_back({"Z2xZ4", direct_product(cyclic(2), cyclic(4))});
        out.push_back({"Z2xZ2xZ2", direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))});
        out.push_back({"D4", dihedral(4)});
        out.push_back({"Q8", quaternion8()});
        break;
      case 9: out.push_back({"Z3xZ3", direct_product(cyclic(3), cyclic(3))}); break;
      case 10: out.push_back({"D5", dihedral(5)}); break;
      case 12:
        out.push_back({"Z2xZ6", direct_product(cyclic(2), cyclic(6))});
        out.push_back({"D6", dihedral(6)});
        out.push_back({"A4", alternating4()});
        out.push_back({"Dic3", semidirect_cyclic(3, 4, 2)});
        break;
      default:
        if (n > 12) {
          // Z_a x Z_b with a | b, a > 1.
          for (std::size_t a = 2; a * a <= n; ++a) {
            if (n % a == 0 && (n / a) % a == 0) {
              out.push_back({z(a) + "x" + z(n / a), direct_product(cyclic(a), cyclic(n / a))});
            }
          }
          if (n % 2 == 0 && n >= 6) out.push_back({"D" + std::to_string(n / 2), dihedral(n / 2)});
        }
        break;
    }
  }
  return out;
}

}  // namespace nearprim
