#include <doctest.h>

#include <algorithm>
#include <set>

#include "nearprim/automorphism.hpp"
#include "nearprim/catalog.hpp"
#include "nearprim/error.hpp"
#include "oracles.hpp"

using namespace nearprim;

TEST_CASE("|Aut(Z_n)| is Euler's totient") {
  for (std::size_t n = 1; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(automorphism_group(cyclic(n)).size() == oracle::totient(n));
  }
}

TEST_CASE("automorphism groups of small groups match a permutation scan") {
  for (const auto& [name, g] : small_groups(8)) {
    CAPTURE(name);
    auto expected = oracle::automorphisms(g);
    std::sort(expected.begin(), expected.end());
    CHECK(automorphism_group(g).maps() == expected);
  }
}

TEST_CASE("known automorphism group orders") {
  CHECK(automorphism_group(symmetric3()).size() == 6);
  CHECK(automorphism_group(quaternion8()).size() == 24);
  CHECK(automorphism_group(dihedral(4)).size() == 8);
  CHECK(automorphism_group(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))).size() == 168);
  CHECK(automorphism_group(alternating4()).size() == 24);
}

TEST_CASE("automorphism limit") {
  Limits l;
  l.max_automorphisms = 100;
  const FiniteGroup e8 = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
  CHECK_THROWS_AS(automorphism_group(e8, l), Error);
}

TEST_CASE("automorphism subgroups are closed and distinct") {
  for (const auto& [name, g] : small_groups(8)) {
    CAPTURE(name);
    const AutomorphismSet aut = automorphism_group(g);
    const auto subs = automorphism_subgroups(aut);
    std::set<std::vector<GroupMap>> seen;
    for (const auto& s : subs) {
      CHECK(s[0].is_identity());
      CHECK(aut.size() % s.size() == 0);
      for (const auto& a : s) {
        CHECK(s.contains(a.inverse()));
        for (const auto& b : s) CHECK(s.contains(a.after(b)));
      }
      CHECK(seen.insert(s.maps()).second);
    }
    CHECK(subs.front().size() == 1);
    CHECK(subs.back() == aut);
  }
  // Aut(Z7) is cyclic of order 6: subgroups of orders 1, 2, 3, 6.
  CHECK(automorphism_subgroups(automorphism_group(cyclic(7))).size() == 4);
}

TEST_CASE("orbits partition the carrier") {
  for (const auto& [name, g] : small_groups(8)) {
    CAPTURE(name);
    const AutomorphismSet aut = automorphism_group(g);
    for (const auto& s : automorphism_subgroups(aut)) {
      const auto parts = orbits(s, g.all());
      std::vector<Element> all;
      for (const auto& o : parts) {
        CHECK(!o.empty());
        for (Element x : o) CHECK(s.orbit(x) == o);
        all.insert(all.end(), o.begin(), o.end());
      }
      std::sort(all.begin(), all.end());
      CHECK(ElementSet(all) == g.all());
      CHECK(all.size() == g.order());
      const auto labels = orbit_labels(s);
      for (Element x : g.all()) CHECK(labels[x] == s.orbit(x)[0]);
    }
  }
}

TEST_CASE("fixedpointfree") {
  const FiniteGroup g = cyclic(15);
  const AutomorphismSet aut = automorphism_group(g);
  CHECK(is_fixedpointfree_on(aut, aut.orbit(1)));
  CHECK(!is_fixedpointfree_on(aut, g.nonzero()));
  const GroupMap minus({0, 4, 3, 2, 1});
  const AutomorphismSet s = closure_as_group(cyclic(5), std::vector{minus});
  CHECK(s.size() == 2);
  CHECK(is_fixedpointfree_on(s, cyclic(5).nonzero()));
}

TEST_CASE("map checks") {
  const FiniteGroup g = cyclic(4);
  CHECK(is_automorphism(g, GroupMap({0, 3, 2, 1})));
  CHECK(!is_automorphism(g, GroupMap({0, 2, 0, 2})));
  CHECK(is_endomorphism(g, GroupMap({0, 2, 0, 2})));
  CHECK_THROWS_AS(is_automorphism(g, GroupMap({0, 1})), Error);
  CHECK_THROWS_AS(AutomorphismSet({GroupMap({0, 3, 2, 1})}), Error);
}
