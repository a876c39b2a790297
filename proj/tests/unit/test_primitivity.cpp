#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "nearprim/catalog.hpp"
#include "nearprim/error.hpp"
#include "nearprim/primitivity.hpp"
#include "oracles.hpp"

using namespace nearprim;

namespace {

AutomorphismSet generated(const FiniteGroup& g, std::vector<Element> image) {
  return closure_as_group(g, std::vector{GroupMap(std::move(image))});
}

/// Every canonical scheme over groups of order <= max_order with |N| <= cap.
template <class F>
void sweep(std::size_t max_order, std::size_t cap, F&& f) {
  for (const auto& [name, g] : small_groups(max_order)) {
    if (g.order() < 2) continue;
    for (const auto& s : automorphism_subgroups(automorphism_group(g))) {
      for_each_canonical_scheme(g, s, cap, [&](const SandwichScheme& sc) { f(name, sc); });
    }
  }
}

}  // namespace

TEST_CASE("property (P) and the Gamma_0 condition match their definitions") {
  std::size_t count = 0;
  sweep(6, 1296, [&](const std::string& name, const SandwichScheme& sc) {
    CAPTURE(name);
    const auto side = theorem_side(sc);
    CHECK(side.p.holds == oracle::property_p(sc));
    CHECK(side.gamma0_subgroup_free == oracle::gamma0_subgroup_free(sc));
    if (side.gamma0_subgroup) {
      CHECK(is_subgroup(sc.gamma, *side.gamma0_subgroup));
      for (Element e : *side.gamma0_subgroup) CHECK(sc.phi[e] == 0);
    }
    for (std::size_t j = 0; j < side.p.c_members.size(); ++j) {
      const auto& w = side.p.witnesses[j];
      if (!w) continue;
      const auto& i = side.p.c_members[j];
      const auto& s = sc.s[w->s];
      CHECK(i.contains(w->i));
      CHECK(sc.phi[w->gamma1] != 0);
      CHECK(sc.phi[sc.gamma.add(w->gamma1, w->i)] == s(sc.phi[w->gamma1]));
      CHECK(!i.contains(sc.gamma.sub(s(w->gamma), w->gamma)));
    }
    ++count;
  });
  CHECK(count > 100);
}

TEST_CASE("theorem verdicts match the oracle classification of the action") {
  std::size_t rings = 0, count = 0;
  sweep(6, 1296, [&](const std::string& name, const SandwichScheme& sc) {
    CAPTURE(name);
    const auto v = evaluate(sc);
    const auto fs = oracle::centralizer_functions(sc);
    const auto t = oracle::types(sc.gamma, oracle::scheme_action(sc, fs));
    CHECK(v.nearring_size == fs.size());
    CHECK(v.direct->one_primitive == (t.faithful && t.type1));
    CHECK(v.direct->two_primitive == (t.faithful && t.type2));
    if (v.ring) {
      ++rings;
      CHECK(!v.applicable);
    } else {
      CHECK(v.agree);
      CHECK(v.theorem->one_primitive == v.direct->one_primitive);
      CHECK(v.theorem->two_primitive == v.direct->two_primitive);
    }
    ++count;
  });
  CHECK(count > 100);
  CHECK(rings > 0);
}

TEST_CASE("Z7 scheme is 2-primitive") {
  const FiniteGroup g = cyclic(7);
  const SandwichScheme sc{g, generated(g, {0, 6, 5, 4, 3, 2, 1}), {0, 1, 6, 0, 0, 1, 6}};
  const auto v = cross_check(sc);
  CHECK(v.nearring_size == 7);
  CHECK(v.two_primitive);
  CHECK(v.one_primitive);
  CHECK(v.agree);
  CHECK(!v.identities.right.empty());
  CHECK(!v.identities.two_sided);
  const auto t = theorem_verdict(sc);
  CHECK(t.theorem);
  CHECK(!t.direct);
  const auto d = direct_verdict(sc);
  CHECK(!d.theorem);
  CHECK(d.direct);
  CHECK(d.two_primitive);
}

TEST_CASE("Z15 with the full automorphism group") {
  const FiniteGroup g = cyclic(15);
  const AutomorphismSet aut = automorphism_group(g);
  std::vector<Element> phi(15, 0);
  for (Element x : aut.orbit(1)) phi[x] = x;
  const SandwichScheme sc{g, aut, phi};
  CHECK(compute_c(sc) == std::vector<ElementSet>{ElementSet{0}});
  const auto v = cross_check(sc);
  CHECK(v.nearring_size == 15);
  CHECK(v.one_primitive);
  CHECK(!v.two_primitive);
  CHECK(v.agree);
  CHECK(v.theorem->gamma0_subgroup);
  CHECK(v.direct->types.subgroup_witness);
}

TEST_CASE("P fails on Z4 with phi (0,1,0,1)") {
  const SandwichScheme sc{cyclic(4), AutomorphismSet::trivial(4), {0, 1, 0, 1}};
  const auto p = property_p(sc);
  CHECK(!p.holds);
  CHECK(p.violation == ElementSet{0, 2});
  const auto v = cross_check(sc);
  CHECK(!v.one_primitive);
  CHECK(v.direct->types.ideal_witness == ElementSet{0, 2});
}

TEST_CASE("P holds on Z6 with phi (0,1,1,0,5,5) and S = {id, -id}") {
  const FiniteGroup g = cyclic(6);
  const SandwichScheme sc{g, generated(g, {0, 5, 4, 3, 2, 1}), {0, 1, 1, 0, 5, 5}};
  const auto p = property_p(sc);
  CHECK(p.holds);
  REQUIRE(p.c_members.size() == 2);
  CHECK(p.c_members[1] == ElementSet{0, 3});
  REQUIRE(p.witnesses[1]);
  CHECK(*p.witnesses[1] == PWitness{3, 1, 1, 1});
  CHECK(oracle::property_p(sc));
}

TEST_CASE("ring instances are flagged not applicable") {
  const FiniteGroup g = cyclic(5);
  const SandwichScheme sc{g, automorphism_group(g), {0, 1, 2, 3, 4}};
  const auto v = cross_check(sc);
  CHECK(v.ring);
  CHECK(!v.applicable);
  CHECK(v.two_primitive);
  CHECK(v.identities.two_sided);
}

TEST_CASE("invalid schemes are rejected") {
  const SandwichScheme bad{cyclic(4), AutomorphismSet::trivial(4), {0, 1, 0, 2}};
  CHECK_THROWS_AS(evaluate(bad), Error);
  CHECK_THROWS_AS(theorem_verdict(bad), Error);
}

TEST_CASE("embedding recovers a dense copy") {
  std::size_t embedded = 0;
  sweep(5, 625, [&](const std::string& name, const SandwichScheme& sc) {
    CAPTURE(name);
    auto n = std::make_shared<const NearRing>(enumerate_centralizer_nearring(sc));
    const auto a = action_from_scheme(n, sc);
    const auto t = classify(a);
    if (!t.faithful || !t.type1) {
      CHECK_THROWS_AS(embed(a), Error);
      return;
    }
    const auto e = embed(a);
    CHECK(validate_scheme(e.scheme).ok());
    CHECK(density_check(e.image, e.scheme));
    std::set<NrIndex> paired(e.pairing.begin(), e.pairing.end());
    CHECK(paired.size() == n->size());
    ++embedded;
  });
  CHECK(embedded > 10);
}

TEST_CASE("density fails on a proper subset") {
  auto n = std::make_shared<const NearRing>(build_annihilating_nearring(cyclic(4), {0, 3}));
  const auto a = action_from_transformation(n);
  auto e = embed(a);
  CHECK(e.scheme.phi == std::vector<Element>{0, 1, 2, 0});
  CHECK(density_check(e.image, e.scheme));
  e.image.pop_back();
  CHECK(!density_check(e.image, e.scheme));
}

TEST_CASE("evaluate over an existing action") {
  const FiniteGroup g = cyclic(7);
  const SandwichScheme sc{g, generated(g, {0, 6, 5, 4, 3, 2, 1}), {0, 1, 6, 0, 0, 1, 6}};
  auto n = std::make_shared<const NearRing>(enumerate_centralizer_nearring(sc));
  const auto from_action = evaluate(action_from_scheme(n, sc));
  const auto direct = evaluate(sc);
  CHECK(from_action.two_primitive == direct.two_primitive);
  CHECK(from_action.agree);
  CHECK(from_action.nearring_size == 7);
  auto t = std::make_shared<const NearRing>(build_annihilating_nearring(cyclic(4), {0, 3}));
  CHECK_THROWS_AS(evaluate(action_from_transformation(t)), Error);
}
