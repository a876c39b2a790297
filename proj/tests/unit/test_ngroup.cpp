#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <set>

#include "generators.hpp"
#include "nearprim/catalog.hpp"
#include "nearprim/error.hpp"
#include "nearprim/ngroup.hpp"
#include "oracles.hpp"

using namespace nearprim;

namespace {

oracle::Rows rows_of(const NGroupAction& a) {
  oracle::Rows rows;
  for (std::size_t m = 0; m < a.size(); ++m) rows.emplace_back(a.row(m).begin(), a.row(m).end());
  return rows;
}

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end(), size_then_lex);
  return v;
}

struct Instance {
  std::string name;
  NGroupAction action;
};

/// Scheme actions and transformation actions with |N| <= 256.
std::vector<Instance> build_instances() {
  std::vector<Instance> out;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150 && out.size() < 50; ++trial) {
    const auto gs = gen::group_with_s(rng, 8);
    const auto r = gen::recipe(rng, gs);
    if (!r) continue;
    const SandwichScheme sc = build_phi(*r);
    if (*centralizer_size(sc, std::size_t{1} << 40) > 256) continue;
    auto n = std::make_shared<const NearRing>(enumerate_centralizer_nearring(sc));
    out.push_back({gs.name, action_from_scheme(n, sc)});
  }
  for (std::size_t order = 2; order <= 5; ++order) {
    const FiniteGroup g = cyclic(order);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << order); bits += 2) {
      const ElementSet ann = oracle::from_bits(order, bits);
      if (std::pow(double(order), double(order - ann.size())) > 256) continue;
      auto n = std::make_shared<const NearRing>(build_annihilating_nearring(g, ann));
      out.push_back({"Z" + std::to_string(order) + " annihilating", action_from_transformation(n)});
    }
  }
  return out;
}

const std::vector<Instance>& instances() {
  static const auto all = build_instances();
  return all;
}

}  // namespace

TEST_CASE("scheme action rows are m(phi(g))") {
  const FiniteGroup g = cyclic(7);
  const SandwichScheme sc{g, closure_as_group(g, std::vector{GroupMap({0, 6, 5, 4, 3, 2, 1})}),
                          {0, 1, 6, 0, 0, 1, 6}};
  auto n = std::make_shared<const NearRing>(enumerate_centralizer_nearring(sc));
  const auto a = action_from_scheme(n, sc);
  CHECK(rows_of(a) == oracle::scheme_action(sc, oracle::centralizer_functions(sc)));
  const auto laws = verify_ngroup_laws(a);
  CHECK(laws.ok);
  CHECK(laws.exhaustive);
  const SandwichScheme other{g, AutomorphismSet::trivial(7), {0, 1, 0, 0, 0, 0, 0}};
  CHECK_THROWS_AS(action_from_scheme(n, other), Error);
}

TEST_CASE("ideals, subgroups and types match the oracle") {
  for (const auto& [name, a] : instances()) {
    CAPTURE(name);
    const auto& g = a.carrier();
    const auto rows = rows_of(a);
    CHECK(verify_ngroup_laws(a).ok);
    CHECK(n_ideals(a) == sorted(oracle::n_ideals(g, rows)));
    CHECK(n_subgroups(a) == sorted(oracle::n_subgroups(g, rows)));
    const auto t = classify(a);
    const auto o = oracle::types(g, rows);
    CHECK(t.faithful == o.faithful);
    CHECK(t.type1 == o.type1);
    CHECK(t.type2 == o.type2);
    CHECK((!t.type2 || t.type1));
    CHECK((!t.type1 || t.type0));
    for (const auto& i : normal_subgroups(g)) {
      const auto w = check_n_ideal(a, i);
      CHECK(w.has_value() != oracle::ideal_condition(g, rows, i));
      if (w) {
        CHECK(g.sub(a.at(w->m, g.add(w->gamma, w->i)), a.at(w->m, w->gamma)) == w->difference);
        CHECK(!i.contains(w->difference));
        CHECK(i.contains(w->i));
      }
    }
  }
}

TEST_CASE("generator split and classes") {
  for (const auto& [name, a] : instances()) {
    CAPTURE(name);
    const auto& g = a.carrier();
    const auto split = generators_split(a);
    const auto images = orbit_images(a);
    for (Element x : g.all()) {
      std::set<Element> img;
      for (std::size_t m = 0; m < a.size(); ++m) img.insert(a.at(m, x));
      CHECK(images[x].size() == img.size());
      CHECK(split.theta1.contains(x) == (img.size() == g.order()));
      CHECK(split.theta0.contains(x) == (img == std::set<Element>{0}));
    }
    std::size_t covered = 0;
    for (const auto& c : equiv_classes(a)) {
      covered += c.size();
      for (Element x : c) {
        for (std::size_t m = 0; m < a.size(); ++m) CHECK(a.at(m, x) == a.at(m, c[0]));
      }
    }
    CHECK(covered == g.order());
  }
}

TEST_CASE("N-automorphisms commute with the action and are closed under inverses") {
  for (const auto& [name, a] : instances()) {
    CAPTURE(name);
    const auto& g = a.carrier();
    const auto s = aut_n(a);
    std::size_t expected = 0;
    for (const auto& t : oracle::automorphisms(g)) {
      bool commutes = true;
      for (std::size_t m = 0; m < a.size() && commutes; ++m) {
        for (Element x : g.all()) commutes = commutes && t(a.at(m, x)) == a.at(m, t(x));
      }
      expected += commutes;
      CHECK(s.contains(t) == commutes);
    }
    CHECK(s.size() == expected);
    for (const auto& t : s) CHECK(s.contains(t.inverse()));
  }
}

TEST_CASE("invariant representatives meet each generator class once") {
  std::size_t tried = 0;
  for (const auto& [name, a] : instances()) {
    const auto t = classify(a);
    if (!t.type1) {
      if (t.non_generator) CHECK_THROWS_AS(invariant_representatives(a), Error);
      continue;
    }
    CAPTURE(name);
    ++tried;
    const auto s = aut_n(a);
    const ElementSet x = invariant_representatives(a, s);
    CHECK(x.contains(0));
    for (const auto& m : s) {
      for (Element e : x) CHECK(x.contains(m(e)));
    }
    for (const auto& c : equiv_classes(a)) {
      if (!t.theta1.contains(c[0])) continue;
      std::size_t hits = 0;
      for (Element e : c) hits += x.contains(e);
      CHECK(hits == 1);
    }
  }
  CHECK(tried > 5);
}

TEST_CASE("Z4 with {0,2,3} annihilated") {
  auto n = std::make_shared<const NearRing>(build_annihilating_nearring(cyclic(4), {0, 2, 3}));
  const auto a = action_from_transformation(n);
  const auto split = generators_split(a);
  CHECK(split.theta1 == ElementSet{1});
  CHECK(split.theta0 == ElementSet{0, 2, 3});
  CHECK(split.other.empty());
  const auto w = check_n_ideal(a, {0, 2});
  REQUIRE(w);
  CHECK(w->i == 2);
  CHECK(w->difference % 2 == 1);
  CHECK(is_n_subgroup(a, {0, 2}));
  const auto t = classify(a);
  CHECK(t.type1);
  CHECK(!t.type2);
  CHECK(t.subgroup_witness == ElementSet{0, 2});
  CHECK(annihilator(a, {1}) == ElementSet{0});
  CHECK(annihilator(a, {2, 3}).size() == 4);
}

TEST_CASE("Z4 with {0,3} annihilated is type 2") {
  auto n = std::make_shared<const NearRing>(build_annihilating_nearring(cyclic(4), {0, 3}));
  const auto a = action_from_transformation(n);
  CHECK(classify(a).type2);
  CHECK(!is_n_subgroup(a, {0, 2}));
}

TEST_CASE("raw tables") {
  const FiniteGroup g = cyclic(3);
  const NGroupAction twice_zero(g, {{0, 0, 0}, {0, 0, 0}, {0, 1, 2}});
  CHECK(!is_faithful(twice_zero));
  CHECK(!classify(twice_zero).faithful);
  CHECK_THROWS_AS(verify_ngroup_laws(twice_zero), Error);
  CHECK_THROWS_AS(NGroupAction(g, {{0, 0}}), Error);
  const NGroupAction ok(g, {{0, 0, 0}, {0, 1, 2}});
  CHECK(is_faithful(ok));
  CHECK(classify(ok).type2);
  CHECK_THROWS_AS(check_n_ideal(NGroupAction(symmetric3(), {std::vector<Element>(6, 0)}), {0, 1}), Error);
}
