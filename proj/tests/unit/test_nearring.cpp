#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "nearprim/error.hpp"
#include "nearprim/nearring.hpp"
#include "oracles.hpp"

using namespace nearprim;

namespace {

SandwichScheme z4(std::vector<Element> phi) { return {cyclic(4), AutomorphismSet::trivial(4), std::move(phi)}; }

/// Tables with one corrupted product.
struct Tampered {
  OperationTables t;
  std::size_t size() const { return t.n; }
  std::size_t add(std::size_t a, std::size_t b) const { return t.add(a, b); }
  std::size_t mul(std::size_t a, std::size_t b) const { return t.mul(a, b); }
};

std::vector<Element> compose(const NearRing& n, std::size_t a, std::size_t b) {
  std::vector<Element> out;
  for (Element x : n.domain()) out.push_back(n.apply(a, n.phi()[n.apply(b, x)]));
  return out;
}

}  // namespace

TEST_CASE("centralizer near-rings match a brute-force enumeration") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const auto gs = gen::group_with_s(rng, 8);
    const auto r = gen::recipe(rng, gs);
    if (!r) continue;
    const SandwichScheme sc = build_phi(*r);
    if (*centralizer_size(sc, std::size_t{1} << 40) > 4096) continue;
    if (std::pow(double(sc.gamma.order()), double(sc.x1().size())) > 3e5) continue;
    CAPTURE(gs.name);
    const NearRing n = enumerate_centralizer_nearring(sc);
    const auto expected = oracle::centralizer_functions(sc);
    REQUIRE(n.size() == expected.size());
    for (std::size_t m = 0; m < n.size(); ++m) {
      const auto v = n.values(m);
      CHECK(std::vector<Element>(v.begin(), v.end()) == expected[m]);
    }
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("arithmetic agrees with pointwise sum and sandwich product") {
  const FiniteGroup g = cyclic(7);
  const SandwichScheme sc{g, closure_as_group(g, std::vector{GroupMap({0, 6, 5, 4, 3, 2, 1})}),
                          {0, 1, 6, 0, 0, 1, 6}};
  const NearRing n = enumerate_centralizer_nearring(sc);
  REQUIRE(n.size() == 7);
  for (std::size_t a = 0; a < n.size(); ++a) {
    CHECK(n.add(a, n.neg(a)) == 0);
    for (std::size_t b = 0; b < n.size(); ++b) {
      std::vector<Element> sum;
      for (Element x : n.domain()) sum.push_back(g.add(n.apply(a, x), n.apply(b, x)));
      CHECK(n.find(sum) == n.add(a, b));
      CHECK(n.find(compose(n, a, b)) == n.mul(a, b));
      CHECK(nr_mul(n, n.element(a), n.element(b)) == n.element(n.mul(a, b)));
    }
  }
  CHECK(is_ring(n) == false);
  const auto ids = identities(n);
  CHECK(!ids.two_sided);
  CHECK(!ids.right.empty());
}

TEST_CASE("axioms hold across random schemes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto gs = gen::group_with_s(rng, 8);
    const auto r = gen::recipe(rng, gs);
    if (!r) continue;
    const SandwichScheme sc = build_phi(*r);
    if (*centralizer_size(sc, std::size_t{1} << 40) > 512) continue;
    CAPTURE(gs.name);
    const NearRing n = enumerate_centralizer_nearring(sc);
    const auto rep = verify_axioms(n);
    CHECK(rep.ok());
    CHECK(rep.exhaustive);
    CHECK(rep.triples_checked == n.size() * n.size() * n.size());
    CHECK(verify_axioms(n.tables()).ok());
  }
}

TEST_CASE("a corrupted product is caught with a witness") {
  const NearRing n = build_annihilating_nearring(cyclic(4), {0, 3});
  Tampered t{n.tables()};
  REQUIRE(verify_axioms(t).ok());
  t.t.mul_table[5 * t.t.n + 7] = t.t.mul_table[5 * t.t.n + 7] == 1 ? 2 : 1;
  const auto rep = verify_axioms(t);
  CHECK(!rep.ok());
  CHECK(!rep.failure.empty());
  REQUIRE(rep.witness);
  const auto [a, b, c] = *rep.witness;
  const bool assoc = t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c));
  const bool dist = t.mul(t.add(a, b), c) != t.add(t.mul(a, c), t.mul(b, c));
  CHECK((assoc || dist));

  Tampered z{n.tables()};
  z.t.mul_table[3 * z.t.n + 0] = 1;
  CHECK(!verify_axioms(z).zero_symmetric);
}

TEST_CASE("large near-rings use probes and no tables") {
  const FiniteGroup g = cyclic(8);
  const SandwichScheme sc{g, AutomorphismSet::trivial(8), {0, 1, 2, 3, 0, 0, 0, 0}};
  const NearRing n = enumerate_centralizer_nearring(sc);
  CHECK(n.size() == 512);
  Limits small;
  small.triple_budget = 1 << 12;
  const auto rep = verify_axioms(n, small);
  CHECK(rep.ok());
  CHECK(!rep.exhaustive);
  CHECK(rep.triples_checked == small.triple_budget);

  const SandwichScheme big{g, AutomorphismSet::trivial(8), {0, 1, 2, 3, 4, 0, 0, 0}};
  const NearRing m = enumerate_centralizer_nearring(big);
  CHECK(m.size() == 4096);
  CHECK_THROWS_AS(m.tables(), Error);
  Limits tight;
  tight.max_elements = 1000;
  CHECK_THROWS_AS(enumerate_centralizer_nearring(big, tight), Error);
}

TEST_CASE("Z4 examples as transformation near-rings") {
  const NearRing small = build_annihilating_nearring(cyclic(4), {0, 2, 3});
  CHECK(small.size() == 4);
  CHECK(small.kind() == NearRingKind::transformation);
  const NearRing large = build_annihilating_nearring(cyclic(4), {0, 3});
  CHECK(large.size() == 16);
  CHECK(verify_axioms(large).ok());

  const auto cert = restriction_isomorphism(large, z4({0, 1, 2, 0}));
  CHECK(cert.pairs.size() == 16);
  CHECK(cert.exhaustive);
  CHECK(restriction_isomorphism(small, z4({0, 1, 0, 0})).pairs.size() == 4);
  CHECK_THROWS_AS(restriction_isomorphism(small, z4({0, 1, 2, 0})), Error);
  CHECK_THROWS_AS(build_annihilating_nearring(cyclic(4), {2, 3}), Error);
}

TEST_CASE("g1 o' g2 vanishes on the small Z4 scheme") {
  const NearRing m = enumerate_centralizer_nearring(z4({0, 1, 0, 0}));
  CHECK(nr_mul(m, NrElement{{0, 1}}, NrElement{{0, 2}}) == m.element(0));
  CHECK_THROWS_AS(m.index_of(NrElement{{1, 1}}), Error);
  CHECK(!m.find(std::vector<Element>{1, 1}));
}

TEST_CASE("sandwich near-ring over the full X") {
  const NearRing n = enumerate_sandwich_nearring(cyclic(3), {0, 1, 2});
  CHECK(n.size() == 9);
  CHECK(n.kind() == NearRingKind::sandwich);
  CHECK(verify_axioms(n).ok());
  CHECK(identities(n).two_sided);
  CHECK(!is_ring(n));
}

TEST_CASE("fields are rings") {
  const FiniteGroup g = cyclic(5);
  const SandwichScheme sc{g, automorphism_group(g), {0, 1, 2, 3, 4}};
  const NearRing n = enumerate_centralizer_nearring(sc);
  CHECK(n.size() == 5);
  CHECK(is_ring(n));
  CHECK(identities(n).two_sided);
  const NearRing t = build_annihilating_nearring(cyclic(3), {0});
  const auto rc = check_ring(t);
  CHECK(!rc.ring);
  CHECK(!rc.left_distributive);
  REQUIRE(rc.witness.size() == 3);
  const auto a = rc.witness[0], b = rc.witness[1], c = rc.witness[2];
  CHECK(t.mul(a, t.add(b, c)) != t.add(t.mul(a, b), t.mul(a, c)));
}

TEST_CASE("checked pairs") {
  std::size_t calls = 0;
  CHECK(for_each_checked_pair(10, 100, [&](std::size_t, std::size_t) { return ++calls, true; }));
  CHECK(calls == 100);
  calls = 0;
  CHECK(!for_each_checked_pair(100, 1000, [&](std::size_t a, std::size_t b) {
    CHECK(a < 100);
    CHECK(b < 100);
    return ++calls, true;
  }));
  CHECK(calls == 1000);
}
