#include <sstream>
#include <string>

#include "cli.hpp"
#include "nearprim/error.hpp"
#include "nearprim/io.hpp"
#include "nearprim/primitivity.hpp"

namespace nearprim::cli {

namespace {

std::string list(std::span<const Element> xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

std::string list(const ElementSet& s) { return list(std::span<const Element>(s.members())); }

SandwichScheme z4_scheme(std::vector<Element> phi) {
  return SandwichScheme{cyclic(4), AutomorphismSet::trivial(4), std::move(phi)};
}

SandwichScheme z7_scheme() {
  const FiniteGroup g = cyclic(7);
  const GroupMap minus({0, 6, 5, 4, 3, 2, 1});
  return SandwichScheme{g, closure_as_group(g, std::vector{minus}), {0, 1, 6, 0, 0, 1, 6}};
}

SandwichScheme z15_scheme() {
  const FiniteGroup g = cyclic(15);
  AutomorphismSet s = automorphism_group(g);
  const ElementSet orbit = s.orbit(1);
  std::vector<Element> phi(15, 0);
  for (Element x : orbit) phi[x] = x;
  return SandwichScheme{g, std::move(s), std::move(phi)};
}

class Recorder {
 public:
  Recorder(std::vector<Claim>& out, std::string scenario) : out_(out), scenario_(std::move(scenario)) {}

  void claim(const std::string& name, bool passed, std::string detail = {}) {
    out_.push_back({scenario_, name, passed, std::move(detail)});
  }

  /// Runs f, turning a library error into a failed claim.
  template <class F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      claim(name, false, e.what());
    }
  }

 private:
  std::vector<Claim>& out_;
  std::string scenario_;
};

SandwichScheme fixture(const Fixtures& fixtures, const std::string& name, SandwichScheme fallback) {
  for (const auto& [key, doc] : fixtures) {
    if (key == name) return io::scheme_from_json(doc);
  }
  return fallback;
}

void z4_small(const Fixtures& fixtures, const Limits& limits, std::vector<Claim>& out) {
  Recorder r(out, "z4-small");
  const SandwichScheme scheme = fixture(fixtures, "z4-small", z4_scheme({0, 1, 0, 0}));
  r.guarded("setup", [&] {
    auto n = std::make_shared<const NearRing>(build_annihilating_nearring(cyclic(4), {0, 2, 3}, limits));
    r.claim("size", n->size() == 4, "|N| = " + std::to_string(n->size()));
    const auto a = action_from_transformation(n);
    const auto split = generators_split(a);
    r.claim("theta1", split.theta1 == ElementSet{1}, "theta1 = " + list(split.theta1));
    r.claim("theta0", split.theta0 == ElementSet{0, 2, 3}, "theta0 = " + list(split.theta0));
    const auto w = check_n_ideal(a, {0, 2});
    r.claim("ideal {0,2} rejected", w && w->i == 2 && w->difference % 2 == 1,
            w ? "m(" + std::to_string(w->gamma) + "+" + std::to_string(w->i) + ")-m(" +
                    std::to_string(w->gamma) + ") = " + std::to_string(w->difference)
              : "accepted");
    r.claim("{0,2} is an N-subgroup", is_n_subgroup(a, {0, 2}));
    const auto t = classify(a, limits);
    r.claim("type 1, not type 2", t.type1 && !t.type2,
            "type1=" + std::to_string(t.type1) + " type2=" + std::to_string(t.type2));
    r.guarded("restriction isomorphism", [&] {
      const auto cert = restriction_isomorphism(*n, scheme, limits);
      r.claim("restriction isomorphism", cert.pairs.size() == 4,
              std::to_string(cert.pairs.size()) + " pairs");
    });
    r.guarded("g1 g2 = 0", [&] {
      const NearRing m = enumerate_centralizer_nearring(scheme, limits);
      const NrElement prod = nr_mul(m, NrElement{{0, 1}}, NrElement{{0, 2}});
      r.claim("g1 g2 = 0", prod == m.element(0), "product = " + list(prod.values));
    });
  });
}

void z4_large(const Fixtures& fixtures, const Limits& limits, std::vector<Claim>& out) {
  Recorder r(out, "z4-large");
  const SandwichScheme scheme = fixture(fixtures, "z4-large", z4_scheme({0, 1, 2, 0}));
  r.guarded("setup", [&] {
    auto n = std::make_shared<const NearRing>(build_annihilating_nearring(cyclic(4), {0, 3}, limits));
    r.claim("size", n->size() == 16, "|N| = " + std::to_string(n->size()));
    const auto a = action_from_transformation(n);
    const auto t = classify(a, limits);
    r.claim("type 2", t.type2, "type2=" + std::to_string(t.type2));
    r.claim("{0,2} is not an N-subgroup", !is_n_subgroup(a, {0, 2}));
    r.guarded("restriction isomorphism", [&] {
      const auto cert = restriction_isomorphism(*n, scheme, limits);
      r.claim("restriction isomorphism", cert.pairs.size() == 16,
              std::to_string(cert.pairs.size()) + " pairs");
    });
  });
}

void z7(const Fixtures& fixtures, const Limits& limits, std::vector<Claim>& out) {
  Recorder r(out, "z7");
  const SandwichScheme expected = fixture(fixtures, "z7", z7_scheme());
  r.guarded("setup", [&] {
    const FiniteGroup g = cyclic(7);
    const GroupMap minus({0, 6, 5, 4, 3, 2, 1});
    const PhiRecipe recipe{g, closure_as_group(g, std::vector{minus}), {1, 2, 5, 6}, {6, 5}, {0}, {{5, 1}}};
    const SandwichScheme built = build_phi(recipe);
    r.claim("phi from recipe", built.phi == expected.phi && built.s == expected.s,
            "built " + list(built.phi) + ", fixture " + list(expected.phi));
    r.claim("scheme valid", validate_scheme(expected).ok());
    r.guarded("verdict", [&] {
      const auto v = cross_check(expected, limits);
      r.claim("size", v.nearring_size == 7, "|N| = " + std::to_string(v.nearring_size));
      r.claim("2-primitive", v.two_primitive && v.agree,
              "two_primitive=" + std::to_string(v.two_primitive) + " agree=" + std::to_string(v.agree));
      r.claim("right identity, no two-sided identity",
              !v.identities.right.empty() && !v.identities.two_sided,
              std::to_string(v.identities.right.size()) + " right identities");
    });
  });
}

void z15(const Fixtures& fixtures, const Limits& limits, std::vector<Claim>& out) {
  Recorder r(out, "z15");
  const SandwichScheme scheme = fixture(fixtures, "z15", z15_scheme());
  r.guarded("setup", [&] {
    const FiniteGroup g = cyclic(15);
    const AutomorphismSet aut = automorphism_group(g, limits);
    r.claim("|Aut| = 8", aut.size() == 8, std::to_string(aut.size()));
    const ElementSet orbit = aut.orbit(1);
    r.claim("|S(1)| = 8", orbit.size() == 8, list(orbit));
    r.claim("fixedpointfree on S(1)", is_fixedpointfree_on(aut, orbit));
    r.claim("not fixedpointfree on Z15 minus 0", !is_fixedpointfree_on(aut, g.nonzero()));
    r.guarded("verdict", [&] {
      const auto c = compute_c(scheme, limits);
      r.claim("C = {{0}}", c.size() == 1 && c[0] == ElementSet{0}, std::to_string(c.size()) + " members");
      const auto v = cross_check(scheme, limits);
      r.claim("1-primitive, not 2-primitive", v.one_primitive && !v.two_primitive && v.agree,
              "one=" + std::to_string(v.one_primitive) + " two=" + std::to_string(v.two_primitive) +
                  " agree=" + std::to_string(v.agree));
      r.claim("size", v.nearring_size == 15, "|N| = " + std::to_string(v.nearring_size));
    });
  });
}

}  // namespace

std::vector<Claim> paper_examples(const Fixtures& fixtures, const Limits& limits) {
  std::vector<Claim> out;
  z4_small(fixtures, limits, out);
  z4_large(fixtures, limits, out);
  z7(fixtures, limits, out);
  z15(fixtures, limits, out);
  return out;
}

}  // namespace nearprim::cli
