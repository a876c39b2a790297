#include "nearprim/sandwich.hpp"

#include <algorithm>
#include <string>

#include "nearprim/error.hpp"

namespace nearprim {

ElementSet SandwichScheme::x() const {
  std::vector<Element> out;
  for (std::size_t g = 0; g < phi.size(); ++g) {
    if (phi[g] == g) out.push_back(static_cast<Element>(g));
  }
  return ElementSet(std::move(out));
}

ElementSet SandwichScheme::x1() const { return x().set_difference(ElementSet{0}); }

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const SchemeCheck& ValidationReport::at(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw Error(Errc::invalid_argument, "no check named " + std::string(name));
}

const SchemeCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

constexpr const char* kCheckNames[] = {"phi-shape",     "phi-zero",     "phi-range",
                                       "s-automorphisms", "s-invariant-x", "equivariance",
                                       "x1-nonempty",   "fixedpointfree-x1"};

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

ValidationReport validate_scheme(const SandwichScheme& scheme) {
  ValidationReport report;
  for (const char* name : kCheckNames) report.checks.push_back({name, true, {}, {}, {}});
  auto check = [&](std::size_t idx) -> SchemeCheck& { return report.checks[idx]; };

  const auto& g = scheme.gamma;
  const auto& phi = scheme.phi;
  const auto& s = scheme.s;
  const std::size_t n = g.order();

  bool shape_ok = phi.size() == n && s.degree() == n;
  for (std::size_t i = 0; shape_ok && i < phi.size(); ++i) shape_ok = phi[i] < n;
  if (!shape_ok) {
    check(0).passed = false;
    check(0).detail = "phi must have length " + str(n) + " with entries < " + str(n) +
                      ", and every map in S must have length " + str(n);
    for (std::size_t i = 1; i < report.checks.size(); ++i) {
      check(i).passed = false;
      check(i).detail = "not evaluated";
    }
    return report;
  }

  if (phi[0] != 0) {
    check(1).passed = false;
    check(1).gamma = 0;
    check(1).detail = "phi(0) = " + str(phi[0]);
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (phi[phi[x]] != phi[x]) {
      check(2).passed = false;
      check(2).gamma = static_cast<Element>(x);
      check(2).detail = "phi(" + str(x) + ") = " + str(phi[x]) + " is not fixed by phi";
      break;
    }
  }

  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_automorphism(g, s[i])) {
      check(3).passed = false;
      check(3).s = i;
      check(3).detail = "map " + str(i) + " is not an automorphism of gamma";
      break;
    }
  }

  const ElementSet x = scheme.x();
  [&] {
    for (Element e : x) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!x.contains(s[i](e))) {
          check(4).passed = false;
          check(4).gamma = e;
          check(4).s = i;
          check(4).detail = "s(" + str(e) + ") = " + str(s[i](e)) + " leaves X";
          return;
        }
      }
    }
  }();

  [&] {
    for (std::size_t gm = 0; gm < n; ++gm) {
      const auto e = static_cast<Element>(gm);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (phi[s[i](e)] != s[i](phi[e])) {
          check(5).passed = false;
          check(5).gamma = e;
          check(5).s = i;
          check(5).detail = "phi(s(" + str(e) + ")) = " + str(phi[s[i](e)]) + " but s(phi(" +
                            str(e) + ")) = " + str(s[i](phi[e]));
          return;
        }
      }
    }
  }();

  if (x.size() < 2) {
    check(6).passed = false;
    check(6).detail = "X1 is empty";
  }

  [&] {
    for (Element e : x) {
      if (e == 0) continue;
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i](e) == e) {
          check(7).passed = false;
          check(7).gamma = e;
          check(7).s = i;
          check(7).detail = "non-identity map " + str(i) + " fixes " + str(e);
          return;
        }
      }
    }
  }();
  return report;
}

void require_valid(const SandwichScheme& scheme) {
  const auto report = validate_scheme(scheme);
  if (const auto* bad = report.first_failure()) {
    throw Error(Errc::invalid_argument, "invalid scheme: " + bad->name + ": " + bad->detail);
  }
}

ElementSet gamma0(const SandwichScheme& scheme) {
  std::vector<Element> out;
  for (std::size_t g = 0; g < scheme.phi.size(); ++g) {
    if (scheme.phi[g] == 0) out.push_back(static_cast<Element>(g));
  }
  return ElementSet(std::move(out));
}

std::size_t x1_orbit_count(const SandwichScheme& scheme) {
  return orbits(scheme.s, scheme.x1()).size();
}

std::optional<std::size_t> centralizer_size(const SandwichScheme& scheme, std::size_t cap) {
  const std::size_t k = x1_orbit_count(scheme);
  const std::size_t n = scheme.gamma.order();
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (size > cap / n) return std::nullopt;
    size *= n;
  }
  if (size > cap) return std::nullopt;
  return size;
}

SandwichScheme build_phi(const PhiRecipe& recipe) {
  const auto& gamma = recipe.gamma;
  const auto& s = recipe.s;
  const std::size_t n = gamma.order();
  auto fail = [](const std::string& why) { throw Error(Errc::invalid_recipe, why); };

  if (s.degree() != n) fail("automorphisms have the wrong length");
  for (const auto& m : s) {
    if (!is_automorphism(gamma, m)) fail("S contains a non-automorphism");
  }
  if (!recipe.g.empty() && recipe.g.members().back() >= n) fail("G has an element out of range");
  if (recipe.g.contains(0)) fail("G contains 0");
  if (recipe.j.empty()) fail("J is empty");

  std::vector<ElementSet> g_orbits;
  try {
    if (!is_fixedpointfree_on(s, recipe.g)) fail("S is not fixedpointfree on G");
    g_orbits = orbits(s, recipe.g);
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_recipe) throw;
    fail(std::string("G is not S-invariant: ") + e.what());
  }

  // Each representative must pick out a distinct orbit, and all orbits.
  const auto labels = orbit_labels(s);
  std::vector<Element> rep_labels;
  for (Element e : recipe.reps) {
    if (!recipe.g.contains(e)) fail("representative " + str(e) + " is not in G");
    rep_labels.push_back(labels[e]);
  }
  std::sort(rep_labels.begin(), rep_labels.end());
  if (std::adjacent_find(rep_labels.begin(), rep_labels.end()) != rep_labels.end()) {
    fail("two representatives share an orbit");
  }
  if (rep_labels.size() != g_orbits.size()) fail("representatives do not cover every orbit of G");

  std::vector<char> in_j(recipe.reps.size(), 0);
  for (std::size_t j : recipe.j) {
    if (j >= recipe.reps.size()) fail("J index " + str(j) + " out of range");
    if (in_j[j]) fail("J index " + str(j) + " repeated");
    in_j[j] = 1;
  }

  std::vector<Element> phi(n, 0);
  std::vector<char> in_x1(n, 0);
  for (std::size_t j : recipe.j) {
    for (Element x : s.orbit(recipe.reps[j])) {
      phi[x] = x;
      in_x1[x] = 1;
    }
  }

  std::vector<char> f_seen(recipe.reps.size(), 0);
  for (const auto& [ek, target] : recipe.f) {
    auto it = std::find(recipe.reps.begin(), recipe.reps.end(), ek);
    if (it == recipe.reps.end()) fail("f is defined on " + str(ek) + ", which is not a representative");
    const auto k = static_cast<std::size_t>(it - recipe.reps.begin());
    if (in_j[k]) fail("f is defined on " + str(ek) + ", which is in J");
    if (f_seen[k]) fail("f is defined twice on " + str(ek));
    f_seen[k] = 1;
    if (target >= n || !in_x1[target]) fail("f(" + str(ek) + ") = " + str(target) + " lies outside X1");
    // gamma = s(e_k) has a unique s by fixedpointfreeness on G.
    for (const auto& m : s) phi[m(ek)] = m(target);
  }
  for (std::size_t k = 0; k < recipe.reps.size(); ++k) {
    if (!in_j[k] && !f_seen[k]) fail("f is undefined on " + str(recipe.reps[k]));
  }

  SandwichScheme scheme{gamma, s, std::move(phi)};
  if (const auto* bad = validate_scheme(scheme).first_failure()) {
    throw Error(Errc::internal_inconsistency, "constructed phi fails " + bad->name + ": " + bad->detail);
  }
  return scheme;
}

PhiRecipe decompose_phi(const SandwichScheme& scheme) {
  require_valid(scheme);
  const ElementSet g = scheme.gamma.all().set_difference(gamma0(scheme));
  const ElementSet x1 = scheme.x1();
  PhiRecipe recipe{scheme.gamma, scheme.s, g, orbit_representatives(scheme.s, g), {}, {}};
  for (std::size_t i = 0; i < recipe.reps.size(); ++i) {
    const Element e = recipe.reps[i];
    if (x1.contains(e)) {
      recipe.j.push_back(i);
    } else {
      recipe.f.emplace_back(e, scheme.phi[e]);
    }
  }
  return recipe;
}

std::size_t for_each_canonical_scheme(const FiniteGroup& gamma, const AutomorphismSet& s,
                                      std::size_t max_elements,
                                      const std::function<void(const SandwichScheme&)>& visit) {
  const std::size_t n = gamma.order();
  std::size_t max_k = 0;
  for (std::size_t size = n; size <= max_elements && max_k < n; size *= n) {
    ++max_k;
    if (n == 1) break;
  }
  // Orbits on which S acts regularly are the only admissible pieces of G.
  std::vector<ElementSet> regular;
  for (auto& o : orbits(s, gamma.nonzero())) {
    if (o.size() == s.size()) regular.push_back(std::move(o));
  }
  const std::size_t r = regular.size();
  std::size_t visited = 0;

  // state[i]: 0 = outside G, 1 = in J, 2 = in K.
  std::vector<int> state(r, 0);
  auto emit = [&]() {
    std::size_t j_count = 0;
    std::vector<Element> g_members, x1, k_reps;
    PhiRecipe recipe{gamma, s, {}, {}, {}, {}};
    for (std::size_t i = 0; i < r; ++i) {
      if (state[i] == 0) continue;
      g_members.insert(g_members.end(), regular[i].begin(), regular[i].end());
      recipe.reps.push_back(regular[i][0]);
      if (state[i] == 1) {
        ++j_count;
        recipe.j.push_back(recipe.reps.size() - 1);
        x1.insert(x1.end(), regular[i].begin(), regular[i].end());
      } else {
        k_reps.push_back(regular[i][0]);
      }
    }
    if (j_count == 0 || j_count > max_k) return;
    recipe.g = ElementSet(std::move(g_members));
    std::sort(x1.begin(), x1.end());
    std::vector<std::size_t> choice(k_reps.size(), 0);
    while (true) {
      recipe.f.clear();
      for (std::size_t i = 0; i < k_reps.size(); ++i) recipe.f.emplace_back(k_reps[i], x1[choice[i]]);
      visit(build_phi(recipe));
      ++visited;
      std::size_t pos = choice.size();
      while (pos > 0) {
        --pos;
        if (++choice[pos] < x1.size()) break;
        choice[pos] = 0;
        if (pos == 0) return;
      }
      if (choice.empty()) return;
    }
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == r) {
      emit();
      return;
    }
    for (int st = 0; st < 3; ++st) {
      state[i] = st;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return visited;
}

}  // namespace nearprim
