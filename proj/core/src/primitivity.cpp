#include "nearprim/primitivity.hpp"

#include <algorithm>
#include <string>

#include "nearprim/error.hpp"

namespace nearprim {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

NGroupAction unchecked_scheme_action(std::shared_ptr<const NearRing> n, const SandwichScheme& scheme) {
  const std::size_t order = scheme.gamma.order();
  std::vector<Element> table(n->size() * order);
  for (std::size_t m = 0; m < n->size(); ++m) {
    for (std::size_t g = 0; g < order; ++g) table[m * order + g] = n->apply(m, scheme.phi[g]);
  }
  return NGroupAction(std::move(n), scheme.gamma, std::move(table));
}

}  // namespace

std::vector<ElementSet> compute_c(const SandwichScheme& scheme, const Limits& limits) {
  require_valid(scheme);
  const auto& gamma = scheme.gamma;
  const ElementSet g0 = gamma0(scheme);
  const auto labels = orbit_labels(scheme.s);
  std::vector<ElementSet> out;
  for (auto& i : normal_subgroups(gamma, limits)) {
    if (!i.is_subset_of(g0) || !is_union_of_cosets(gamma, g0, i)) continue;
    bool same_orbits = true;
    for (std::size_t g = 0; g < gamma.order() && same_orbits; ++g) {
      const auto eg = static_cast<Element>(g);
      if (g0.contains(eg)) continue;
      for (Element x : i) {
        if (labels[scheme.phi[gamma.add(eg, x)]] != labels[scheme.phi[eg]]) {
          same_orbits = false;
          break;
        }
      }
    }
    if (same_orbits) out.push_back(std::move(i));
  }
  return out;
}

PropertyPReport property_p(const SandwichScheme& scheme, const Limits& limits) {
  PropertyPReport rep;
  rep.c_members = compute_c(scheme, limits);
  const auto& gamma = scheme.gamma;
  const std::size_t n = gamma.order();
  const ElementSet g0 = gamma0(scheme);
  const auto& phi = scheme.phi;
  for (const auto& ideal : rep.c_members) {
    std::optional<PWitness> found;
    if (ideal.size() > 1) {
      [&] {
        for (Element i : ideal) {
          for (std::size_t g1 = 0; g1 < n; ++g1) {
            const auto eg1 = static_cast<Element>(g1);
            if (g0.contains(eg1)) continue;
            for (std::size_t s = 0; s < scheme.s.size(); ++s) {
              if (phi[gamma.add(eg1, i)] != scheme.s[s](phi[eg1])) continue;
              for (std::size_t g = 0; g < n; ++g) {
                const auto eg = static_cast<Element>(g);
                if (!ideal.contains(gamma.sub(scheme.s[s](eg), eg))) {
                  found = PWitness{i, eg1, s, eg};
                  return;
                }
              }
            }
          }
        }
      }();
      if (!found && rep.holds) {
        rep.holds = false;
        rep.violation = ideal;
      }
    }
    rep.witnesses.push_back(found);
  }
  return rep;
}

TheoremSide theorem_side(const SandwichScheme& scheme, const Limits& limits) {
  const auto report = validate_scheme(scheme);
  TheoremSide t;
  t.cond_2b = report.at("phi-shape").passed && report.at("x1-nonempty").passed;
  t.cond_2c = report.at("s-automorphisms").passed && report.at("s-invariant-x").passed &&
              report.at("fixedpointfree-x1").passed;
  t.cond_2d = report.at("phi-zero").passed && report.at("phi-range").passed &&
              report.at("equivariance").passed;
  require_valid(scheme);
  t.p = property_p(scheme, limits);

  const auto& gamma = scheme.gamma;
  const ElementSet g0 = gamma0(scheme);
  for (Element g : g0) {
    if (g == 0) continue;
    const Element gens[] = {g};
    ElementSet cyc = generated_subgroup(gamma, gens);
    if (cyc.is_subset_of(g0) && (!t.gamma0_subgroup || size_then_lex(cyc, *t.gamma0_subgroup))) {
      t.gamma0_subgroup = std::move(cyc);
    }
  }
  t.gamma0_subgroup_free = !t.gamma0_subgroup;
  t.one_primitive = t.cond_2a && t.cond_2b && t.cond_2c && t.cond_2d && t.p.holds;
  t.two_primitive = t.one_primitive && t.gamma0_subgroup_free;
  return t;
}

DirectSide direct_side(const NGroupAction& action, const Limits& limits) {
  DirectSide d;
  d.laws = verify_ngroup_laws(action, limits);
  if (!d.laws.ok) {
    throw Error(Errc::internal_inconsistency, "action violates the N-group law " + d.laws.law);
  }
  d.types = classify(action, limits);
  d.one_primitive = d.types.faithful && d.types.type1;
  d.two_primitive = d.types.faithful && d.types.type2;
  return d;
}

namespace {

enum class Sides { theorem, direct, both };

PrimitivityVerdict run(const SandwichScheme& scheme, std::shared_ptr<const NearRing> nr,
                       const NGroupAction* action, const Limits& limits, Sides sides) {
  PrimitivityVerdict v;
  v.nearring_size = nr->size();
  v.ring = is_ring(*nr);
  v.applicable = !v.ring;
  v.identities = identities(*nr);
  if (sides != Sides::direct) v.theorem = theorem_side(scheme, limits);
  if (sides != Sides::theorem) {
    v.direct = action ? direct_side(*action, limits) : direct_side(unchecked_scheme_action(nr, scheme), limits);
  }
  if (v.theorem && v.direct) {
    v.agree = v.theorem->one_primitive == v.direct->one_primitive &&
              v.theorem->two_primitive == v.direct->two_primitive;
  }
  v.one_primitive = v.direct ? v.direct->one_primitive : v.theorem->one_primitive;
  v.two_primitive = v.direct ? v.direct->two_primitive : v.theorem->two_primitive;
  return v;
}

PrimitivityVerdict run(const SandwichScheme& scheme, const Limits& limits, Sides sides) {
  require_valid(scheme);
  auto nr = std::make_shared<const NearRing>(enumerate_centralizer_nearring(scheme, limits));
  return run(scheme, std::move(nr), nullptr, limits, sides);
}

}  // namespace

PrimitivityVerdict theorem_verdict(const SandwichScheme& scheme, const Limits& limits) {
  return run(scheme, limits, Sides::theorem);
}

PrimitivityVerdict direct_verdict(const SandwichScheme& scheme, const Limits& limits) {
  return run(scheme, limits, Sides::direct);
}

PrimitivityVerdict evaluate(const SandwichScheme& scheme, const Limits& limits) {
  return run(scheme, limits, Sides::both);
}

PrimitivityVerdict evaluate(const NGroupAction& action, const Limits& limits) {
  const NearRing* nr = action.nearring();
  if (!nr || !nr->scheme() || nr->kind() != NearRingKind::sandwich_centralizer) {
    throw Error(Errc::invalid_argument, "action does not come from a sandwich scheme");
  }
  if (!(action.carrier() == nr->scheme()->gamma)) {
    throw Error(Errc::invalid_argument, "action carrier differs from the scheme group");
  }
  return run(*nr->scheme(), action.shared_nearring(), &action, limits, Sides::both);
}

PrimitivityVerdict cross_check(const SandwichScheme& scheme, const Limits& limits) {
  auto v = evaluate(scheme, limits);
  if (v.applicable && !v.agree) {
    throw Error(Errc::theorem_mismatch,
                "theorem side says 1-primitive=" + std::to_string(v.theorem->one_primitive) +
                    " 2-primitive=" + std::to_string(v.theorem->two_primitive) +
                    ", direct side says 1-primitive=" + std::to_string(v.direct->one_primitive) +
                    " 2-primitive=" + std::to_string(v.direct->two_primitive));
  }
  return v;
}

EmbedResult embed(const NGroupAction& action, const Limits& limits) {
  return embed(action, automorphism_group(action.carrier(), limits), limits);
}

EmbedResult embed(const NGroupAction& action, const AutomorphismSet& full_aut, const Limits& limits) {
  const NearRing* nr = action.nearring();
  if (!nr) throw Error(Errc::invalid_argument, "embedding needs the acting near-ring");
  if (!is_faithful(action)) throw Error(Errc::not_embeddable, "action is not faithful");
  if (!classify(action, limits).type1) throw Error(Errc::not_embeddable, "action is not of type 1");

  const auto& gamma = action.carrier();
  AutomorphismSet s = aut_n(action, full_aut);
  const ElementSet x = invariant_representatives(action, s);
  std::vector<Element> phi(gamma.order(), 0);
  for (const auto& cls : equiv_classes(action)) {
    std::optional<Element> rep;
    for (Element g : cls) {
      if (x.contains(g)) rep = g;
    }
    if (!rep) throw Error(Errc::internal_inconsistency, "a ~ class has no representative");
    for (Element g : cls) phi[g] = *rep;
  }
  EmbedResult out{SandwichScheme{gamma, std::move(s), std::move(phi)}, {}, {}, 0, true};
  if (const auto* bad = validate_scheme(out.scheme).first_failure()) {
    throw Error(Errc::internal_inconsistency, "recovered scheme fails " + bad->name + ": " + bad->detail);
  }

  const NearRing m = enumerate_centralizer_nearring(out.scheme, limits);
  std::vector<char> hit(m.size(), 0);
  out.image.reserve(action.size());
  for (std::size_t n = 0; n < action.size(); ++n) {
    std::vector<Element> f(x.size());
    for (std::size_t q = 0; q < x.size(); ++q) f[q] = action.at(n, x[q]);
    const auto idx = m.find(f);
    if (!idx) throw Error(Errc::internal_inconsistency, "f_" + str(n) + " is not in the recovered near-ring");
    if (hit[*idx]) throw Error(Errc::internal_inconsistency, "embedding is not injective at " + str(n));
    hit[*idx] = 1;
    out.pairing.push_back(*idx);
    out.image.push_back(std::move(f));
  }
  out.exhaustive = for_each_checked_pair(action.size(), limits.pair_budget, [&](std::size_t a, std::size_t b) {
    ++out.pairs_checked;
    if (out.pairing[nr->add(a, b)] != m.add(out.pairing[a], out.pairing[b])) {
      throw Error(Errc::internal_inconsistency, "embedding not additive at (" + str(a) + ", " + str(b) + ")");
    }
    if (out.pairing[nr->mul(a, b)] != m.mul(out.pairing[a], out.pairing[b])) {
      throw Error(Errc::internal_inconsistency,
                  "embedding not multiplicative at (" + str(a) + ", " + str(b) + ")");
    }
    return true;
  });
  return out;
}

bool density_check(const std::vector<std::vector<Element>>& image, const SandwichScheme& scheme,
                   const Limits& limits) {
  const NearRing m = enumerate_centralizer_nearring(scheme, limits);
  std::vector<char> hit(m.size(), 0);
  std::size_t distinct = 0;
  for (const auto& f : image) {
    const auto idx = m.find(f);
    if (!idx) return false;
    if (!hit[*idx]) {
      hit[*idx] = 1;
      ++distinct;
    }
  }
  return distinct == m.size();
}

}  // namespace nearprim
