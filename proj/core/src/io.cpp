#include "nearprim/io.hpp"

#include <string>

#include "nearprim/error.hpp"

namespace nearprim::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(Errc::parse_error, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::vector<Element> elements(const json& j) { return j.get<std::vector<Element>>(); }

const char* kind_name(NearRingKind k) {
  switch (k) {
    case NearRingKind::sandwich_centralizer:
      return "sandwich-centralizer";
    case NearRingKind::sandwich:
      return "sandwich";
    case NearRingKind::transformation:
      return "transformation";
  }
  return "unknown";
}

json optional_set(const std::optional<ElementSet>& s) { return s ? to_json(*s) : json(nullptr); }

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

json to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

FiniteGroup group_from_json(const json& j) {
  auto [order, table] = guarded("group", [&] {
    return std::pair{field(j, "order").get<std::size_t>(),
                     field(j, "table").get<std::vector<std::vector<Element>>>()};
  });
  if (table.size() != order) {
    throw Error(Errc::parse_error, "table has " + std::to_string(table.size()) +
                                       " rows but order is " + std::to_string(order));
  }
  return from_cayley_table(table);
}

json to_json(const GroupMap& m) {
  return {{"image", std::vector<Element>(m.image().begin(), m.image().end())}};
}

GroupMap map_from_json(const json& j) {
  return guarded("map", [&] {
    const json& img = j.is_array() ? j : field(j, "image");
    return GroupMap(elements(img));
  });
}

json to_json(const SandwichScheme& s) {
  json autos = json::array();
  for (const auto& m : s.s) autos.push_back(std::vector<Element>(m.image().begin(), m.image().end()));
  return {{"group", to_json(s.gamma)}, {"autos", autos}, {"phi", s.phi}};
}

namespace {

AutomorphismSet autos_from_json(const json& j, const FiniteGroup& g) {
  if (!j.contains("autos")) return AutomorphismSet::trivial(g.order());
  std::vector<GroupMap> gens;
  guarded("autos", [&] {
    for (const auto& m : j.at("autos")) gens.push_back(map_from_json(m));
    return 0;
  });
  for (const auto& m : gens) {
    if (m.size() != g.order()) throw Error(Errc::invalid_argument, "automorphism of the wrong length");
  }
  return closure_as_group(g, gens);
}

}  // namespace

SandwichScheme scheme_from_json(const json& j) {
  FiniteGroup g = group_from_json(field(j, "group"));
  AutomorphismSet s = autos_from_json(j, g);
  auto phi = guarded("phi", [&] { return elements(field(j, "phi")); });
  return SandwichScheme{std::move(g), std::move(s), std::move(phi)};
}

json to_json(const PhiRecipe& r) {
  json autos = json::array();
  for (const auto& m : r.s) autos.push_back(std::vector<Element>(m.image().begin(), m.image().end()));
  json f = json::array();
  for (const auto& [e, x] : r.f) f.push_back({e, x});
  return {{"group", to_json(r.gamma)}, {"autos", autos}, {"g", r.g.members()},
          {"reps", r.reps},            {"j", r.j},         {"f", f}};
}

PhiRecipe recipe_from_json(const json& j) {
  FiniteGroup g = group_from_json(field(j, "group"));
  AutomorphismSet s = autos_from_json(j, g);
  return guarded("recipe", [&] {
    std::vector<std::pair<Element, Element>> f;
    for (const auto& p : field(j, "f")) f.emplace_back(p.at(0).get<Element>(), p.at(1).get<Element>());
    return PhiRecipe{g,
                     s,
                     ElementSet(elements(field(j, "g"))),
                     elements(field(j, "reps")),
                     field(j, "j").get<std::vector<std::size_t>>(),
                     std::move(f)};
  });
}

json to_json(const NearRing& n) {
  json elems = json::array();
  for (std::size_t m = 0; m < n.size(); ++m) {
    auto v = n.values(m);
    elems.push_back(std::vector<Element>(v.begin(), v.end()));
  }
  json out{{"kind", kind_name(n.kind())},
           {"size", n.size()},
           {"domain", n.domain()},
           {"elements", elems}};
  try {
    const auto& t = n.tables();
    json add = json::array(), mul = json::array();
    for (std::size_t a = 0; a < t.n; ++a) {
      add.push_back(std::vector<NrIndex>(t.add_table.begin() + a * t.n, t.add_table.begin() + (a + 1) * t.n));
      mul.push_back(std::vector<NrIndex>(t.mul_table.begin() + a * t.n, t.mul_table.begin() + (a + 1) * t.n));
    }
    out["tables"] = true;
    out["add"] = std::move(add);
    out["mul"] = std::move(mul);
  } catch (const Error& e) {
    if (e.code() != Errc::resource_limit) throw;
    out["tables"] = false;
  }
  return out;
}

json to_json(const ElementSet& s) { return s.members(); }

json to_json(const TypeVerdict& v) {
  return {{"faithful", v.faithful},
          {"theta0", to_json(v.theta0)},
          {"theta1", to_json(v.theta1)},
          {"other", to_json(v.other)},
          {"types", {{"type0", v.type0}, {"type1", v.type1}, {"type2", v.type2}}},
          {"witness",
           {{"ideal", optional_set(v.ideal_witness)},
            {"subgroup", optional_set(v.subgroup_witness)},
            {"non_generator", v.non_generator ? json(*v.non_generator) : json(nullptr)}}}};
}

json to_json(const AxiomReport& r) {
  return {{"ok", r.ok()},
          {"additive_group", r.additive_group},
          {"mul_associative", r.mul_associative},
          {"right_distributive", r.right_distributive},
          {"zero_symmetric", r.zero_symmetric},
          {"failure", r.failure.empty() ? json(nullptr) : json(r.failure)},
          {"witness", r.witness ? json(*r.witness) : json(nullptr)},
          {"triples_checked", r.triples_checked},
          {"exhaustive", r.exhaustive}};
}

json to_json(const SandwichScheme& scheme, const PrimitivityVerdict& v) {
  json out{{"scheme", to_json(scheme)},
           {"nearring_size", v.nearring_size},
           {"ring", v.ring},
           {"applicable", v.applicable},
           {"agree", v.agree},
           {"one_primitive", v.one_primitive},
           {"two_primitive", v.two_primitive},
           {"identities",
            {{"two_sided", v.identities.two_sided ? json(*v.identities.two_sided) : json(nullptr)},
             {"right", v.identities.right},
             {"left", v.identities.left}}}};
  json witnesses = json::object();
  if (v.theorem) {
    const auto& t = *v.theorem;
    json c = json::array();
    for (const auto& i : t.p.c_members) c.push_back(to_json(i));
    json p = json::array();
    for (const auto& w : t.p.witnesses) {
      p.push_back(w ? json{{"i", w->i}, {"gamma1", w->gamma1}, {"s", w->s}, {"gamma", w->gamma}}
                    : json(nullptr));
    }
    out["theorem"] = {{"conditions", {{"2a", t.cond_2a}, {"2b", t.cond_2b}, {"2c", t.cond_2c}, {"2d", t.cond_2d}}},
                      {"c", c},
                      {"p_holds", t.p.holds},
                      {"gamma0_subgroup_free", t.gamma0_subgroup_free},
                      {"one_primitive", t.one_primitive},
                      {"two_primitive", t.two_primitive}};
    witnesses["p"] = p;
    witnesses["p_violation"] = optional_set(t.p.violation);
    witnesses["gamma0_subgroup"] = optional_set(t.gamma0_subgroup);
  }
  if (v.direct) {
    const auto& d = *v.direct;
    out["direct"] = {{"types", to_json(d.types)},
                     {"laws", {{"ok", d.laws.ok}, {"pairs_checked", d.laws.pairs_checked}, {"exhaustive", d.laws.exhaustive}}},
                     {"one_primitive", d.one_primitive},
                     {"two_primitive", d.two_primitive}};
    witnesses["ideal"] = optional_set(d.types.ideal_witness);
    witnesses["subgroup"] = optional_set(d.types.subgroup_witness);
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

}  // namespace nearprim::io
