#include "nearprim/ngroup.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nearprim/error.hpp"

namespace nearprim {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

/// ~ classes of the carrier: class_of[g] indexes into reps (class minima).
struct ColumnClasses {
  std::vector<std::size_t> class_of;
  std::vector<Element> reps;
};

ColumnClasses column_classes(const NGroupAction& a) {
  const std::size_t n = a.carrier().order();
  std::map<std::vector<Element>, std::size_t> seen;
  ColumnClasses out;
  out.class_of.resize(n);
  std::vector<Element> column(a.size());
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t m = 0; m < a.size(); ++m) column[m] = a.at(m, static_cast<Element>(g));
    auto [it, inserted] = seen.emplace(column, out.reps.size());
    if (inserted) out.reps.push_back(static_cast<Element>(g));
    out.class_of[g] = it->second;
  }
  return out;
}

/// Differences m . g1 - m . g2 realized over all m, per pair of ~ classes.
/// Computed on demand; one scan of N per class pair.
class DifferenceOracle {
 public:
  explicit DifferenceOracle(const NGroupAction& a)
      : a_(a), classes_(column_classes(a)), cache_(classes_.reps.size() * classes_.reps.size()) {}

  std::size_t class_of(Element g) const { return classes_.class_of[g]; }

  const std::vector<char>& differences(std::size_t c1, std::size_t c2) {
    auto& slot = cache_[c1 * classes_.reps.size() + c2];
    if (slot.empty()) {
      const auto& gamma = a_.carrier();
      slot.assign(gamma.order(), 0);
      const Element g1 = classes_.reps[c1], g2 = classes_.reps[c2];
      for (std::size_t m = 0; m < a_.size(); ++m) slot[gamma.sub(a_.at(m, g1), a_.at(m, g2))] = 1;
    }
    return slot;
  }

  std::optional<IdealWitness> check(const ElementSet& ideal) {
    const auto& gamma = a_.carrier();
    const std::size_t n = gamma.order();
    const auto in_ideal = ideal.mask(n);
    for (std::size_t g = 0; g < n; ++g) {
      const auto eg = static_cast<Element>(g);
      for (Element i : ideal) {
        const Element gi = gamma.add(eg, i);
        const std::size_t c1 = class_of(gi), c2 = class_of(eg);
        if (c1 == c2) continue;
        const auto& diff = differences(c1, c2);
        bool bad = false;
        for (std::size_t d = 0; d < n && !bad; ++d) bad = diff[d] && !in_ideal[d];
        if (!bad) continue;
        for (std::size_t m = 0; m < a_.size(); ++m) {
          const Element d = gamma.sub(a_.at(m, gi), a_.at(m, eg));
          if (!in_ideal[d]) return IdealWitness{m, eg, i, d};
        }
      }
    }
    return std::nullopt;
  }

 private:
  const NGroupAction& a_;
  ColumnClasses classes_;
  std::vector<std::vector<char>> cache_;
};

bool is_trivial(const FiniteGroup& g, const ElementSet& s) {
  return s.size() == 1 || s.size() == g.order();
}

}  // namespace

NGroupAction::NGroupAction(FiniteGroup carrier, const std::vector<std::vector<Element>>& rows)
    : carrier_(std::move(carrier)), size_(rows.size()) {
  const std::size_t n = carrier_.order();
  if (rows.empty()) throw Error(Errc::invalid_argument, "action table has no rows");
  act_.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(Errc::invalid_argument, "action row of wrong length");
    for (Element g : r) {
      if (g >= n) throw Error(Errc::invalid_argument, "action value out of range");
      act_.push_back(g);
    }
  }
}

NGroupAction::NGroupAction(std::shared_ptr<const NearRing> nearring, FiniteGroup carrier,
                           std::vector<Element> table)
    : carrier_(std::move(carrier)),
      size_(nearring ? nearring->size() : 0),
      act_(std::move(table)),
      nearring_(std::move(nearring)) {
  if (!nearring_) throw Error(Errc::invalid_argument, "null near-ring");
  if (act_.size() != size_ * carrier_.order()) {
    throw Error(Errc::invalid_argument, "action table has the wrong size");
  }
}

NGroupAction action_from_scheme(std::shared_ptr<const NearRing> n, const SandwichScheme& scheme,
                                const Limits& limits) {
  if (!n || !n->scheme() || !(*n->scheme() == scheme)) {
    throw Error(Errc::invalid_argument, "near-ring was not built from this scheme");
  }
  const std::size_t order = scheme.gamma.order();
  std::vector<Element> table(n->size() * order);
  for (std::size_t m = 0; m < n->size(); ++m) {
    for (std::size_t g = 0; g < order; ++g) table[m * order + g] = n->apply(m, scheme.phi[g]);
  }
  NGroupAction a(std::move(n), scheme.gamma, std::move(table));
  const auto laws = verify_ngroup_laws(a, limits);
  if (!laws.ok) {
    throw Error(Errc::internal_inconsistency,
                "sandwich action violates " + laws.law + " at (" + str((*laws.witness)[0]) + ", " +
                    str((*laws.witness)[1]) + ", " + str((*laws.witness)[2]) + ")");
  }
  return a;
}

NGroupAction action_from_transformation(std::shared_ptr<const NearRing> n) {
  if (!n || n->kind() != NearRingKind::transformation) {
    throw Error(Errc::invalid_argument, "expected a transformation near-ring");
  }
  const std::size_t order = n->gamma().order();
  std::vector<Element> table(n->size() * order);
  for (std::size_t m = 0; m < n->size(); ++m) {
    for (std::size_t g = 0; g < order; ++g) table[m * order + g] = n->apply(m, static_cast<Element>(g));
  }
  FiniteGroup carrier = n->gamma();
  return NGroupAction(std::move(n), std::move(carrier), std::move(table));
}

LawReport verify_ngroup_laws(const NGroupAction& a, const Limits& limits) {
  const NearRing* nr = a.nearring();
  if (!nr) throw Error(Errc::invalid_argument, "raw action tables carry no near-ring");
  const auto& gamma = a.carrier();
  const std::size_t order = gamma.order();
  LawReport rep;
  for (std::size_t g = 0; g < order; ++g) {
    if (a.at(0, static_cast<Element>(g)) != 0) {
      rep.ok = false;
      rep.law = "zero action";
      rep.witness = std::array<std::size_t, 3>{0, 0, g};
      return rep;
    }
  }
  rep.exhaustive = for_each_checked_pair(a.size(), limits.pair_budget, [&](std::size_t m1, std::size_t m2) {
    ++rep.pairs_checked;
    const std::size_t sum = nr->add(m1, m2), prod = nr->mul(m1, m2);
    for (std::size_t g = 0; g < order; ++g) {
      const auto eg = static_cast<Element>(g);
      if (a.at(sum, eg) != gamma.add(a.at(m1, eg), a.at(m2, eg))) {
        rep.law = "additivity";
      } else if (a.at(prod, eg) != a.at(m1, a.at(m2, eg))) {
        rep.law = "associativity";
      } else {
        continue;
      }
      rep.ok = false;
      rep.witness = std::array<std::size_t, 3>{m1, m2, g};
      return false;
    }
    return true;
  });
  return rep;
}

bool is_faithful(const NGroupAction& a) {
  return annihilator(a, a.carrier().all()).size() == 1;
}

ElementSet annihilator(const NGroupAction& a, const ElementSet& d) {
  a.carrier().check_members(d);
  std::vector<Element> out;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (std::all_of(d.begin(), d.end(), [&](Element g) { return a.at(m, g) == 0; })) {
      out.push_back(static_cast<Element>(m));
    }
  }
  return ElementSet(std::move(out));
}

std::vector<ElementSet> orbit_images(const NGroupAction& a) {
  const std::size_t n = a.carrier().order();
  std::vector<ElementSet> out;
  out.reserve(n);
  std::vector<char> hit(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t m = 0; m < a.size(); ++m) hit[a.at(m, static_cast<Element>(g))] = 1;
    out.push_back(ElementSet::from_mask(hit));
  }
  return out;
}

GeneratorSplit generators_split(const NGroupAction& a) {
  const std::size_t n = a.carrier().order();
  const auto images = orbit_images(a);
  std::vector<Element> t1, t0, other;
  for (std::size_t g = 0; g < n; ++g) {
    const auto eg = static_cast<Element>(g);
    if (images[g].size() == n) {
      t1.push_back(eg);
    } else if (images[g].size() == 1) {
      t0.push_back(eg);
    } else {
      other.push_back(eg);
    }
  }
  // With n == 1 the single element lands in theta1; it is also annihilated.
  if (n == 1) return {ElementSet{}, ElementSet{0}, ElementSet{}};
  return {ElementSet(std::move(t1)), ElementSet(std::move(t0)), ElementSet(std::move(other))};
}

std::optional<IdealWitness> check_n_ideal(const NGroupAction& a, const ElementSet& ideal) {
  a.carrier().check_members(ideal);
  if (!is_normal_subgroup(a.carrier(), ideal)) {
    throw Error(Errc::invalid_argument, "candidate N-ideal is not a normal subgroup");
  }
  DifferenceOracle oracle(a);
  return oracle.check(ideal);
}

bool is_n_subgroup(const NGroupAction& a, const ElementSet& k) {
  a.carrier().check_members(k);
  if (!is_subgroup(a.carrier(), k)) return false;
  for (Element g : k) {
    for (std::size_t m = 0; m < a.size(); ++m) {
      if (!k.contains(a.at(m, g))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> n_ideals(const NGroupAction& a, const Limits& limits) {
  DifferenceOracle oracle(a);
  std::vector<ElementSet> out;
  for (auto& i : normal_subgroups(a.carrier(), limits)) {
    if (!oracle.check(i)) out.push_back(std::move(i));
  }
  return out;
}

std::vector<ElementSet> n_subgroups(const NGroupAction& a, const Limits& limits) {
  const auto images = orbit_images(a);
  std::vector<ElementSet> out;
  for (auto& k : subgroups(a.carrier(), limits)) {
    if (std::all_of(k.begin(), k.end(), [&](Element g) { return images[g].is_subset_of(k); })) {
      out.push_back(std::move(k));
    }
  }
  return out;
}

TypeVerdict classify(const NGroupAction& a, const Limits& limits) {
  const auto& gamma = a.carrier();
  TypeVerdict v;
  v.faithful = is_faithful(a);
  auto split = generators_split(a);
  v.theta0 = std::move(split.theta0);
  v.theta1 = std::move(split.theta1);
  v.other = std::move(split.other);
  if (!v.other.empty()) v.non_generator = v.other[0];

  for (const auto& i : n_ideals(a, limits)) {
    if (!is_trivial(gamma, i)) {
      v.ideal_witness = i;
      break;
    }
  }
  for (const auto& k : n_subgroups(a, limits)) {
    if (!is_trivial(gamma, k)) {
      v.subgroup_witness = k;
      break;
    }
  }
  const bool nontrivial = gamma.order() > 1;
  bool acts = false;
  for (std::size_t m = 0; m < a.size() && !acts; ++m) {
    for (Element g : a.row(m)) acts = acts || g != 0;
  }
  v.type0 = nontrivial && !v.ideal_witness && !v.theta1.empty();
  v.type1 = v.type0 && v.other.empty();
  v.type2 = nontrivial && acts && !v.subgroup_witness;
  if (v.type2 && !v.type1 && a.nearring()) {
    throw Error(Errc::internal_inconsistency, "type 2 action that is not of type 1");
  }
  return v;
}

std::vector<ElementSet> equiv_classes(const NGroupAction& a) {
  const auto cc = column_classes(a);
  std::vector<std::vector<Element>> members(cc.reps.size());
  for (std::size_t g = 0; g < cc.class_of.size(); ++g) {
    members[cc.class_of[g]].push_back(static_cast<Element>(g));
  }
  std::vector<ElementSet> out;
  for (auto& m : members) out.emplace_back(std::move(m));
  return out;
}

AutomorphismSet aut_n(const NGroupAction& a, const Limits& limits) {
  return aut_n(a, automorphism_group(a.carrier(), limits));
}

AutomorphismSet aut_n(const NGroupAction& a, const AutomorphismSet& full_aut) {
  const std::size_t n = a.carrier().order();
  if (full_aut.degree() != n) throw Error(Errc::invalid_argument, "automorphisms of the wrong degree");
  std::vector<GroupMap> keep;
  for (const auto& s : full_aut) {
    bool ok = true;
    for (std::size_t m = 0; m < a.size() && ok; ++m) {
      for (std::size_t g = 0; g < n && ok; ++g) {
        const auto eg = static_cast<Element>(g);
        ok = s(a.at(m, eg)) == a.at(m, s(eg));
      }
    }
    if (ok) keep.push_back(s);
  }
  try {
    return AutomorphismSet(std::move(keep));
  } catch (const Error& e) {
    throw Error(Errc::internal_inconsistency, std::string("N-automorphisms not a group: ") + e.what());
  }
}

ElementSet invariant_representatives(const NGroupAction& a, const Limits& limits) {
  return invariant_representatives(a, aut_n(a, limits));
}

ElementSet invariant_representatives(const NGroupAction& a, const AutomorphismSet& s) {
  const auto split = generators_split(a);
  if (!split.other.empty()) {
    throw Error(Errc::not_type_1, "N" + str(split.other[0]) + " is neither {0} nor the whole group");
  }
  const auto cc = column_classes(a);
  std::vector<char> represented(cc.reps.size(), 0);
  represented[cc.class_of[0]] = 1;
  std::vector<Element> x{0};
  for (Element g : split.theta1) {
    if (represented[cc.class_of[g]]) continue;
    for (Element y : s.orbit(g)) {
      if (represented[cc.class_of[y]]) {
        throw Error(Errc::internal_inconsistency,
                    "orbit of " + str(g) + " meets an already represented class at " + str(y));
      }
      represented[cc.class_of[y]] = 1;
      x.push_back(y);
    }
  }
  return ElementSet(std::move(x));
}

}  // namespace nearprim
