#include "nearprim/nearring.hpp"

#include <mutex>
#include <string>

#include "nearprim/error.hpp"

namespace nearprim {

struct NearRing::TableCache {
  std::once_flag once;
  OperationTables tables;
};

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) {
      throw Error(Errc::resource_limit, "near-ring would have " + str(base) + "^" + str(exp) +
                                            " elements, cap is " + str(cap));
    }
    out *= base;
  }
  if (out > cap) {
    throw Error(Errc::resource_limit,
                "near-ring would have " + str(out) + " elements, cap is " + str(cap));
  }
  return out;
}

}  // namespace

/// Fills a NearRing from its free coordinates. Position q of the domain
/// takes the value s[map[q]](c[source[q]]), or 0 when source[q] < 0.
class NearRingBuilder {
 public:
  static NearRing build(NearRingKind kind, const FiniteGroup& gamma, std::vector<Element> domain,
                        std::vector<Element> phi, std::optional<SandwichScheme> scheme,
                        const AutomorphismSet& s, std::vector<std::size_t> coords,
                        std::vector<long> source, std::vector<std::size_t> map,
                        const Limits& limits) {
    NearRing r;
    r.kind_ = kind;
    r.gamma_ = gamma;
    r.domain_ = std::move(domain);
    r.phi_ = std::move(phi);
    r.scheme_ = std::move(scheme);
    r.coords_ = std::move(coords);
    r.max_table_elements_ = limits.max_table_elements;
    r.cache_ = std::make_shared<NearRing::TableCache>();
    const std::size_t n = gamma.order();
    const std::size_t d = r.domain_.size();
    r.pos_.assign(n, d);
    for (std::size_t q = 0; q < d; ++q) r.pos_[r.domain_[q]] = q;
    r.size_ = checked_power(n, r.coords_.size(), limits.max_elements);

    r.values_.assign(r.size_ * d, 0);
    const std::size_t k = r.coords_.size();
    std::vector<Element> digits(k, 0);
    for (std::size_t idx = 0; idx < r.size_; ++idx) {
      Element* row = r.values_.data() + idx * d;
      for (std::size_t q = 0; q < d; ++q) {
        row[q] = source[q] < 0 ? 0 : s[map[q]](digits[static_cast<std::size_t>(source[q])]);
      }
      for (std::size_t j = k; j-- > 0;) {
        if (++digits[j] < n) break;
        digits[j] = 0;
      }
    }
    return r;
  }
};

NrElement NearRing::element(std::size_t m) const {
  auto v = values(m);
  return NrElement{std::vector<Element>(v.begin(), v.end())};
}

std::optional<std::size_t> NearRing::position(Element x) const {
  if (x >= pos_.size() || pos_[x] == domain_.size()) return std::nullopt;
  return pos_[x];
}

std::optional<NrIndex> NearRing::find(std::span<const Element> vals) const {
  if (vals.size() != domain_.size()) return std::nullopt;
  const std::size_t n = gamma_.order();
  std::size_t idx = 0;
  for (std::size_t p : coords_) {
    if (vals[p] >= n) return std::nullopt;
    idx = idx * n + vals[p];
  }
  auto mine = values(idx);
  if (!std::equal(mine.begin(), mine.end(), vals.begin())) return std::nullopt;
  return static_cast<NrIndex>(idx);
}

NrIndex NearRing::index_of(const NrElement& e) const {
  if (auto idx = find(e.values)) return *idx;
  throw Error(Errc::invalid_argument, "element is not a member of the near-ring");
}

NrIndex NearRing::add(std::size_t a, std::size_t b) const {
  const std::size_t n = gamma_.order();
  auto va = values(a), vb = values(b);
  std::size_t idx = 0;
  for (std::size_t p : coords_) idx = idx * n + gamma_.add(va[p], vb[p]);
  return static_cast<NrIndex>(idx);
}

NrIndex NearRing::neg(std::size_t a) const {
  const std::size_t n = gamma_.order();
  auto va = values(a);
  std::size_t idx = 0;
  for (std::size_t p : coords_) idx = idx * n + gamma_.neg(va[p]);
  return static_cast<NrIndex>(idx);
}

NrIndex NearRing::mul(std::size_t a, std::size_t b) const {
  const std::size_t n = gamma_.order();
  auto va = values(a), vb = values(b);
  std::size_t idx = 0;
  for (std::size_t p : coords_) idx = idx * n + va[pos_[phi_[vb[p]]]];
  return static_cast<NrIndex>(idx);
}

const OperationTables& NearRing::tables() const {
  if (size_ > max_table_elements_) {
    throw Error(Errc::resource_limit, "operation tables capped at " + str(max_table_elements_) +
                                          " elements, near-ring has " + str(size_));
  }
  std::call_once(cache_->once, [this] {
    OperationTables t;
    t.n = size_;
    t.add_table.resize(size_ * size_);
    t.mul_table.resize(size_ * size_);
    const std::size_t d = domain_.size();
    std::vector<Element> sum(d), prod(d);
    for (std::size_t a = 0; a < size_; ++a) {
      auto va = values(a);
      for (std::size_t b = 0; b < size_; ++b) {
        auto vb = values(b);
        for (std::size_t q = 0; q < d; ++q) {
          sum[q] = gamma_.add(va[q], vb[q]);
          prod[q] = va[pos_[phi_[vb[q]]]];
        }
        const auto s = find(sum), p = find(prod);
        if (!s || !p || *s != add(a, b) || *p != mul(a, b)) {
          throw Error(Errc::internal_inconsistency,
                      "near-ring not closed at (" + str(a) + ", " + str(b) + ")");
        }
        t.add_table[a * size_ + b] = *s;
        t.mul_table[a * size_ + b] = *p;
      }
    }
    cache_->tables = std::move(t);
  });
  return cache_->tables;
}

NearRing enumerate_centralizer_nearring(const SandwichScheme& scheme, const Limits& limits) {
  require_valid(scheme);
  const ElementSet x = scheme.x();
  std::vector<Element> domain(x.begin(), x.end());
  const std::size_t d = domain.size();
  std::vector<std::size_t> pos(scheme.gamma.order());
  for (std::size_t q = 0; q < d; ++q) pos[domain[q]] = q;

  std::vector<std::size_t> coords;
  std::vector<long> source(d, -1);
  std::vector<std::size_t> map(d, 0);
  for (Element rep : orbit_representatives(scheme.s, scheme.x1())) {
    const long j = static_cast<long>(coords.size());
    coords.push_back(pos[rep]);
    // S acts regularly on the orbit, so each member is s(rep) for one s.
    for (std::size_t i = 0; i < scheme.s.size(); ++i) {
      const std::size_t q = pos[scheme.s[i](rep)];
      source[q] = j;
      map[q] = i;
    }
  }
  return NearRingBuilder::build(NearRingKind::sandwich_centralizer, scheme.gamma, std::move(domain), scheme.phi, scheme, scheme.s,
                                std::move(coords), std::move(source), std::move(map), limits);
}

NearRing enumerate_sandwich_nearring(const FiniteGroup& gamma, std::vector<Element> phi,
                                     const Limits& limits) {
  SandwichScheme scheme{gamma, AutomorphismSet::trivial(gamma.order()), std::move(phi)};
  require_valid(scheme);
  const ElementSet x = scheme.x();
  std::vector<Element> domain(x.begin(), x.end());
  const std::size_t d = domain.size();
  std::vector<std::size_t> coords;
  std::vector<long> source(d, -1);
  for (std::size_t q = 1; q < d; ++q) {
    source[q] = static_cast<long>(coords.size());
    coords.push_back(q);
  }
  return NearRingBuilder::build(NearRingKind::sandwich, gamma, std::move(domain), scheme.phi,
                                scheme, scheme.s, std::move(coords), std::move(source),
                                std::vector<std::size_t>(d, 0), limits);
}

NearRing build_annihilating_nearring(const FiniteGroup& gamma, const ElementSet& annihilated,
                                     const Limits& limits) {
  gamma.check_members(annihilated);
  if (!annihilated.contains(0)) {
    throw Error(Errc::invalid_argument, "the annihilated set must contain 0");
  }
  const std::size_t n = gamma.order();
  std::vector<Element> domain(n), phi(n);
  std::vector<std::size_t> coords;
  std::vector<long> source(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    domain[g] = phi[g] = static_cast<Element>(g);
    if (!annihilated.contains(static_cast<Element>(g))) {
      source[g] = static_cast<long>(coords.size());
      coords.push_back(g);
    }
  }
  return NearRingBuilder::build(NearRingKind::transformation, gamma, std::move(domain),
                                std::move(phi), std::nullopt, AutomorphismSet::trivial(n),
                                std::move(coords), std::move(source), std::vector<std::size_t>(n, 0),
                                limits);
}

NrElement nr_mul(const NearRing& n, const NrElement& a, const NrElement& b) {
  if (!n.find(a.values)) throw Error(Errc::invalid_argument, "left factor is not a member");
  if (!n.find(b.values)) throw Error(Errc::invalid_argument, "right factor is not a member");
  NrElement out{std::vector<Element>(n.degree())};
  for (std::size_t q = 0; q < n.degree(); ++q) {
    out.values[q] = a.values[*n.position(n.phi()[b.values[q]])];
  }
  if (!n.find(out.values)) {
    throw Error(Errc::internal_inconsistency, "product left the near-ring");
  }
  return out;
}

IsomorphismCertificate restriction_isomorphism(const NearRing& n, const SandwichScheme& scheme,
                                               const Limits& limits) {
  auto fail = [](const std::string& why) { throw Error(Errc::not_isomorphic, why); };
  if (n.kind() != NearRingKind::transformation) {
    throw Error(Errc::invalid_argument, "restriction needs a transformation near-ring");
  }
  if (!(scheme.gamma == n.gamma())) fail("the scheme lives on a different group");
  const NearRing m = enumerate_centralizer_nearring(scheme, limits);
  if (m.size() != n.size()) {
    fail("size mismatch: " + str(n.size()) + " vs " + str(m.size()));
  }
  const ElementSet x = scheme.x();
  IsomorphismCertificate cert;
  std::vector<NrIndex> h(n.size());
  std::vector<char> hit(m.size(), 0);
  std::vector<Element> restricted(x.size());
  for (std::size_t f = 0; f < n.size(); ++f) {
    for (std::size_t q = 0; q < x.size(); ++q) restricted[q] = n.apply(f, x[q]);
    const auto idx = m.find(restricted);
    if (!idx) fail("restriction of element " + str(f) + " is not in the scheme near-ring");
    if (hit[*idx]) fail("elements collide under restriction at " + str(f));
    hit[*idx] = 1;
    h[f] = *idx;
    cert.pairs.emplace_back(static_cast<NrIndex>(f), *idx);
  }
  cert.exhaustive = for_each_checked_pair(n.size(), limits.pair_budget, [&](std::size_t a, std::size_t b) {
    ++cert.pairs_checked;
    if (h[n.add(a, b)] != m.add(h[a], h[b])) {
      fail("not additive at (" + str(a) + ", " + str(b) + ")");
    }
    if (h[n.mul(a, b)] != m.mul(h[a], h[b])) {
      fail("not multiplicative at (" + str(a) + ", " + str(b) + ")");
    }
    return true;
  });
  return cert;
}

}  // namespace nearprim
