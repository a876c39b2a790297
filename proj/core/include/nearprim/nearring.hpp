#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nearprim/automorphism.hpp"
#include "nearprim/group.hpp"
#include "nearprim/limits.hpp"
#include "nearprim/sandwich.hpp"

namespace nearprim {

/// Index of a near-ring element. Index 0 is always the zero function.
using NrIndex = std::uint32_t;

enum class NearRingKind {
  /// M0(X, Gamma, phi, S): S-equivariant maps X -> Gamma, f o' g = f o phi o g.
  sandwich_centralizer,
  /// M0(X, Gamma, phi): every zero-fixing map X -> Gamma.
  sandwich,
  /// Maps Gamma -> Gamma under plain composition.
  transformation,
};

/// A function from the near-ring's domain to Gamma, as values over the
/// sorted domain.
struct NrElement {
  std::vector<Element> values;

  friend bool operator==(const NrElement&, const NrElement&) = default;
  friend auto operator<=>(const NrElement&, const NrElement&) = default;
};

/// Dense |N| x |N| operation tables; entry [a * n + b].
struct OperationTables {
  std::size_t n = 0;
  std::vector<NrIndex> add_table;
  std::vector<NrIndex> mul_table;

  std::size_t size() const noexcept { return n; }
  NrIndex add(std::size_t a, std::size_t b) const { return add_table[a * n + b]; }
  NrIndex mul(std::size_t a, std::size_t b) const { return mul_table[a * n + b]; }
};

template <class T>
concept NearRingOps = requires(const T& r, std::size_t a, std::size_t b) {
  { r.size() } -> std::convertible_to<std::size_t>;
  { r.add(a, b) } -> std::convertible_to<std::size_t>;
  { r.mul(a, b) } -> std::convertible_to<std::size_t>;
};

/// A finite near-ring of functions. Elements are sorted lexicographically by
/// their value arrays. Every member is determined by its values at a few
/// free coordinates (one orbit representative per S-orbit), which lets add,
/// mul and lookup run in time linear in the number of coordinates.
/// Full operation tables are built on first request.
class NearRing {
 public:
  NearRingKind kind() const noexcept { return kind_; }
  const FiniteGroup& gamma() const noexcept { return gamma_; }
  /// Sorted domain; domain()[0] is 0.
  const std::vector<Element>& domain() const noexcept { return domain_; }
  /// Sandwich function over Gamma; the identity for transformation near-rings.
  const std::vector<Element>& phi() const noexcept { return phi_; }
  const std::optional<SandwichScheme>& scheme() const noexcept { return scheme_; }
  /// Positions in the domain of the free coordinates.
  const std::vector<std::size_t>& coordinates() const noexcept { return coords_; }

  std::size_t size() const noexcept { return size_; }
  std::size_t degree() const noexcept { return domain_.size(); }

  std::span<const Element> values(std::size_t m) const {
    return {values_.data() + m * domain_.size(), domain_.size()};
  }
  NrElement element(std::size_t m) const;
  /// Position of x in the domain, or nullopt.
  std::optional<std::size_t> position(Element x) const;
  /// m(x) for x in the domain.
  Element apply(std::size_t m, Element x) const { return values(m)[pos_[x]]; }

  /// Index of the element with these values, or nullopt if it is not a member.
  std::optional<NrIndex> find(std::span<const Element> values) const;
  /// Throws invalid_argument for a foreign element.
  NrIndex index_of(const NrElement& e) const;

  static constexpr NrIndex zero() noexcept { return 0; }
  NrIndex add(std::size_t a, std::size_t b) const;
  NrIndex neg(std::size_t a) const;
  NrIndex sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  /// a o' b, i.e. x -> a(phi(b(x))); plain composition for transformation
  /// near-rings.
  NrIndex mul(std::size_t a, std::size_t b) const;

  /// Throws resource_limit when size() exceeds the table cap given at
  /// construction. Built once; safe to call concurrently.
  const OperationTables& tables() const;

 private:
  friend class NearRingBuilder;
  NearRing() = default;

  NearRingKind kind_ = NearRingKind::sandwich;
  FiniteGroup gamma_ = cyclic(1);
  std::vector<Element> domain_;
  std::vector<Element> phi_;
  std::optional<SandwichScheme> scheme_;
  std::vector<std::size_t> pos_;  // over Gamma; degree() when outside the domain
  std::vector<std::size_t> coords_;
  std::size_t size_ = 0;
  std::vector<Element> values_;
  std::size_t max_table_elements_ = 0;

  struct TableCache;
  std::shared_ptr<TableCache> cache_;
};

/// M0(X, Gamma, phi, S) with |N| = |Gamma|^k, k the number of S-orbits on X1.
/// Throws invalid_argument for an invalid scheme and resource_limit above
/// limits.max_elements.
NearRing enumerate_centralizer_nearring(const SandwichScheme& scheme, const Limits& limits = {});

/// M0(X, Gamma, phi) for a valid sandwich function with trivial S.
NearRing enumerate_sandwich_nearring(const FiniteGroup& gamma, std::vector<Element> phi,
                                     const Limits& limits = {});

/// All f: Gamma -> Gamma with f(z) = 0 for z in `annihilated`, under
/// pointwise addition and composition. Requires 0 in `annihilated`.
NearRing build_annihilating_nearring(const FiniteGroup& gamma, const ElementSet& annihilated,
                                     const Limits& limits = {});

/// Pointwise product x -> a(phi(b(x))), computed from the value arrays and
/// looked up in n. Throws invalid_argument when a or b is not a member.
NrElement nr_mul(const NearRing& n, const NrElement& a, const NrElement& b);

struct AxiomReport {
  bool additive_group = true;
  bool mul_associative = true;
  bool right_distributive = true;
  bool zero_symmetric = true;
  /// Name of the first failed law.
  std::string failure;
  std::optional<std::array<std::size_t, 3>> witness;
  std::size_t triples_checked = 0;
  /// False when the triple laws were checked on a probe set only.
  bool exhaustive = true;

  bool ok() const noexcept {
    return additive_group && mul_associative && right_distributive && zero_symmetric;
  }
};

struct RingCheck {
  bool ring = false;
  bool add_commutative = true;
  bool left_distributive = true;
  /// (a, b) for commutativity, (a, b, c) for left distributivity.
  std::vector<std::size_t> witness;
};

struct IdentityReport {
  std::optional<NrIndex> two_sided;
  std::vector<NrIndex> right;
  std::vector<NrIndex> left;
};

namespace detail {

/// Deterministic triples (a, b, c) spread over the whole index range.
template <class F>
void for_each_probe_triple(std::size_t n, std::size_t count, F&& f) {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<std::size_t>(state % n);
  };
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t a = next(), b = next(), c = next();
    if (!f(a, b, c)) return;
  }
}

}  // namespace detail

/// Additive group laws, associativity of multiplication, right
/// distributivity and zero symmetry. Triple laws run exhaustively when
/// |N|^3 <= limits.triple_budget and on a deterministic probe set otherwise.
template <NearRingOps R>
AxiomReport verify_axioms(const R& r, const Limits& limits = {}) {
  AxiomReport rep;
  const std::size_t n = r.size();
  auto fail = [&](bool AxiomReport::*flag, const char* name, std::size_t a, std::size_t b,
                  std::size_t c) {
    rep.*flag = false;
    if (rep.failure.empty()) {
      rep.failure = name;
      rep.witness = std::array<std::size_t, 3>{a, b, c};
    }
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (r.add(0, a) != a || r.add(a, 0) != a) {
      fail(&AxiomReport::additive_group, "additive identity", a, 0, 0);
      break;
    }
  }
  for (std::size_t a = 0; a < n && rep.additive_group; ++a) {
    bool has_inverse = false;
    if constexpr (requires { r.neg(a); }) {
      const std::size_t b = r.neg(a);
      has_inverse = b < n && r.add(a, b) == 0 && r.add(b, a) == 0;
    } else {
      for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = r.add(a, b) == 0;
    }
    if (!has_inverse) fail(&AxiomReport::additive_group, "additive inverse", a, 0, 0);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (r.mul(0, a) != 0 || r.mul(a, 0) != 0) {
      fail(&AxiomReport::zero_symmetric, "zero symmetry", a, 0, 0);
      break;
    }
  }

  auto triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    ++rep.triples_checked;
    if (rep.additive_group && r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
      fail(&AxiomReport::additive_group, "additive associativity", a, b, c);
    }
    if (rep.mul_associative && r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
      fail(&AxiomReport::mul_associative, "multiplicative associativity", a, b, c);
    }
    if (rep.right_distributive && r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
      fail(&AxiomReport::right_distributive, "right distributivity", a, b, c);
    }
    return rep.additive_group || rep.mul_associative || rep.right_distributive;
  };
  if (n != 0 && n <= limits.triple_budget / n / n) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!triple(a, b, c)) return rep;
        }
      }
    }
  } else if (n != 0) {
    rep.exhaustive = false;
    detail::for_each_probe_triple(n, limits.triple_budget, triple);
  }
  return rep;
}

/// Left distributivity a(b + c) = ab + ac on every triple and commutative
/// addition. Triples are visited in order of their largest index so that
/// small counterexamples surface first.
template <NearRingOps R>
RingCheck check_ring(const R& r) {
  RingCheck rc;
  const std::size_t n = r.size();
  auto ld = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))) return true;
    rc.left_distributive = false;
    rc.witness = {a, b, c};
    return false;
  };
  // Left distributivity first: it fails on small indices for most
  // near-rings, while commutativity needs every pair.
  for (std::size_t t = 0; t < n; ++t) {
    // Triples with max(a, b, c) == t.
    for (std::size_t a = 0; a <= t; ++a) {
      for (std::size_t b = 0; b <= t; ++b) {
        if (a == t || b == t) {
          for (std::size_t c = 0; c <= t; ++c) {
            if (!ld(a, b, c)) return rc;
          }
        } else if (!ld(a, b, t)) {
          return rc;
        }
      }
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t a = 0; a <= t; ++a) {
      if (r.add(a, t) != r.add(t, a)) {
        rc.add_commutative = false;
        rc.witness = {a, t};
        return rc;
      }
    }
  }
  rc.ring = true;
  return rc;
}

template <NearRingOps R>
bool is_ring(const R& r) {
  return check_ring(r).ring;
}

/// Right identities e (a e = a for all a), left identities, and the
/// two-sided one if any.
template <NearRingOps R>
IdentityReport identities(const R& r) {
  IdentityReport rep;
  const std::size_t n = r.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool right = true, left = true;
    for (std::size_t a = 0; a < n && (right || left); ++a) {
      right = right && r.mul(a, e) == a;
      left = left && r.mul(e, a) == a;
    }
    if (right) rep.right.push_back(static_cast<NrIndex>(e));
    if (left) rep.left.push_back(static_cast<NrIndex>(e));
    if (right && left) rep.two_sided = static_cast<NrIndex>(e);
  }
  return rep;
}

struct IsomorphismCertificate {
  /// (element of the transformation near-ring, element of the scheme near-ring).
  std::vector<std::pair<NrIndex, NrIndex>> pairs;
  std::size_t pairs_checked = 0;
  bool exhaustive = true;
};

/// Verifies that f -> f restricted to X is an isomorphism from a
/// transformation near-ring onto M0(X, Gamma, phi, S). Throws not_isomorphic
/// with a witness otherwise.
IsomorphismCertificate restriction_isomorphism(const NearRing& n, const SandwichScheme& scheme,
                                               const Limits& limits = {});

/// Calls f(a, b) on every pair when |N|^2 <= budget, otherwise on a
/// deterministic sample pairing each a with budget / |N| partners. Stops
/// when f returns false. Returns whether the full pair set was used.
template <class F>
bool for_each_checked_pair(std::size_t n, std::size_t budget, F&& f) {
  if (n == 0) return true;
  if (n <= budget / n) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!f(a, b)) return true;
      }
    }
    return true;
  }
  const std::size_t per_row = std::max<std::size_t>(1, budget / n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < per_row; ++j) {
      const std::size_t b = (a * 7 + j * (n / per_row)) % n;
      if (!f(a, b)) return false;
    }
  }
  return false;
}

}  // namespace nearprim
