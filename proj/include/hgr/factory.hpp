#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hgr/config.hpp"
#include "hgr/group_spec.hpp"
#include "hgr/homomorphism.hpp"
#include "hgr/number_theory.hpp"
#include "hgr/perm_group.hpp"
#include "hgr/subgroups.hpp"

namespace hgr {

/// Hol(N) = N x| Aut(N) acting on N's element indices, with both embeddings tagged.
struct HolomorphGroup {
  PermGroup base;                          // N
  PermGroup automorphisms;                 // Aut(N), permutations of N's element indices
  PermGroup group;                         // Hol(N)
  std::vector<Elem> translation;           // N index -> Hol index of x -> n*x
  std::vector<Elem> automorphism;          // Aut index -> Hol index
  std::vector<std::pair<Elem, Elem>> tag;  // Hol index -> (N index, Aut index)

  /// Hol index of x -> n * alpha(x).
  Elem element(Elem n, Elem alpha) const { return group.mul(translation[n], automorphism[alpha]); }
};

namespace detail {

/// Z_k x| Z_l acting on itself by left multiplication; point a + k*b is the pair (a, b).
inline PermGroup metacyclic_on_pairs(std::uint64_t k, std::uint64_t l, std::uint64_t t) {
  const std::size_t degree = k * l;
  if (degree > 65535) throw BoundExceeded("group too large for 16-bit points");
  std::vector<Point> shift(degree), twist(degree);
  for (std::uint64_t b = 0; b < l; ++b) {
    for (std::uint64_t a = 0; a < k; ++a) {
      shift[a + k * b] = static_cast<Point>((a + 1) % k + k * b);
      twist[a + k * b] = static_cast<Point>((t % k) * a % k + k * ((b + 1) % l));
    }
  }
  std::vector<Permutation> gens;
  for (auto* images : {&shift, &twist}) {
    Permutation p(*images);
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  if (gens.empty()) gens.push_back(Permutation(degree));
  return closure(gens);
}

inline PermGroup disjoint_product(const std::vector<PermGroup>& factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    auto fgens = f.generators();
    if (fgens.empty()) {
      for (Elem x : generating_set(f, f.order())) fgens.push_back(f.element(x));
    }
    for (const auto& g : fgens) {
      std::vector<Point> images(degree);
      for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Point>(x);
      for (std::size_t x = 0; x < f.degree(); ++x) images[offset + x] = static_cast<Point>(offset + g(x));
      gens.emplace_back(std::move(images));
    }
    offset += f.degree();
  }
  if (gens.empty()) gens.push_back(Permutation(degree));
  return closure(gens);
}

}  // namespace detail

/// All automorphisms of n, as a permutation group on n's element indices.
inline PermGroup automorphism_group(const PermGroup& n, const SearchConfig& cfg = {}) {
  std::vector<Permutation> perms;
  for (const auto& map : automorphism_maps(n, cfg)) {
    std::vector<Point> images(map.begin(), map.end());
    perms.emplace_back(std::move(images));
  }
  return PermGroup::from_elements(std::move(perms));
}

/// Hol(n) from an already computed Aut(n).
inline HolomorphGroup holomorph(const PermGroup& n, const PermGroup& aut) {
  if (aut.degree() != n.order()) throw PreconditionError("holomorph: Aut(N) must act on N's element indices");
  HolomorphGroup hol{n, aut, PermGroup{}, {}, {}, {}};
  const std::size_t size = n.order();
  std::vector<Permutation> elems;
  elems.reserve(size * aut.order());
  std::vector<Point> images(size);
  for (Elem t = 0; t < size; ++t) {
    for (Elem a = 0; a < aut.order(); ++a) {
      const auto& alpha = aut.element(a);
      for (Elem x = 0; x < size; ++x) images[x] = static_cast<Point>(n.mul(t, alpha(x)));
      elems.emplace_back(images);
    }
  }
  std::vector<Permutation> gens;
  for (Elem x : generating_set(n, n.order())) {
    for (Elem y = 0; y < size; ++y) images[y] = static_cast<Point>(n.mul(x, y));
    gens.emplace_back(images);
  }
  for (Elem a : generating_set(aut, aut.order())) gens.push_back(aut.element(a));
  hol.group = PermGroup::from_elements(std::move(elems), std::move(gens));

  hol.translation.resize(size);
  hol.automorphism.resize(aut.order());
  hol.tag.resize(hol.group.order());
  for (Elem t = 0; t < size; ++t) {
    for (Elem a = 0; a < aut.order(); ++a) {
      const auto& alpha = aut.element(a);
      for (Elem x = 0; x < size; ++x) images[x] = static_cast<Point>(n.mul(t, alpha(x)));
      const Elem h = hol.group.index(Permutation(images));
      hol.tag[h] = {t, a};
      if (a == PermGroup::identity()) hol.translation[t] = h;
      if (t == PermGroup::identity()) hol.automorphism[a] = h;
    }
  }
  return hol;
}

inline HolomorphGroup holomorph(const PermGroup& n, const SearchConfig& cfg = {}) {
  return holomorph(n, automorphism_group(n, cfg));
}

/// Faithful permutation realization of a spec. Semidirect families act on their carrier
/// Z_k x Z_l by left multiplication, products on the disjoint union of the factors' points,
/// holomorphs on the base group's element indices.
inline PermGroup build(const GroupSpec& g, const SearchConfig& cfg = {}) {
  validate(g);
  struct Visitor {
    const SearchConfig& cfg;
    PermGroup operator()(const spec::Cyclic& c) const { return detail::metacyclic_on_pairs(c.n, 1, 1); }
    PermGroup operator()(const spec::Dihedral& d) const {
      const std::uint64_t n = d.order / 2;
      return detail::metacyclic_on_pairs(n, 2, n - 1);
    }
    PermGroup operator()(const spec::SemidirectCC& s) const { return detail::metacyclic_on_pairs(s.k, s.l, s.t); }
    PermGroup operator()(const spec::SemidirectZ2& s) const { return detail::metacyclic_on_pairs(s.n, 2, s.s); }
    PermGroup operator()(const spec::DirectProduct& p) const {
      std::vector<PermGroup> factors;
      for (const auto& f : p.factors) factors.push_back(build(f, cfg));
      return detail::disjoint_product(factors);
    }
    PermGroup operator()(const spec::Holomorph& h) const { return holomorph(build(*h.base, cfg), cfg).group; }
    PermGroup operator()(const spec::Alternating4&) const {
      return closure({Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
    }
  };
  PermGroup group = std::visit(Visitor{cfg}, g.value);
  return group.with_label(to_string(g));
}

/// Valid involution twists s (s^2 = 1, s a unit mod n) in ascending order.
inline std::vector<std::uint64_t> z2_twists(std::uint64_t n) {
  if (n == 1) return {0};
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < n; ++s) {
    if (std::gcd(s, n) == 1 && s * s % n == 1) out.push_back(s);
  }
  return out;
}

struct CatalogEntry {
  GroupSpec spec;
  PermGroup group;
};

inline bool catalog_supports(std::uint64_t order) {
  return order == 4 || order == 12 || (order >= 1 && is_squarefree(order));
}

namespace detail {

inline std::vector<GroupSpec> catalog_candidates(std::uint64_t m) {
  if (m == 4) return {cyclic(4), direct_product({cyclic(2), cyclic(2)})};
  if (m == 12) {
    return {cyclic(12), direct_product({cyclic(2), cyclic(6)}), dihedral(12), semidirect_cc(3, 4, 2), alternating4()};
  }
  std::vector<GroupSpec> out{cyclic(m)};
  if (m % 2 == 0 && m >= 4) {
    out.push_back(dihedral(m));
    for (auto s : z2_twists(m / 2)) out.push_back(semidirect_z2(m / 2, s));
  }
  for (auto k : divisors(m)) {
    const std::uint64_t l = m / k;
    if (k == 1 || std::gcd(k, l) != 1) continue;
    for (std::uint64_t t = 1; t < k; ++t) {
      if (std::gcd(t, k) == 1 && pow_mod(t, l, k) == 1) out.push_back(semidirect_cc(k, l, t));
    }
  }
  return out;
}

}  // namespace detail

/// One representative per isomorphism class of groups of the given order. Supported: every
/// squarefree order (all such groups are Z_k x| Z_l with gcd(k,l) = 1) plus the hard-coded
/// orders 4 and 12. Candidates are listed C, D, SDZ2 (ascending twist), SD (ascending k, t)
/// and the first member of each class is kept.
inline std::vector<CatalogEntry> catalog(std::uint64_t order, const SearchConfig& cfg = {}) {
  if (!catalog_supports(order)) {
    throw PreconditionError("catalog: order " + std::to_string(order) + " is not supported (squarefree, 4 or 12 only)");
  }
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<CatalogEntry>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  std::vector<CatalogEntry> out;
  for (auto& spec : detail::catalog_candidates(order)) {
    PermGroup g = build(spec, cfg);
    bool duplicate = false;
    for (const auto& e : out) {
      if (are_isomorphic(g, e.group, cfg)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.push_back({std::move(spec), std::move(g)});
  }
  std::lock_guard lock(mutex);
  cache.emplace(order, out);
  return out;
}

/// Index of g's isomorphism class in catalog(|g|), or nullopt if the order is unsupported.
inline std::optional<std::size_t> catalog_index(const PermGroup& g, const SearchConfig& cfg = {}) {
  if (!catalog_supports(g.order())) return std::nullopt;
  const auto cat = catalog(g.order(), cfg);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (are_isomorphic(g, cat[i].group, cfg)) return i;
  }
  throw InvariantViolation("group of order " + std::to_string(g.order()) + " matches no catalog entry");
}

struct BurnsideParams {
  std::uint64_t k = 1, l = 1, t = 1;
  friend bool operator==(const BurnsideParams&, const BurnsideParams&) = default;
};

/// For a group with all Sylow subgroups cyclic, parameters (k, l, t) with SD(k,l;t) isomorphic
/// to it and k the order of the (cyclic) derived subgroup; cyclic groups give (|G|, 1, 1).
inline std::optional<BurnsideParams> decompose_burnside(const PermGroup& g, const SearchConfig& cfg = {}) {
  if (!is_c_group(g, cfg)) return std::nullopt;
  if (g.is_abelian()) return BurnsideParams{g.order(), 1, 1};

  std::vector<Elem> all(g.order());
  for (Elem i = 0; i < g.order(); ++i) all[i] = i;
  const auto derived = derived_subgroup(g, all);
  const std::uint64_t k = derived.size();
  const std::uint64_t l = g.order() / k;
  if (std::gcd(k, l) != 1) throw InvariantViolation("derived subgroup order is not coprime to its index");

  std::optional<Elem> a, b;
  for (Elem x : derived) {
    if (g.element_order(x) == k) {
      a = x;
      break;
    }
  }
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == l) {
      b = x;
      break;
    }
  }
  if (!a || !b) throw InvariantViolation("C-group without cyclic derived subgroup and complement");
  const Elem conj = g.mul(g.mul(*b, *a), g.inv(*b));
  std::optional<std::uint64_t> t;
  Elem power = PermGroup::identity();
  for (std::uint64_t e = 0; e < k; ++e) {
    if (power == conj) {
      t = e;
      break;
    }
    power = g.mul(power, *a);
  }
  if (!t) throw InvariantViolation("complement does not normalize the derived subgroup");
  BurnsideParams params{k, l, *t};
  if (!are_isomorphic(build(semidirect_cc(k, l, *t), cfg), g, cfg)) {
    throw InvariantViolation("Burnside decomposition does not rebuild the group");
  }
  return params;
}

struct ShapeWitness {
  BurnsideParams params;
  PermGroup odd_part;  // the unique subgroup of order n
};

/// N of order 2n (n odd) has the shape (Z_k x| Z_l) x| Z_2 with gcd(k,l) = 1 and kl = n: its
/// order-n subgroup is a C-group. Returns the decomposition of that subgroup.
inline std::optional<ShapeWitness> shape_check_semidirect_z2(const PermGroup& n, const SearchConfig& cfg = {}) {
  PermGroup odd = unique_odd_part(n, cfg);
  auto params = decompose_burnside(odd, cfg);
  if (!params) return std::nullopt;
  return ShapeWitness{*params, std::move(odd)};
}

/// g is isomorphic to Z_n x|_s Z_2 for some twist s; returns the least such s.
inline std::optional<std::uint64_t> z2_family_twist(const PermGroup& g, std::uint64_t n, const SearchConfig& cfg = {}) {
  if (g.order() != 2 * n) return std::nullopt;
  for (auto s : z2_twists(n)) {
    if (are_isomorphic(g, build(semidirect_z2(n, s), cfg), cfg)) return s;
  }
  return std::nullopt;
}

}  // namespace hgr
