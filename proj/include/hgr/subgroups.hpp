#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hgr/config.hpp"
#include "hgr/number_theory.hpp"
#include "hgr/perm_group.hpp"

namespace hgr {

struct IndexVectorHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Elem x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// A subgroup given by sorted element indices of its parent, plus a generating set.
struct SubgroupIndices {
  std::vector<Elem> members;
  std::vector<Elem> generators;
};

namespace detail {

inline void check_lattice_bound(const PermGroup& g, const SearchConfig& cfg) {
  if (g.order() > cfg.subgroup_bound) {
    throw BoundExceeded("subgroup enumeration bound " + std::to_string(cfg.subgroup_bound) +
                        " exceeded by a group of order " + std::to_string(g.order()));
  }
}

/// Distinct cyclic subgroups, each with its least-index generator.
inline std::vector<SubgroupIndices> cyclic_subgroups(const PermGroup& g) {
  std::vector<SubgroupIndices> out;
  std::unordered_map<std::vector<Elem>, bool, IndexVectorHash> seen;
  for (Elem a = 1; a < g.order(); ++a) {
    auto members = closure_indices(g, {a});
    if (seen.emplace(members, true).second) out.push_back({std::move(members), {a}});
  }
  return out;
}

}  // namespace detail

/// Every subgroup of g by the cyclic-extension method: start from the trivial group and
/// repeatedly adjoin a generator of each cyclic subgroup, deduplicating by element set.
/// Sorted by order, then by element list.
inline std::vector<SubgroupIndices> subgroup_lattice(const PermGroup& g, const SearchConfig& cfg = {}) {
  detail::check_lattice_bound(g, cfg);
  const auto cyclics = detail::cyclic_subgroups(g);

  std::vector<SubgroupIndices> all{{{PermGroup::identity()}, {}}};
  std::unordered_map<std::vector<Elem>, bool, IndexVectorHash> seen{{all.front().members, true}};
  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t s : layer) {
      std::vector<bool> in(g.order(), false);
      for (Elem m : all[s].members) in[m] = true;
      for (const auto& c : cyclics) {
        if (in[c.generators.front()]) continue;
        auto gens = all[s].generators;
        gens.push_back(c.generators.front());
        auto members = closure_indices(g, gens);
        if (seen.emplace(members, true).second) {
          all.push_back({std::move(members), std::move(gens)});
          next.push_back(all.size() - 1);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const SubgroupIndices& a, const SubgroupIndices& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return all;
}

inline std::vector<PermGroup> all_subgroups(const PermGroup& g, const SearchConfig& cfg = {}) {
  std::vector<PermGroup> out;
  for (const auto& s : subgroup_lattice(g, cfg)) out.push_back(g.subgroup(s.members, s.generators));
  return out;
}

/// Transitive with |H| equal to the number of points (so point stabilizers are trivial).
inline bool is_regular(const PermGroup& h) {
  if (h.order() != h.degree()) return false;
  std::vector<bool> reached(h.degree(), false);
  for (const auto& e : h.elements()) reached[e(0)] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

/// No non-identity element fixes a point.
inline bool is_semiregular(const PermGroup& h) {
  for (Elem i = 1; i < h.order(); ++i) {
    if (h.element(i).has_fixed_point()) return false;
  }
  return true;
}

inline bool is_cyclic(const PermGroup& g) {
  for (Elem i = 0; i < g.order(); ++i) {
    if (g.element_order(i) == g.order()) return true;
  }
  return false;
}

namespace detail {

inline std::size_t sylow_order(std::size_t group_order, std::uint64_t p) {
  std::size_t q = 1;
  while (group_order % (q * p) == 0) q *= p;
  return q;
}

inline const SubgroupIndices& sylow_in_lattice(const std::vector<SubgroupIndices>& lattice,
                                               std::size_t group_order, std::uint64_t p) {
  const std::size_t q = sylow_order(group_order, p);
  for (const auto& s : lattice) {
    if (s.members.size() == q) return s;
  }
  throw InvariantViolation("no Sylow subgroup found in the lattice");
}

inline bool has_element_of_order(const PermGroup& g, const std::vector<Elem>& members, std::size_t k) {
  return std::any_of(members.begin(), members.end(), [&](Elem x) { return g.element_order(x) == k; });
}

}  // namespace detail

/// One Sylow p-subgroup: the first subgroup of order p^{v_p(|G|)} in lattice order.
inline PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const SearchConfig& cfg = {}) {
  if (p < 2 || !is_prime(p) || g.order() % p != 0) {
    throw PreconditionError("sylow_subgroup: " + std::to_string(p) + " does not divide the group order");
  }
  const auto lattice = subgroup_lattice(g, cfg);
  const auto& s = detail::sylow_in_lattice(lattice, g.order(), p);
  return g.subgroup(s.members, s.generators);
}

/// Every Sylow subgroup is cyclic.
inline bool is_c_group(const PermGroup& g, const SearchConfig& cfg = {}) {
  if (g.order() == 1) return true;
  const auto lattice = subgroup_lattice(g, cfg);
  for (const auto& f : factorize(g.order()).factors) {
    const auto& s = detail::sylow_in_lattice(lattice, g.order(), f.prime);
    if (!detail::has_element_of_order(g, s.members, s.members.size())) return false;
  }
  return true;
}

/// Odd Sylow subgroups cyclic; the Sylow 2-subgroup trivial or with a cyclic subgroup of index 2.
inline bool is_almost_sylow_cyclic(const PermGroup& g, const SearchConfig& cfg = {}) {
  if (g.order() == 1) return true;
  const auto lattice = subgroup_lattice(g, cfg);
  for (const auto& f : factorize(g.order()).factors) {
    const auto& s = detail::sylow_in_lattice(lattice, g.order(), f.prime);
    const std::size_t q = s.members.size();
    const std::size_t needed = f.prime == 2 ? q / 2 : q;
    if (!detail::has_element_of_order(g, s.members, needed)) return false;
  }
  return true;
}

/// Commutator subgroup of the subgroup `members` of g.
inline std::vector<Elem> derived_subgroup(const PermGroup& g, const std::vector<Elem>& members) {
  std::vector<Elem> commutators;
  std::vector<bool> seen(g.order(), false);
  for (Elem a : members) {
    for (Elem b : members) {
      Elem c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  return closure_indices(g, commutators);
}

/// The derived series reaches the trivial group.
inline bool is_solvable(const PermGroup& g) {
  std::vector<Elem> current;
  for (Elem i = 0; i < g.order(); ++i) current.push_back(i);
  while (current.size() > 1) {
    auto next = derived_subgroup(g, current);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  return true;
}

/// The subgroup of order n in a group of order 2n (n odd), computed as the kernel of the sign
/// of the left regular representation. When the group is small enough for a full lattice the
/// result is also checked to be the only subgroup of order n.
inline PermGroup unique_odd_part(const PermGroup& g, const SearchConfig& cfg = {}) {
  const std::size_t order = g.order();
  if (order % 4 != 2) {
    throw PreconditionError("unique_odd_part: group order " + std::to_string(order) +
                            " is not twice an odd number");
  }
  const std::size_t n = order / 2;
  std::vector<Elem> kernel;
  std::vector<Point> images(order);
  for (Elem a = 0; a < order; ++a) {
    for (Elem x = 0; x < order; ++x) images[x] = static_cast<Point>(g.mul(a, x));
    if (Permutation(images).sign() == 1) kernel.push_back(a);
  }
  if (kernel.size() != n) {
    throw InvariantViolation("sign kernel has order " + std::to_string(kernel.size()) + ", expected " +
                             std::to_string(n));
  }
  if (order <= cfg.subgroup_bound) {
    std::size_t count = 0;
    for (const auto& s : subgroup_lattice(g, cfg)) {
      if (s.members.size() != n) continue;
      ++count;
      if (s.members != kernel) throw InvariantViolation("a subgroup of order n differs from the sign kernel");
    }
    if (count != 1) throw InvariantViolation("expected exactly one subgroup of order n");
  }
  return g.subgroup(kernel);
}

/// Subgroups of n fixed setwise by every automorphism. `aut` must act on n's element indices.
inline std::vector<PermGroup> characteristic_subgroups(const PermGroup& n, const PermGroup& aut,
                                                       const SearchConfig& cfg = {}) {
  if (aut.degree() != n.order()) {
    throw PreconditionError("characteristic_subgroups: automorphisms must act on element indices");
  }
  std::vector<PermGroup> out;
  for (const auto& s : subgroup_lattice(n, cfg)) {
    bool fixed = true;
    for (const auto& alpha : aut.elements()) {
      std::vector<Elem> image;
      image.reserve(s.members.size());
      for (Elem m : s.members) image.push_back(alpha(m));
      std::sort(image.begin(), image.end());
      if (image != s.members) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(n.subgroup(s.members, s.generators));
  }
  return out;
}

}  // namespace hgr
