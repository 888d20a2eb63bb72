#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hgr/config.hpp"
#include "hgr/factory.hpp"
#include "hgr/homomorphism.hpp"
#include "hgr/parallel.hpp"
#include "hgr/perm_group.hpp"
#include "hgr/subgroups.hpp"

namespace hgr {

/// A pair (f, g): f a homomorphism G -> Aut(N), g : G -> N with g(ab) = g(a) * f(a)(g(b)).
struct CrossedHom {
  Homomorphism f;        // codomain is Aut(N) acting on N's element indices
  PermGroup n;           // N
  std::vector<Elem> g;   // G index -> N index
  bool bijective = false;

  const PermGroup& domain() const { return f.domain; }

  /// f(a) applied to the N-element x.
  Elem act(Elem a, Elem x) const { return f.codomain.element(f(a))(x); }

  bool satisfies_cocycle_law() const {
    const auto& G = domain();
    for (Elem a = 0; a < G.order(); ++a) {
      for (Elem b = 0; b < G.order(); ++b) {
        if (g[G.mul(a, b)] != n.mul(g[a], act(a, g[b]))) return false;
      }
    }
    return true;
  }
};

namespace detail {

/// Extends generator values along the Cayley edges with g(s*x) = g(s) * f(s)(g(x)); rejects an
/// inconsistent edge or a repeated value (only bijective cocycles are wanted).
inline bool extend_cocycle(const PermGroup& n, const CayleyEdges& cayley, const std::vector<const Permutation*>& gen_actions,
                           const std::vector<Elem>& gen_values, std::vector<Elem>& g, std::vector<bool>& used) {
  std::fill(g.begin(), g.end(), kUnset);
  std::fill(used.begin(), used.end(), false);
  g[PermGroup::identity()] = PermGroup::identity();
  used[PermGroup::identity()] = true;
  for (const auto& e : cayley.edges) {
    const Elem value = n.mul(gen_values[e.gen], (*gen_actions[e.gen])(g[e.from]));
    if (g[e.to] == kUnset) {
      if (used[value]) return false;
      used[value] = true;
      g[e.to] = value;
    } else if (g[e.to] != value) {
      return false;
    }
  }
  return true;
}

inline std::vector<std::vector<Elem>> search_cocycles(const Homomorphism& f, const PermGroup& n, bool first_only,
                                                      const SearchConfig& cfg) {
  const PermGroup& G = f.domain;
  const auto gens = generating_set(G, cfg.generator_bound);
  if (gens.empty()) return {std::vector<Elem>(G.order(), PermGroup::identity())};
  const auto cayley = cayley_edges(G, gens);
  std::vector<const Permutation*> actions;
  for (Elem s : gens) actions.push_back(&f.codomain.element(f(s)));

  // g(s) = 1 would make g non-injective, so generator values range over N \ {1}.
  const std::size_t choices = n.order() - 1;
  if (choices == 0) return {};
  std::vector<std::vector<std::vector<Elem>>> per_branch(choices);
  auto run_branch = [&](std::size_t b) {
    std::vector<Elem> g(G.order());
    std::vector<bool> used(n.order());
    std::vector<Elem> values(gens.size(), 1);
    values[0] = static_cast<Elem>(b + 1);
    for (;;) {
      if (extend_cocycle(n, cayley, actions, values, g, used)) {
        per_branch[b].push_back(g);
        if (first_only) return;
      }
      std::size_t i = gens.size() - 1;
      for (; i >= 1; --i) {
        if (++values[i] < n.order()) break;
        values[i] = 1;
      }
      if (i == 0) return;
    }
  };
  if (first_only) {
    for (std::size_t b = 0; b < choices; ++b) {
      run_branch(b);
      if (!per_branch[b].empty()) return {per_branch[b].front()};
    }
    return {};
  }
  parallel_for(choices, cfg.threads, run_branch);
  std::vector<std::vector<Elem>> out;
  for (auto& branch : per_branch) {
    for (auto& g : branch) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline CrossedHom make_crossed_hom(const Homomorphism& f, const PermGroup& n, std::vector<Elem> g) {
  CrossedHom c{f, n, std::move(g), true};
  if (!c.satisfies_cocycle_law()) throw InvariantViolation("extended cocycle fails the law on the full table");
  return c;
}

}  // namespace detail

/// Every bijective crossed homomorphism G -> N for the given f : G -> Aut(N), sorted by g.
inline std::vector<CrossedHom> crossed_homomorphisms(const Homomorphism& f, const PermGroup& n, const SearchConfig& cfg = {}) {
  if (f.codomain.degree() != n.order()) throw PreconditionError("f must land in Aut(N) acting on N's element indices");
  if (f.domain.order() != n.order()) return {};
  std::vector<CrossedHom> out;
  for (auto& g : detail::search_cocycles(f, n, false, cfg)) out.push_back(detail::make_crossed_hom(f, n, std::move(g)));
  return out;
}

/// All (f, g) pairs for G and N: f over Hom(G, Aut(N)), g over the bijective cocycles for f.
inline std::vector<CrossedHom> all_crossed_homomorphisms(const PermGroup& g, const PermGroup& n, const PermGroup& aut,
                                                         const SearchConfig& cfg = {}) {
  std::vector<CrossedHom> out;
  for (const auto& f : homomorphisms(g, aut, cfg)) {
    for (auto& c : crossed_homomorphisms(f, n, cfg)) out.push_back(std::move(c));
  }
  return out;
}

/// A witness (f, g) that G embeds regularly in Hol(N): the first f in canonical order that
/// admits a bijective cocycle, with its least such g.
inline std::optional<CrossedHom> realizable_via_cocycles(const PermGroup& g, const PermGroup& n, const PermGroup& aut,
                                                         const SearchConfig& cfg = {}) {
  if (g.order() != n.order()) throw PreconditionError("realizability needs |G| = |N|");
  const auto homs = homomorphisms(g, aut, cfg);
  const std::size_t block = std::max(1u, cfg.threads);
  SearchConfig inner = cfg;
  inner.threads = 1;
  for (std::size_t start = 0; start < homs.size(); start += block) {
    const std::size_t count = std::min(block, homs.size() - start);
    std::vector<std::vector<std::vector<Elem>>> found(count);
    parallel_for(count, cfg.threads, [&](std::size_t i) { found[i] = detail::search_cocycles(homs[start + i], n, true, inner); });
    for (std::size_t i = 0; i < count; ++i) {
      if (!found[i].empty()) return detail::make_crossed_hom(homs[start + i], n, std::move(found[i].front()));
    }
  }
  return std::nullopt;
}

inline std::optional<CrossedHom> realizable_via_cocycles(const PermGroup& g, const PermGroup& n, const SearchConfig& cfg = {}) {
  return realizable_via_cocycles(g, n, automorphism_group(n, cfg), cfg);
}

/// A regular subgroup of Hol(N), optionally with the catalog class it belongs to and the
/// cocycle that produced it.
struct RegularSubgroupRecord {
  PermGroup subgroup;
  std::vector<Elem> members;  // indices in Hol(N)
  std::optional<std::size_t> iso_type;
  std::optional<CrossedHom> witness;
};

/// {lambda(g(a)) iota(f(a)) : a in G} as a subgroup of Hol(N). Checks that a -> that element is
/// an injective homomorphism and that the image is regular.
inline RegularSubgroupRecord subgroup_from_cocycle(const CrossedHom& c, const HolomorphGroup& hol, const SearchConfig& cfg = {}) {
  if (!c.bijective) throw PreconditionError("subgroup_from_cocycle needs a bijective cocycle");
  const PermGroup& G = c.domain();
  std::vector<Elem> aut_index(c.f.codomain.order());
  for (Elem a = 0; a < c.f.codomain.order(); ++a) aut_index[a] = hol.automorphisms.index(c.f.codomain.element(a));
  std::vector<Elem> image(G.order());
  for (Elem a = 0; a < G.order(); ++a) image[a] = hol.element(c.g[a], aut_index[c.f(a)]);
  for (Elem a = 0; a < G.order(); ++a) {
    for (Elem b = 0; b < G.order(); ++b) {
      if (image[G.mul(a, b)] != hol.group.mul(image[a], image[b])) {
        throw InvariantViolation("cocycle image is not a homomorphic copy of G");
      }
    }
  }
  std::vector<Elem> members = image;
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw InvariantViolation("cocycle image is not injective");
  }
  PermGroup sub = hol.group.subgroup(members);
  if (!is_regular(sub)) throw InvariantViolation("cocycle image is not regular");
  return {sub, std::move(members), catalog_index(sub, cfg), c};
}

namespace detail {

/// Regular subgroups of a permutation group on d points, read off the full subgroup lattice.
inline std::vector<std::vector<Elem>> regular_subgroups_lattice(const PermGroup& ambient, const SearchConfig& cfg) {
  std::vector<std::vector<Elem>> out;
  for (auto& s : subgroup_lattice(ambient, cfg)) {
    if (s.members.size() != ambient.degree()) continue;
    bool fixed_point_free = true;
    for (Elem x : s.members) {
      if (x != PermGroup::identity() && ambient.element(x).has_fixed_point()) {
        fixed_point_free = false;
        break;
      }
    }
    if (fixed_point_free) out.push_back(std::move(s.members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Regular subgroups generated by at most two elements: close every pair of distinct
/// semiregular cyclic subgroups, abandoning a closure as soon as it grows past d points or
/// picks up an element with a fixed point.
inline std::vector<std::vector<Elem>> regular_subgroups_pairs(const PermGroup& ambient, const SearchConfig& cfg) {
  const std::size_t d = ambient.degree();
  if (d == 1) return {{PermGroup::identity()}};
  std::vector<bool> has_fixed(ambient.order());
  for (Elem x = 0; x < ambient.order(); ++x) has_fixed[x] = x != 0 && ambient.element(x).has_fixed_point();
  auto reject = [&](Elem y) { return bool(has_fixed[y]); };

  std::vector<SubgroupIndices> cyclics;
  std::unordered_map<std::vector<Elem>, bool, IndexVectorHash> seen_cyclic;
  for (Elem a = 1; a < ambient.order(); ++a) {
    if (has_fixed[a] || d % ambient.element_order(a) != 0) continue;
    auto members = closure_indices(ambient, {a}, d, reject);
    if (!members) continue;
    if (seen_cyclic.emplace(*members, true).second) cyclics.push_back({std::move(*members), {a}});
  }

  std::vector<std::vector<std::vector<Elem>>> per_branch(cyclics.size());
  parallel_for(cyclics.size(), cfg.threads, [&](std::size_t i) {
    auto& found = per_branch[i];
    const auto& ci = cyclics[i];
    if (ci.members.size() == d) found.push_back(ci.members);
    for (std::size_t j = i + 1; j < cyclics.size(); ++j) {
      const auto& cj = cyclics[j];
      if (std::binary_search(ci.members.begin(), ci.members.end(), cj.generators[0]) ||
          std::binary_search(cj.members.begin(), cj.members.end(), ci.generators[0])) {
        continue;
      }
      auto members = closure_indices(ambient, {ci.generators[0], cj.generators[0]}, d, reject);
      if (members && members->size() == d) found.push_back(std::move(*members));
    }
  });
  std::vector<std::vector<Elem>> out;
  for (auto& branch : per_branch) {
    for (auto& m : branch) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

struct RegularSubgroupSearch {
  std::string strategy;  // "lattice" or "generator-pair"
  std::vector<RegularSubgroupRecord> records;
};

/// All regular subgroups of Hol(N), each tagged with its catalog class when |N| has a catalog.
/// Uses the full subgroup lattice when |Hol(N)| is within the subgroup bound, otherwise the
/// generator-pair search (|N| up to pair_search_max_degree).
inline RegularSubgroupSearch regular_subgroups(const HolomorphGroup& hol, const SearchConfig& cfg = {}) {
  RegularSubgroupSearch result;
  std::vector<std::vector<Elem>> found;
  if (hol.group.order() <= cfg.subgroup_bound) {
    result.strategy = "lattice";
    found = detail::regular_subgroups_lattice(hol.group, cfg);
  } else if (hol.base.order() <= cfg.pair_search_max_degree) {
    result.strategy = "generator-pair";
    found = detail::regular_subgroups_pairs(hol.group, cfg);
  } else {
    throw BoundExceeded("regular-subgroup search: |Hol(N)| = " + std::to_string(hol.group.order()) +
                        " and |N| = " + std::to_string(hol.base.order()) + " exceed both search bounds");
  }
  for (auto& members : found) {
    PermGroup sub = hol.group.subgroup(members);
    auto type = catalog_index(sub, cfg);
    result.records.push_back({std::move(sub), std::move(members), type, std::nullopt});
  }
  return result;
}

/// Does some regular subgroup of Hol(N) match G up to isomorphism?
inline bool realizable_via_search(const PermGroup& g, const RegularSubgroupSearch& search, const SearchConfig& cfg = {}) {
  for (const auto& r : search.records) {
    if (r.subgroup.order() == g.order() && are_isomorphic(g, r.subgroup, cfg)) return true;
  }
  return false;
}

inline bool realizable_via_search(const PermGroup& g, const PermGroup& n, const SearchConfig& cfg = {}) {
  if (g.order() != n.order()) throw PreconditionError("realizability needs |G| = |N|");
  return realizable_via_search(g, regular_subgroups(holomorph(n, cfg), cfg), cfg);
}

/// Number of regular subgroups isomorphic to g.
inline std::size_t count_regular_of_type(const PermGroup& g, const RegularSubgroupSearch& search, const SearchConfig& cfg = {}) {
  std::size_t count = 0;
  for (const auto& r : search.records) {
    if (are_isomorphic(g, r.subgroup, cfg)) ++count;
  }
  return count;
}

struct TransportResult {
  PermGroup h;               // g^{-1}(M) as a subgroup of G (trivial group if not a subgroup)
  std::vector<Elem> members; // G indices with g(a) in M
  bool is_subgroup = false;
  bool order_matches = false;
  std::optional<CrossedHom> witness;  // for (H, M), when H is a subgroup

  bool holds() const { return is_subgroup && order_matches && witness.has_value(); }
};

/// Pulls a characteristic subgroup M of N back along a bijective witness c for (G, N) and checks
/// that H = g^{-1}(M) is a subgroup of order |M| with (H, M) realizable.
inline TransportResult transport_characteristic(const CrossedHom& c, const PermGroup& m, const SearchConfig& cfg = {}) {
  if (!c.bijective) throw PreconditionError("transport needs a bijective cocycle");
  std::vector<bool> in_m(c.n.order(), false);
  for (const auto& x : m.elements()) in_m[c.n.index(x)] = true;
  TransportResult r;
  const PermGroup& G = c.domain();
  for (Elem a = 0; a < G.order(); ++a) {
    if (in_m[c.g[a]]) r.members.push_back(a);
  }
  r.order_matches = r.members.size() == m.order();
  r.is_subgroup = !r.members.empty() && closure_indices(G, r.members) == r.members;
  if (!r.is_subgroup) return r;
  r.h = G.subgroup(r.members);
  if (r.order_matches) r.witness = realizable_via_cocycles(r.h, m, cfg);
  return r;
}

}  // namespace hgr
