#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hgr/config.hpp"
#include "hgr/parallel.hpp"
#include "hgr/perm_group.hpp"

namespace hgr {

/// A group homomorphism stored as its full image table over element indices.
struct Homomorphism {
  PermGroup domain;
  PermGroup codomain;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a]; }

  bool is_homomorphism() const {
    for (Elem a = 0; a < domain.order(); ++a) {
      for (Elem b = 0; b < domain.order(); ++b) {
        if (image[domain.mul(a, b)] != codomain.mul(image[a], image[b])) return false;
      }
    }
    return true;
  }

  bool is_bijective() const {
    if (domain.order() != codomain.order()) return false;
    std::vector<bool> hit(codomain.order(), false);
    for (Elem x : image) {
      if (hit[x]) return false;
      hit[x] = true;
    }
    return true;
  }
};

using Isomorphism = Homomorphism;

/// Breadth-first Cayley graph of a group w.r.t. a generating set, left multiplication.
/// Each edge is (x, s, s*x); the first edge reaching an element is its spanning-tree edge, so
/// walking the edges in order assigns every element a fixed word in the generators.
struct CayleyEdges {
  struct Edge {
    Elem from;
    std::uint32_t gen;
    Elem to;
  };
  std::vector<Elem> generators;
  std::vector<Edge> edges;
};

inline CayleyEdges cayley_edges(const PermGroup& g, std::vector<Elem> gens) {
  CayleyEdges c;
  c.generators = std::move(gens);
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> queue{PermGroup::identity()};
  seen[PermGroup::identity()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::uint32_t s = 0; s < c.generators.size(); ++s) {
      const Elem y = g.mul(c.generators[s], x);
      c.edges.push_back({x, s, y});
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != g.order()) throw PreconditionError("cayley_edges: elements do not generate the group");
  return c;
}

namespace detail {

constexpr Elem kUnset = static_cast<Elem>(-1);

/// Extends generator images to a full map via h(s*x) = h(s)*h(x), checking every Cayley edge.
/// Returns false on an inconsistent edge (not a homomorphism) or, if `injective`, a repeat.
inline bool extend_homomorphism(const PermGroup& h, const CayleyEdges& cayley, const std::vector<Elem>& gen_images,
                                bool injective, std::vector<Elem>& image, std::vector<bool>& used) {
  std::fill(image.begin(), image.end(), kUnset);
  if (injective) std::fill(used.begin(), used.end(), false);
  image[PermGroup::identity()] = PermGroup::identity();
  if (injective) used[PermGroup::identity()] = true;
  for (const auto& e : cayley.edges) {
    const Elem value = h.mul(gen_images[e.gen], image[e.from]);
    if (image[e.to] == kUnset) {
      if (injective) {
        if (used[value]) return false;
        used[value] = true;
      }
      image[e.to] = value;
    } else if (image[e.to] != value) {
      return false;
    }
  }
  return true;
}

/// Enumerates generator-image tuples (odometer order) and keeps the ones that extend.
/// Parallel over the first generator's candidates; results are concatenated in candidate
/// order, so the output is identical for every thread count.
inline std::vector<std::vector<Elem>> search_homomorphisms(const PermGroup& g, const PermGroup& h,
                                                           const std::vector<Elem>& gens,
                                                           const std::vector<std::vector<Elem>>& candidates,
                                                           bool injective, bool first_only, unsigned threads) {
  const auto cayley = cayley_edges(g, gens);
  if (gens.empty()) return {std::vector<Elem>(g.order(), PermGroup::identity())};

  const auto& first = candidates.front();
  std::vector<std::vector<std::vector<Elem>>> per_branch(first.size());
  auto run_branch = [&](std::size_t b) {
    std::vector<Elem> image(g.order());
    std::vector<bool> used(h.order());
    std::vector<std::size_t> pos(gens.size(), 0);
    std::vector<Elem> assign(gens.size());
    assign[0] = first[b];
    for (;;) {
      for (std::size_t i = 1; i < gens.size(); ++i) assign[i] = candidates[i][pos[i]];
      if (extend_homomorphism(h, cayley, assign, injective, image, used)) {
        per_branch[b].push_back(image);
        if (first_only) return;
      }
      std::size_t i = gens.size() - 1;
      for (; i >= 1; --i) {
        if (++pos[i] < candidates[i].size()) break;
        pos[i] = 0;
      }
      if (i == 0) return;
    }
  };
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (candidates[i].empty()) return {};
  }
  if (first_only) {
    for (std::size_t b = 0; b < first.size(); ++b) {
      run_branch(b);
      if (!per_branch[b].empty()) return {per_branch[b].front()};
    }
    return {};
  }
  parallel_for(first.size(), threads, run_branch);
  std::vector<std::vector<Elem>> out;
  for (auto& branch : per_branch) {
    for (auto& m : branch) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// Every homomorphism g -> h, sorted by image table.
inline std::vector<Homomorphism> homomorphisms(const PermGroup& g, const PermGroup& h, const SearchConfig& cfg = {}) {
  const auto gens = generating_set(g, cfg.generator_bound);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem y = 0; y < h.order(); ++y) {
      if (g.element_order(gens[i]) % h.element_order(y) == 0) candidates[i].push_back(y);
    }
  }
  auto maps = detail::search_homomorphisms(g, h, gens, candidates, false, false, cfg.threads);
  std::sort(maps.begin(), maps.end());
  std::vector<Homomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back({g, h, std::move(m)});
  return out;
}

namespace detail {

inline std::vector<std::vector<Elem>> exact_order_candidates(const PermGroup& g, const PermGroup& h,
                                                             const std::vector<Elem>& gens) {
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem y = 0; y < h.order(); ++y) {
      if (h.element_order(y) == g.element_order(gens[i])) candidates[i].push_back(y);
    }
  }
  return candidates;
}

}  // namespace detail

/// An explicit isomorphism g -> h if one exists. Cheap invariants (order profile, abelianness)
/// are compared first; then generator images are searched among elements of matching order.
inline std::optional<Isomorphism> are_isomorphic(const PermGroup& g, const PermGroup& h, const SearchConfig& cfg = {}) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order_profile() != h.order_profile()) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  const auto gens = generating_set(g, cfg.generator_bound);
  auto found = detail::search_homomorphisms(g, h, gens, detail::exact_order_candidates(g, h, gens), true, true, 1);
  if (found.empty()) return std::nullopt;
  return Isomorphism{g, h, std::move(found.front())};
}

/// All automorphisms of n as image tables over its element indices, sorted.
inline std::vector<std::vector<Elem>> automorphism_maps(const PermGroup& n, const SearchConfig& cfg = {}) {
  const auto gens = generating_set(n, cfg.generator_bound);
  auto maps = detail::search_homomorphisms(n, n, gens, detail::exact_order_candidates(n, n, gens), true, false,
                                           cfg.threads);
  std::sort(maps.begin(), maps.end());
  return maps;
}

}  // namespace hgr
