#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hgr/config.hpp"
#include "hgr/error.hpp"
#include "hgr/perm.hpp"

namespace hgr {

/// Index of an element in a PermGroup's canonical element list.
using Elem = std::uint32_t;

/// A finite permutation group with its full element list materialized.
///
/// Elements are kept in lexicographic order of their image sequences, so the identity is
/// always index 0 and two generating sets of the same group give identical element lists.
/// Instances are immutable and cheap to copy (shared storage), so they can be read from
/// several threads at once.
class PermGroup {
 public:
  /// Trivial group on one point.
  PermGroup() : PermGroup(from_elements({Permutation(1)})) {}

  /// Takes the listed elements as the whole group. The list must already be closed; it is
  /// sorted and deduplicated here. `verify` re-checks closure under composition.
  static PermGroup from_elements(std::vector<Permutation> elements,
                                 std::vector<Permutation> generators = {}, bool verify = false) {
    if (elements.empty()) throw PreconditionError("a group needs at least one element");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const std::size_t degree = elements.front().degree();
    for (const auto& e : elements) {
      if (e.degree() != degree) throw PreconditionError("elements have mixed degrees");
    }
    if (!elements.front().is_identity()) throw PreconditionError("element list lacks the identity");

    auto data = std::make_shared<Data>();
    data->degree = degree;
    data->elements = std::move(elements);
    data->generators = std::move(generators);
    data->index.reserve(data->elements.size() * 2);
    for (std::size_t i = 0; i < data->elements.size(); ++i) {
      data->index.emplace(data->elements[i], static_cast<Elem>(i));
    }
    data->inverse.resize(data->elements.size());
    data->orders.resize(data->elements.size());
    for (std::size_t i = 0; i < data->elements.size(); ++i) {
      auto it = data->index.find(data->elements[i].inverse());
      if (it == data->index.end()) throw PreconditionError("element list is not closed under inverse");
      data->inverse[i] = it->second;
      data->orders[i] = static_cast<std::uint32_t>(data->elements[i].order());
    }
    PermGroup g(std::move(data));
    if (verify) {
      for (const auto& a : g.elements()) {
        for (const auto& b : g.elements()) {
          if (!g.contains(a * b)) throw PreconditionError("element list is not closed");
        }
      }
    }
    return g;
  }

  std::size_t degree() const { return d_->degree; }
  std::size_t order() const { return d_->elements.size(); }
  const std::vector<Permutation>& elements() const { return d_->elements; }
  const Permutation& element(Elem i) const { return d_->elements[i]; }
  const std::vector<Permutation>& generators() const { return d_->generators; }

  std::optional<Elem> index_of(const Permutation& p) const {
    auto it = d_->index.find(p);
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
  }

  Elem index(const Permutation& p) const {
    auto i = index_of(p);
    if (!i) throw PreconditionError("permutation is not an element of the group");
    return *i;
  }

  bool contains(const Permutation& p) const { return d_->index.count(p) != 0; }

  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const {
    if (order() <= kTableLimit) {
      const auto& t = table();
      return t[static_cast<std::size_t>(a) * order() + b];
    }
    return index(element(a) * element(b));
  }

  Elem inv(Elem a) const { return d_->inverse[a]; }

  std::size_t element_order(Elem a) const { return d_->orders[a]; }

  Elem power(Elem a, std::size_t k) const {
    Elem r = identity();
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < order(); ++a) {
      for (Elem b = a + 1; b < order(); ++b) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  /// Sorted multiset of element orders.
  std::vector<std::size_t> order_profile() const {
    std::vector<std::size_t> p(d_->orders.begin(), d_->orders.end());
    std::sort(p.begin(), p.end());
    return p;
  }

  /// Materializes the subgroup on the given element indices (must form a subgroup).
  PermGroup subgroup(const std::vector<Elem>& members, const std::vector<Elem>& gens = {}) const {
    std::vector<Permutation> elems;
    elems.reserve(members.size());
    for (Elem m : members) elems.push_back(element(m));
    std::vector<Permutation> g;
    for (Elem x : gens) g.push_back(element(x));
    return from_elements(std::move(elems), std::move(g));
  }

  const std::string& label() const { return label_; }
  PermGroup with_label(std::string label) const {
    PermGroup g = *this;
    g.label_ = std::move(label);
    return g;
  }

  /// Same element list (labels ignored).
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.d_ == b.d_ || a.elements() == b.elements();
  }

  static constexpr std::size_t kTableLimit = 4096;

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Permutation> elements;
    std::vector<Permutation> generators;
    std::unordered_map<Permutation, Elem, PermutationHash> index;
    std::vector<Elem> inverse;
    std::vector<std::uint32_t> orders;
    mutable std::once_flag table_once;
    mutable std::vector<std::uint16_t> table;
  };

  explicit PermGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  const std::vector<std::uint16_t>& table() const {
    std::call_once(d_->table_once, [this] {
      const std::size_t n = order();
      std::vector<std::uint16_t> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = static_cast<std::uint16_t>(index(element(a) * element(b)));
        }
      }
      d_->table = std::move(t);
    });
    return d_->table;
  }

  std::shared_ptr<const Data> d_;
  std::string label_;
};

/// Group generated by `generators`; throws BoundExceeded if it has more than `cap` elements.
inline PermGroup closure(const std::vector<Permutation>& generators, std::size_t cap = SearchConfig{}.closure_cap) {
  if (generators.empty()) throw PreconditionError("closure needs at least one generator");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("closure: generators have mixed degrees");
  }
  std::vector<Permutation> elems{Permutation(degree)};
  std::unordered_map<Permutation, bool, PermutationHash> seen{{elems.front(), true}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Permutation h = g * elems[i];
      if (seen.emplace(h, true).second) {
        if (elems.size() >= cap) throw BoundExceeded("closure exceeded element cap " + std::to_string(cap));
        elems.push_back(std::move(h));
      }
    }
  }
  return PermGroup::from_elements(std::move(elems), generators);
}

inline std::size_t element_order(const PermGroup& g, Elem a) { return g.element_order(a); }

/// Closure of a set of element indices inside `g`, as a sorted index list. Stops early and
/// returns nullopt when the closure grows past `limit` or `reject` accepts a new element.
template <typename Reject>
std::optional<std::vector<Elem>> closure_indices(const PermGroup& g, const std::vector<Elem>& gens,
                                                 std::size_t limit, Reject&& reject) {
  std::vector<Elem> members{PermGroup::identity()};
  std::vector<bool> in(g.order(), false);
  in[PermGroup::identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(s, members[i]);
      if (in[y]) continue;
      if (members.size() >= limit || reject(y)) return std::nullopt;
      in[y] = true;
      members.push_back(y);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline std::vector<Elem> closure_indices(const PermGroup& g, const std::vector<Elem>& gens) {
  return *closure_indices(g, gens, g.order() + 1, [](Elem) { return false; });
}

/// Greedy small generating set: repeatedly adjoin the highest-order element not yet covered.
inline std::vector<Elem> generating_set(const PermGroup& g, std::size_t bound) {
  std::vector<Elem> by_order(g.order());
  for (Elem i = 0; i < g.order(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<Elem> gens;
  std::vector<bool> covered(g.order(), false);
  covered[PermGroup::identity()] = true;
  std::size_t count = 1;
  for (Elem x : by_order) {
    if (count == g.order()) break;
    if (covered[x]) continue;
    gens.push_back(x);
    auto span = closure_indices(g, gens);
    count = span.size();
    for (Elem y : span) covered[y] = true;
  }
  if (gens.size() > bound) {
    throw BoundExceeded("group of order " + std::to_string(g.order()) + " needs more than " +
                        std::to_string(bound) + " generators in the greedy search");
  }
  return gens;
}

}  // namespace hgr
