#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hgr/config.hpp"
#include "hgr/homomorphism.hpp"
#include "hgr/perm_group.hpp"

namespace hgr {

/// One carrier {0, ..., size-1} with two operation tables, + and o.
struct SkewBrace {
  std::size_t size = 0;
  std::vector<Elem> add_table;  // row-major, add_table[a*size+b] = a + b
  std::vector<Elem> mul_table;  // mul_table[a*size+b] = a o b
  std::vector<std::string> labels;

  Elem add(Elem a, Elem b) const { return add_table[a * size + b]; }
  Elem mul(Elem a, Elem b) const { return mul_table[a * size + b]; }
};

/// Identity element if `table` is a group table on `size` points.
inline std::optional<Elem> group_table_identity(const std::vector<Elem>& table, std::size_t size) {
  if (size == 0 || table.size() != size * size) return std::nullopt;
  for (Elem v : table) {
    if (v >= size) return std::nullopt;
  }
  auto op = [&](Elem a, Elem b) { return table[a * size + b]; };
  std::optional<Elem> e;
  for (Elem c = 0; c < size && !e; ++c) {
    bool ok = true;
    for (Elem x = 0; x < size && ok; ++x) ok = op(c, x) == x && op(x, c) == x;
    if (ok) e = c;
  }
  if (!e) return std::nullopt;
  for (Elem a = 0; a < size; ++a) {
    bool has_inverse = false;
    for (Elem b = 0; b < size && !has_inverse; ++b) has_inverse = op(a, b) == *e && op(b, a) == *e;
    if (!has_inverse) return std::nullopt;
  }
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      for (Elem c = 0; c < size; ++c) {
        if (op(op(a, b), c) != op(a, op(b, c))) return std::nullopt;
      }
    }
  }
  return e;
}

/// Both tables are groups with a common identity and a o (b + c) = (a o b) - a + (a o c).
inline bool verify_brace(const SkewBrace& b) {
  const auto e_add = group_table_identity(b.add_table, b.size);
  const auto e_mul = group_table_identity(b.mul_table, b.size);
  if (!e_add || !e_mul || *e_add != *e_mul) return false;
  std::vector<Elem> neg(b.size);
  for (Elem a = 0; a < b.size; ++a) {
    for (Elem x = 0; x < b.size; ++x) {
      if (b.add(a, x) == *e_add) neg[a] = x;
    }
  }
  for (Elem a = 0; a < b.size; ++a) {
    for (Elem x = 0; x < b.size; ++x) {
      for (Elem y = 0; y < b.size; ++y) {
        if (b.mul(a, b.add(x, y)) != b.add(b.add(b.mul(a, x), neg[a]), b.mul(a, y))) return false;
      }
    }
  }
  return true;
}

/// Every left multiplication x -> a o x lies in Hol(Gamma, +). Both tables must be groups
/// sharing their identity (the setting of a carrier with two group structures); otherwise
/// the answer is false.
inline bool lambda_circ_in_hol(const SkewBrace& b, const SearchConfig& cfg = {}) {
  const auto e_add = group_table_identity(b.add_table, b.size);
  const auto e_mul = group_table_identity(b.mul_table, b.size);
  if (!e_add || !e_mul || *e_add != *e_mul) return false;
  const std::size_t n = b.size;

  // (Gamma, +) as its left regular representation; carrier point c <-> translation by c.
  std::vector<Permutation> translations;
  for (Elem c = 0; c < n; ++c) {
    std::vector<Point> images(n);
    for (Elem x = 0; x < n; ++x) images[x] = static_cast<Point>(b.add(c, x));
    translations.emplace_back(std::move(images));
  }
  const PermGroup additive = PermGroup::from_elements(translations);
  std::vector<Elem> carrier_of(n), index_of(n);
  for (Elem c = 0; c < n; ++c) {
    const Elem i = additive.index(translations[c]);
    carrier_of[i] = c;
    index_of[c] = i;
  }

  std::unordered_set<Permutation, PermutationHash> hol;
  for (const auto& map : automorphism_maps(additive, cfg)) {
    for (Elem c = 0; c < n; ++c) {
      std::vector<Point> images(n);
      for (Elem x = 0; x < n; ++x) images[x] = static_cast<Point>(b.add(c, carrier_of[map[index_of[x]]]));
      hol.insert(Permutation(std::move(images)));
    }
  }
  for (Elem a = 0; a < n; ++a) {
    std::vector<Point> images(n);
    for (Elem x = 0; x < n; ++x) images[x] = static_cast<Point>(b.mul(a, x));
    if (!hol.count(Permutation(std::move(images)))) return false;
  }
  return true;
}

/// The brace induced by a regular subgroup R of Hol(N): carrier and + are N, and a o b = pi_a(b)
/// where pi_a is the element of R taking the identity to a.
inline SkewBrace brace_from_regular(const PermGroup& r, const PermGroup& n) {
  if (r.degree() != n.order() || r.order() != n.order()) {
    throw PreconditionError("brace_from_regular: R must be a regular subgroup of Hol(N)");
  }
  SkewBrace b;
  b.size = n.order();
  b.add_table.resize(b.size * b.size);
  b.mul_table.assign(b.size * b.size, detail::kUnset);
  for (Elem x = 0; x < b.size; ++x) {
    for (Elem y = 0; y < b.size; ++y) b.add_table[x * b.size + y] = n.mul(x, y);
    b.labels.push_back(std::to_string(x));
  }
  for (const auto& pi : r.elements()) {
    const Elem a = pi(PermGroup::identity());
    if (b.mul_table[a * b.size] != detail::kUnset) throw PreconditionError("brace_from_regular: R is not regular");
    for (Elem y = 0; y < b.size; ++y) b.mul_table[a * b.size + y] = pi(y);
  }
  if (!verify_brace(b)) throw InvariantViolation("brace from a regular subgroup fails the brace axioms");
  return b;
}

}  // namespace hgr
