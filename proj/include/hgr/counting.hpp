#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgr/config.hpp"
#include "hgr/factory.hpp"
#include "hgr/hopf_galois.hpp"
#include "hgr/number_theory.hpp"
#include "hgr/perm_group.hpp"

namespace hgr {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients chi(w) of x^w in prod over p | n of (x + p^{v_p(n)}). n = 1 gives the empty
/// product, {0: 1}.
inline std::map<unsigned, BigInt> chi(std::uint64_t n) {
  if (n == 0) throw PreconditionError("chi(0)");
  std::vector<BigInt> poly{1};  // poly[w] = coefficient of x^w
  for (const auto& f : factorize(n).factors) {
    BigInt q = 1;
    for (unsigned i = 0; i < f.exponent; ++i) q *= f.prime;
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t w = 0; w < poly.size(); ++w) {
      next[w + 1] += poly[w];
      next[w] += poly[w] * q;
    }
    poly = std::move(next);
  }
  std::map<unsigned, BigInt> out;
  for (std::size_t w = 0; w < poly.size(); ++w) out.emplace(static_cast<unsigned>(w), poly[w]);
  return out;
}

/// sum_{m=0}^{n} 2^m chi(n-m), summed over m as written (chi is 0 off its table).
inline BigInt e_formula(std::uint64_t n) {
  const auto c = chi(n);
  BigInt total = 0;
  BigInt power = 1;
  for (std::uint64_t m = 0; m <= n; ++m) {
    auto it = c.find(static_cast<unsigned>(n - m));
    if (n - m <= UINT32_MAX && it != c.end()) total += power * it->second;
    power <<= 1;
  }
  return total;
}

/// The same sum regrouped by w = n - m: sum_w chi(w) 2^{n-w}, largest w first.
inline BigInt e_formula_by_degree(std::uint64_t n) {
  const auto c = chi(n);
  BigInt total = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (it->first > n) continue;
    total += it->second * (BigInt(1) << static_cast<unsigned>(n - it->first));
  }
  return total;
}

enum class Agreement { kMatch, kMismatch, kDirectNotRun };

inline const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::kMatch: return "match";
    case Agreement::kMismatch: return "mismatch";
    case Agreement::kDirectNotRun: return "direct-not-run";
  }
  return "?";
}

struct DirectCount {
  std::string status;  // "ok" or "budget-exceeded"
  std::string method;
  std::optional<BigInt> value;
  std::string detail;
};

struct CountReport {
  std::uint64_t n = 0;
  std::map<unsigned, BigInt> chi_coefficients;
  BigInt e_formula;
  BigInt e_formula_by_degree;
  std::uint64_t radical = 1;
  bool radical_is_burnside = true;
  std::vector<std::string> notes;
  std::optional<DirectCount> direct;
  Agreement agreement = Agreement::kDirectNotRun;
};

/// Direct count of Hopf-Galois structures on a G-extension: regular subgroups of Sym(G)
/// normalized by the left regular image of G. Candidates are the fixed-point-free
/// permutations of order dividing |G|; semiregular subgroups are grown by adjoining cyclic
/// ones until no new subgroup appears. Throws BudgetExceeded past `budget`.
inline BigInt direct_normalized_count(const PermGroup& g, std::chrono::milliseconds budget = std::chrono::seconds(60)) {
  const auto deadline = std::chrono::steady_clock::now() + budget;
  auto check_budget = [&] {
    if (std::chrono::steady_clock::now() > deadline) {
      throw BudgetExceeded("direct count exceeded its time budget of " + std::to_string(budget.count()) + " ms");
    }
  };
  const std::size_t d = g.order();
  if (d == 1) return 1;
  if (d > 65535) throw BoundExceeded("direct count: group too large");

  std::vector<Permutation> lambda;
  for (Elem a : generating_set(g, g.order())) {
    std::vector<Point> images(d);
    for (Elem x = 0; x < d; ++x) images[x] = static_cast<Point>(g.mul(a, x));
    lambda.emplace_back(std::move(images));
  }

  using PermSet = std::vector<Permutation>;  // sorted
  struct Semiregular {
    PermSet members;
    std::vector<Permutation> gens;
  };
  // Closure of gens if it stays semiregular with at most d elements.
  auto semiregular_closure = [&](const std::vector<Permutation>& gens) -> std::optional<PermSet> {
    std::vector<Permutation> elems{Permutation(d)};
    std::unordered_set<Permutation, PermutationHash> seen{elems.front()};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& s : gens) {
        Permutation y = s * elems[i];
        if (seen.count(y)) continue;
        if (elems.size() >= d || y.has_fixed_point()) return std::nullopt;
        seen.insert(y);
        elems.push_back(std::move(y));
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  };

  std::vector<Semiregular> cyclics;
  std::map<PermSet, bool> seen;
  std::vector<Point> images(d);
  for (std::size_t x = 0; x < d; ++x) images[x] = static_cast<Point>(x);
  std::size_t steps = 0;
  while (std::next_permutation(images.begin(), images.end())) {
    if ((++steps & 0xFFFF) == 0) check_budget();
    bool fixed = false;
    for (std::size_t x = 0; x < d && !fixed; ++x) fixed = images[x] == x;
    if (fixed) continue;
    Permutation p(images);
    if (d % p.order() != 0) continue;
    auto members = semiregular_closure({p});
    if (members && seen.emplace(*members, true).second) cyclics.push_back({std::move(*members), {p}});
  }

  std::vector<Semiregular> layer = cyclics;
  std::vector<PermSet> regular;
  for (const auto& c : cyclics) {
    if (c.members.size() == d) regular.push_back(c.members);
  }
  while (!layer.empty()) {
    std::vector<Semiregular> next;
    for (const auto& s : layer) {
      check_budget();
      for (const auto& c : cyclics) {
        if (std::binary_search(s.members.begin(), s.members.end(), c.gens.front())) continue;
        auto gens = s.gens;
        gens.push_back(c.gens.front());
        auto members = semiregular_closure(gens);
        if (!members || !seen.emplace(*members, true).second) continue;
        if (members->size() == d) regular.push_back(*members);
        next.push_back({std::move(*members), std::move(gens)});
      }
    }
    layer = std::move(next);
  }

  BigInt count = 0;
  for (const auto& r : regular) {
    bool normalized = true;
    for (const auto& l : lambda) {
      const Permutation l_inv = l.inverse();
      for (const auto& x : r) {
        if (!std::binary_search(r.begin(), r.end(), l * x * l_inv)) {
          normalized = false;
          break;
        }
      }
      if (!normalized) break;
    }
    if (normalized) ++count;
  }
  return count;
}

struct AggregateTerm {
  std::string n_spec;
  std::size_t regular_of_type = 0;
  std::size_t aut_g = 0;
  std::size_t aut_n = 0;
  BigInt term;
};

/// sum over catalog types N of |Aut G| / |Aut N| * #{regular subgroups of Hol(N) isomorphic to G}.
inline std::vector<AggregateTerm> byott_terms(const PermGroup& g, const SearchConfig& cfg = {}) {
  const std::size_t aut_g = automorphism_group(g, cfg).order();
  std::vector<AggregateTerm> terms;
  for (const auto& entry : catalog(g.order(), cfg)) {
    const auto hol = holomorph(entry.group, cfg);
    const auto search = regular_subgroups(hol, cfg);
    AggregateTerm t;
    t.n_spec = to_string(entry.spec);
    t.regular_of_type = count_regular_of_type(g, search, cfg);
    t.aut_g = aut_g;
    t.aut_n = hol.automorphisms.order();
    const BigInt numerator = BigInt(aut_g) * t.regular_of_type;
    if (numerator % t.aut_n != 0) {
      throw InvariantViolation("non-integer Hopf-Galois term for N = " + t.n_spec);
    }
    t.term = numerator / t.aut_n;
    terms.push_back(std::move(t));
  }
  return terms;
}

inline BigInt byott_aggregate(const PermGroup& g, const SearchConfig& cfg = {}) {
  BigInt total = 0;
  for (const auto& t : byott_terms(g, cfg)) total += t.term;
  return total;
}

/// Evaluates the dihedral counting formula for odd n; with `run_direct`, also counts directly on
/// D_2n and records whether the two agree. Disagreement is reported, never resolved.
inline CountReport count_hgs_dihedral(std::uint64_t n, bool run_direct = false,
                                      std::chrono::milliseconds budget = std::chrono::seconds(60),
                                      const SearchConfig& cfg = {}) {
  if (n == 0 || n % 2 == 0) throw PreconditionError("count_hgs_dihedral: n must be odd");
  CountReport r;
  r.n = n;
  r.chi_coefficients = chi(n);
  r.e_formula = e_formula(n);
  r.e_formula_by_degree = e_formula_by_degree(n);
  if (r.e_formula != r.e_formula_by_degree) throw InvariantViolation("summation orders disagree");
  r.radical = radical(n);
  r.radical_is_burnside = is_burnside_number(r.radical);
  if (!r.radical_is_burnside) {
    r.notes.push_back("hypothesis warning: radical(" + std::to_string(n) + ") = " + std::to_string(r.radical) +
                      " is not a Burnside number; the formula is stated only under that hypothesis");
  }
  if (n == 1) r.notes.push_back("convention: chi of the empty product taken as {0: 1}; value depends on that convention");
  if (run_direct) {
    DirectCount d;
    d.method = "regular subgroups of Sym(D" + std::to_string(2 * n) + ") normalized by the left regular image";
    try {
      d.value = direct_normalized_count(build(dihedral(2 * n), cfg), budget);
      d.status = "ok";
      r.agreement = *d.value == r.e_formula ? Agreement::kMatch : Agreement::kMismatch;
    } catch (const BudgetExceeded& e) {
      d.status = "budget-exceeded";
      d.detail = e.what();
    }
    r.direct = std::move(d);
  }
  return r;
}

}  // namespace hgr
