#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgr/config.hpp"
#include "hgr/factory.hpp"
#include "hgr/hopf_galois.hpp"
#include "hgr/number_theory.hpp"
#include "hgr/subgroups.hpp"

namespace hgr {

enum class Verdict { kPass, kFail, kVacuous, kUnsupported };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kVacuous: return "vacuous";
    case Verdict::kUnsupported: return "unsupported";
  }
  return "?";
}

struct AuditInstance {
  std::string pair;
  std::string status = "checked";  // or "skipped"
  bool hypothesis = false;
  bool conclusion = false;
  std::string witness;
};

/// Verdict of one theorem statement checked instance by instance over a finite domain.
struct AuditReport {
  std::string theorem_id;
  std::uint64_t order = 0;
  std::vector<std::string> domain;
  std::vector<std::string> notes;
  std::vector<AuditInstance> instances;
  Verdict verdict = Verdict::kVacuous;

  /// fail iff some checked instance has the hypothesis but not the conclusion; vacuous iff no
  /// checked instance has the hypothesis.
  void finalize() {
    bool any_hypothesis = false;
    bool any_failure = false;
    for (const auto& i : instances) {
      if (i.status != "checked") continue;
      any_hypothesis |= i.hypothesis;
      any_failure |= i.hypothesis && !i.conclusion;
    }
    verdict = any_failure ? Verdict::kFail : any_hypothesis ? Verdict::kPass : Verdict::kVacuous;
  }
};

namespace detail {

inline const char* kEvidenceNote =
    "implication checked on every listed instance; a pass is evidence at this order, not a proof";

/// Catalog groups with their automorphism groups, computed once per audit.
struct AuditCatalog {
  std::vector<CatalogEntry> entries;
  std::vector<PermGroup> automorphisms;

  AuditCatalog(std::uint64_t order, const SearchConfig& cfg) : entries(catalog(order, cfg)) {
    for (const auto& e : entries) automorphisms.push_back(automorphism_group(e.group, cfg));
  }
  std::vector<std::string> specs() const {
    std::vector<std::string> out;
    for (const auto& e : entries) out.push_back(to_string(e.spec));
    return out;
  }
};

inline std::string pair_label(const std::string& g, const std::string& n) { return "(" + g + ", " + n + ")"; }

inline std::string params_text(const BurnsideParams& p) {
  return "(k,l,t)=(" + std::to_string(p.k) + "," + std::to_string(p.l) + "," + std::to_string(p.t) + ")";
}

inline std::string witness_text(const CrossedHom& c) {
  std::size_t image = 0;
  std::vector<bool> seen(c.f.codomain.order(), false);
  for (Elem x : c.f.image) {
    if (!seen[x]) {
      seen[x] = true;
      ++image;
    }
  }
  return "bijective cocycle, |f(G)|=" + std::to_string(image);
}

inline void require_odd(std::uint64_t n, const char* who) {
  if (n == 0 || n % 2 == 0) throw PreconditionError(std::string(who) + ": n must be odd");
}

/// Z_n x|_s Z_2 under its catalog name (C2n, D2n, ...) when the order has a catalog.
inline std::string family_label(std::uint64_t n, std::uint64_t s, const SearchConfig& cfg) {
  const GroupSpec spec = semidirect_z2(n, s);
  if (!catalog_supports(2 * n)) return to_string(spec);
  const auto index = catalog_index(build(spec, cfg), cfg);
  return to_string(catalog(2 * n, cfg)[*index].spec);
}

inline std::vector<std::string> z2_family_specs(std::uint64_t n, const SearchConfig& cfg) {
  std::vector<std::string> out;
  for (auto s : z2_twists(n)) out.push_back(family_label(n, s, cfg));
  return out;
}

}  // namespace detail

/// Every catalog group of order 2n (n odd) has exactly one subgroup of order n, and it is the
/// kernel of the sign of the regular representation.
inline AuditReport audit_p001(std::uint64_t n, const SearchConfig& cfg = {}) {
  detail::require_odd(n, "audit_p001");
  AuditReport r{"p001", 2 * n, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  const auto cat = catalog(2 * n, cfg);
  for (const auto& e : cat) {
    r.domain.push_back(to_string(e.spec));
    AuditInstance inst{to_string(e.spec), "checked", true, false, ""};
    try {
      const PermGroup kernel = unique_odd_part(e.group, cfg);
      std::size_t count = 0;
      bool equal = false;
      for (const auto& s : subgroup_lattice(e.group, cfg)) {
        if (s.members.size() != n) continue;
        ++count;
        equal = e.group.subgroup(s.members) == kernel;
      }
      inst.conclusion = count == 1 && equal;
      inst.witness = std::to_string(count) + " subgroup(s) of order " + std::to_string(n) +
                     (equal ? ", equal to the sign kernel" : ", differs from the sign kernel");
    } catch (const InvariantViolation& ex) {
      inst.witness = ex.what();
    }
    r.instances.push_back(std::move(inst));
  }
  r.finalize();
  return r;
}

/// Groups of order 2^k * m (m odd) with cyclic Sylow 2-subgroup have a unique subgroup of
/// order 2^j * m for every 0 <= j <= k. `order` is the full group order.
inline AuditReport audit_c001(std::uint64_t order, const SearchConfig& cfg = {}) {
  AuditReport r{"c001", order, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  if (!catalog_supports(order)) {
    r.verdict = Verdict::kUnsupported;
    r.notes.push_back("order " + std::to_string(order) + " has no catalog");
    return r;
  }
  unsigned k = 0;
  std::uint64_t odd = order;
  while (odd % 2 == 0) {
    odd /= 2;
    ++k;
  }
  for (const auto& e : catalog(order, cfg)) {
    r.domain.push_back(to_string(e.spec));
    AuditInstance inst{to_string(e.spec), "checked", false, true, ""};
    const auto lattice = subgroup_lattice(e.group, cfg);
    if (k == 0) {
      inst.hypothesis = true;
    } else {
      const auto p2 = sylow_subgroup(e.group, 2, cfg);
      inst.hypothesis = is_cyclic(p2);
    }
    std::string counts;
    for (unsigned j = 0; j <= k; ++j) {
      const std::uint64_t target = (std::uint64_t{1} << j) * odd;
      std::size_t c = 0;
      for (const auto& s : lattice) c += s.members.size() == target;
      inst.conclusion = inst.conclusion && c == 1;
      counts += (j ? ", " : "") + std::to_string(c) + " of order " + std::to_string(target);
    }
    inst.witness = counts;
    r.instances.push_back(std::move(inst));
  }
  r.finalize();
  return r;
}

/// (Z_n x|_s Z_2, N) realizable implies N = (Z_k x| Z_l) x| Z_2 with gcd(k,l) = 1, kl = n.
inline AuditReport audit_t001(std::uint64_t n, const SearchConfig& cfg = {}) {
  detail::require_odd(n, "audit_t001");
  AuditReport r{"t001", 2 * n, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  detail::AuditCatalog cat(2 * n, cfg);
  for (const auto& s : detail::z2_family_specs(n, cfg)) r.domain.push_back("G=" + s);
  for (const auto& s : cat.specs()) r.domain.push_back("N=" + s);
  for (auto s : z2_twists(n)) {
    const GroupSpec gspec = semidirect_z2(n, s);
    const PermGroup g = build(gspec, cfg);
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
      AuditInstance inst{detail::pair_label(detail::family_label(n, s, cfg), to_string(cat.entries[i].spec)), "checked",
                         false, false, ""};
      const auto witness = realizable_via_cocycles(g, cat.entries[i].group, cat.automorphisms[i], cfg);
      inst.hypothesis = witness.has_value();
      const auto shape = shape_check_semidirect_z2(cat.entries[i].group, cfg);
      inst.conclusion = shape.has_value();
      inst.witness = (witness ? detail::witness_text(*witness) : std::string("not realizable")) + "; N shape " +
                     (shape ? detail::params_text(shape->params) : std::string("fails"));
      r.instances.push_back(std::move(inst));
    }
  }
  r.finalize();
  return r;
}

/// (G, Z_n x|_s Z_2) realizable implies G = (Z_k x| Z_l) x| Z_2 with gcd(k,l) = 1, kl = n.
inline AuditReport audit_t003(std::uint64_t n, const SearchConfig& cfg = {}) {
  detail::require_odd(n, "audit_t003");
  AuditReport r{"t003", 2 * n, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  r.notes.push_back("conclusion read as (Z_k x| Z_l) x| Z_2; the statement as printed ends in x| Z_l");
  const auto cat = catalog(2 * n, cfg);
  for (const auto& e : cat) r.domain.push_back("G=" + to_string(e.spec));
  for (const auto& s : detail::z2_family_specs(n, cfg)) r.domain.push_back("N=" + s);
  std::vector<std::optional<ShapeWitness>> shapes;
  for (const auto& e : cat) shapes.push_back(shape_check_semidirect_z2(e.group, cfg));
  for (auto s : z2_twists(n)) {
    const GroupSpec nspec = semidirect_z2(n, s);
    const PermGroup target = build(nspec, cfg);
    const PermGroup aut = automorphism_group(target, cfg);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      AuditInstance inst{detail::pair_label(to_string(cat[i].spec), detail::family_label(n, s, cfg)), "checked", false,
                         false, ""};
      const auto witness = realizable_via_cocycles(cat[i].group, target, aut, cfg);
      inst.hypothesis = witness.has_value();
      inst.conclusion = shapes[i].has_value();
      inst.witness = (witness ? detail::witness_text(*witness) : std::string("not realizable")) + "; G shape " +
                     (shapes[i] ? detail::params_text(shapes[i]->params) : std::string("fails"));
      r.instances.push_back(std::move(inst));
    }
  }
  r.finalize();
  return r;
}

/// For every realizable catalog pair (G, N) of order 2n with witness (f, g) and every
/// characteristic subgroup M of N: H = g^{-1}(M) is a subgroup and (H, M) is realizable.
inline AuditReport audit_t002(std::uint64_t n, const SearchConfig& cfg = {}) {
  AuditReport r{"t002", 2 * n, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  if (!catalog_supports(2 * n)) {
    r.verdict = Verdict::kUnsupported;
    r.notes.push_back("order " + std::to_string(2 * n) + " has no catalog");
    return r;
  }
  detail::AuditCatalog cat(2 * n, cfg);
  r.domain = cat.specs();
  std::vector<std::vector<PermGroup>> characteristic;
  for (std::size_t j = 0; j < cat.entries.size(); ++j) {
    characteristic.push_back(characteristic_subgroups(cat.entries[j].group, cat.automorphisms[j], cfg));
  }
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    for (std::size_t j = 0; j < cat.entries.size(); ++j) {
      const std::string pair = detail::pair_label(to_string(cat.entries[i].spec), to_string(cat.entries[j].spec));
      const auto witness = realizable_via_cocycles(cat.entries[i].group, cat.entries[j].group, cat.automorphisms[j], cfg);
      if (!witness) {
        r.instances.push_back({pair, "checked", false, false, "not realizable"});
        continue;
      }
      for (const auto& m : characteristic[j]) {
        const auto t = transport_characteristic(*witness, m, cfg);
        AuditInstance inst{pair + " M of order " + std::to_string(m.order()), "checked", true, t.holds(), ""};
        inst.witness = "|H|=" + std::to_string(t.members.size()) + (t.is_subgroup ? " subgroup" : " not a subgroup") +
                       (t.witness ? ", (H, M) realizable" : ", (H, M) not shown realizable");
        r.instances.push_back(std::move(inst));
      }
    }
  }
  r.finalize();
  return r;
}

/// With radical(n) a Burnside number: for realizable (G, N) of order 2n, G is some Z_n x| Z_2
/// iff N is.
inline AuditReport audit_t004(std::uint64_t n, const SearchConfig& cfg = {}) {
  detail::require_odd(n, "audit_t004");
  AuditReport r{"t004", 2 * n, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  const std::uint64_t rad = radical(n);
  if (!is_burnside_number(rad)) {
    r.notes.push_back("hypothesis fails: radical(" + std::to_string(n) + ") = " + std::to_string(rad) +
                      " is not a Burnside number (gcd(m, phi(m)) != 1)");
    return r;
  }
  detail::AuditCatalog cat(2 * n, cfg);
  r.domain = cat.specs();
  std::vector<std::optional<std::uint64_t>> family;
  for (const auto& e : cat.entries) family.push_back(z2_family_twist(e.group, n, cfg));
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    for (std::size_t j = 0; j < cat.entries.size(); ++j) {
      AuditInstance inst{detail::pair_label(to_string(cat.entries[i].spec), to_string(cat.entries[j].spec)), "checked",
                         false, false, ""};
      const auto witness = realizable_via_cocycles(cat.entries[i].group, cat.entries[j].group, cat.automorphisms[j], cfg);
      inst.hypothesis = witness.has_value();
      inst.conclusion = family[i].has_value() == family[j].has_value();
      inst.witness = std::string("G ") + (family[i] ? "in" : "not in") + " family, N " + (family[j] ? "in" : "not in") +
                     " family";
      r.instances.push_back(std::move(inst));
    }
  }
  r.finalize();
  return r;
}

/// (D_2n, Z_n x|_s Z_2) is realizable for every twist s; witnesses are re-checked on all pairs.
inline AuditReport audit_r002(std::uint64_t n, const SearchConfig& cfg = {}) {
  detail::require_odd(n, "audit_r002");
  AuditReport r{"r002", 2 * n, {}, {"existence audit: every instance has the hypothesis"}, {}, Verdict::kVacuous};
  const PermGroup g = build(dihedral(2 * n), cfg);
  r.domain = detail::z2_family_specs(n, cfg);
  for (auto s : z2_twists(n)) {
    const GroupSpec nspec = semidirect_z2(n, s);
    const auto witness = realizable_via_cocycles(g, build(nspec, cfg), cfg);
    AuditInstance inst{detail::pair_label(to_string(dihedral(2 * n)), detail::family_label(n, s, cfg)), "checked", true,
                       false, ""};
    inst.conclusion = witness && witness->satisfies_cocycle_law();
    inst.witness = witness ? detail::witness_text(*witness) + ", cocycle law verified on all pairs" : "no witness";
    r.instances.push_back(std::move(inst));
  }
  r.finalize();
  return r;
}

/// (G, D_2n) realizable implies G solvable.
inline AuditReport audit_p005(std::uint64_t n, const SearchConfig& cfg = {}) {
  AuditReport r{"p005", 2 * n, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  if (n == 0 || !catalog_supports(2 * n)) {
    r.verdict = Verdict::kUnsupported;
    r.notes.push_back("order " + std::to_string(2 * n) + " has no catalog");
    return r;
  }
  detail::AuditCatalog cat(2 * n, cfg);
  r.domain = cat.specs();
  const PermGroup target = build(dihedral(2 * n), cfg);
  const PermGroup aut = automorphism_group(target, cfg);
  for (const auto& e : cat.entries) {
    AuditInstance inst{detail::pair_label(to_string(e.spec), "D" + std::to_string(2 * n)), "checked", false, false, ""};
    const auto witness = realizable_via_cocycles(e.group, target, aut, cfg);
    inst.hypothesis = witness.has_value();
    inst.conclusion = is_solvable(e.group);
    inst.witness = (witness ? detail::witness_text(*witness) : std::string("not realizable")) +
                   (inst.conclusion ? "; G solvable" : "; G not solvable");
    r.instances.push_back(std::move(inst));
  }
  r.finalize();
  return r;
}

/// For odd m: (Z_m, N) realizable implies N has all Sylow subgroups cyclic.
inline AuditReport audit_p003(std::uint64_t m, const SearchConfig& cfg = {}) {
  detail::require_odd(m, "audit_p003");
  AuditReport r{"p003", m, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  if (!catalog_supports(m)) {
    r.verdict = Verdict::kUnsupported;
    r.notes.push_back("order " + std::to_string(m) + " has no catalog");
    return r;
  }
  detail::AuditCatalog cat(m, cfg);
  r.domain = cat.specs();
  const PermGroup g = build(cyclic(m), cfg);
  bool conclusion_always = true;
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    AuditInstance inst{detail::pair_label("C" + std::to_string(m), to_string(cat.entries[i].spec)), "checked", false,
                       false, ""};
    const auto witness = realizable_via_cocycles(g, cat.entries[i].group, cat.automorphisms[i], cfg);
    inst.hypothesis = witness.has_value();
    inst.conclusion = is_c_group(cat.entries[i].group, cfg);
    conclusion_always &= inst.conclusion;
    inst.witness = (witness ? detail::witness_text(*witness) : std::string("not realizable")) +
                   (inst.conclusion ? "; N is a C-group" : "; N is not a C-group");
    r.instances.push_back(std::move(inst));
  }
  if (conclusion_always) {
    r.notes.push_back("every group of order " + std::to_string(m) + " is a C-group; the conclusion cannot fail here");
  }
  r.finalize();
  return r;
}

/// For odd m: (G, Z_m) realizable implies G solvable and almost Sylow-cyclic.
inline AuditReport audit_p004(std::uint64_t m, const SearchConfig& cfg = {}) {
  detail::require_odd(m, "audit_p004");
  AuditReport r{"p004", m, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  if (!catalog_supports(m)) {
    r.verdict = Verdict::kUnsupported;
    r.notes.push_back("order " + std::to_string(m) + " has no catalog");
    return r;
  }
  const auto cat = catalog(m, cfg);
  r.domain.clear();
  for (const auto& e : cat) r.domain.push_back(to_string(e.spec));
  const PermGroup target = build(cyclic(m), cfg);
  const PermGroup aut = automorphism_group(target, cfg);
  for (const auto& e : cat) {
    AuditInstance inst{detail::pair_label(to_string(e.spec), "C" + std::to_string(m)), "checked", false, false, ""};
    const auto witness = realizable_via_cocycles(e.group, target, aut, cfg);
    inst.hypothesis = witness.has_value();
    const bool solvable = is_solvable(e.group);
    const bool almost = is_almost_sylow_cyclic(e.group, cfg);
    inst.conclusion = solvable && almost;
    inst.witness = (witness ? detail::witness_text(*witness) : std::string("not realizable")) + "; solvable=" +
                   (solvable ? "yes" : "no") + ", almost Sylow-cyclic=" + (almost ? "yes" : "no");
    r.instances.push_back(std::move(inst));
  }
  r.finalize();
  return r;
}

/// For n = 2 mod 4: (G, D_2n) realizable implies G has an index-2 (hence normal) subgroup
/// Z_l x| Z_k with gcd(k,l) = 1.
inline AuditReport audit_ses_final(std::uint64_t n, const SearchConfig& cfg = {}) {
  if (n % 4 != 2) throw PreconditionError("audit_ses_final: n must be 2 mod 4");
  AuditReport r{"ses_final", 2 * n, {}, {detail::kEvidenceNote}, {}, Verdict::kVacuous};
  r.notes.push_back("subgroup order read as kl = n (index 2); the statement as printed says kl = 2n");
  if (!catalog_supports(2 * n)) {
    r.verdict = Verdict::kUnsupported;
    r.notes.push_back("order " + std::to_string(2 * n) + " has no catalog (not squarefree and not hard-coded)");
    return r;
  }
  detail::AuditCatalog cat(2 * n, cfg);
  r.domain = cat.specs();
  const PermGroup target = build(dihedral(2 * n), cfg);
  const PermGroup aut = automorphism_group(target, cfg);
  for (const auto& e : cat.entries) {
    AuditInstance inst{detail::pair_label(to_string(e.spec), "D" + std::to_string(2 * n)), "checked", false, false, ""};
    const auto witness = realizable_via_cocycles(e.group, target, aut, cfg);
    inst.hypothesis = witness.has_value();
    std::optional<BurnsideParams> found;
    std::size_t index_two = 0;
    for (const auto& s : subgroup_lattice(e.group, cfg)) {
      if (s.members.size() != n) continue;
      ++index_two;
      if (auto p = decompose_burnside(e.group.subgroup(s.members), cfg); p && !found) found = p;
    }
    inst.conclusion = found.has_value();
    inst.witness = (witness ? detail::witness_text(*witness) : std::string("not realizable")) + "; " +
                   std::to_string(index_two) + " index-2 subgroup(s)" +
                   (found ? ", one with " + detail::params_text(*found) : std::string());
    r.instances.push_back(std::move(inst));
  }
  r.finalize();
  return r;
}

inline const std::vector<std::string>& audit_ids() {
  static const std::vector<std::string> ids{"p001", "c001", "t001", "t002", "t003", "t004",
                                            "p005", "ses_final", "r002", "p003", "p004"};
  return ids;
}

/// Dispatch by theorem id. `n` is the odd half-order, except for p003/p004/c001 where it is
/// the group order and ses_final where it is the even half-order.
inline AuditReport run_audit(const std::string& id, std::uint64_t n, const SearchConfig& cfg = {}) {
  static const std::map<std::string, std::function<AuditReport(std::uint64_t, const SearchConfig&)>> table{
      {"p001", audit_p001}, {"c001", audit_c001}, {"t001", audit_t001}, {"t002", audit_t002},
      {"t003", audit_t003}, {"t004", audit_t004}, {"p005", audit_p005}, {"ses_final", audit_ses_final},
      {"r002", audit_r002}, {"p003", audit_p003}, {"p004", audit_p004}};
  auto it = table.find(id);
  if (it == table.end()) throw PreconditionError("unknown theorem id '" + id + "'");
  return it->second(n, cfg);
}

}  // namespace hgr
