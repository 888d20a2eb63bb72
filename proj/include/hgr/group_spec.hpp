#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hgr/error.hpp"
#include "hgr/number_theory.hpp"

namespace hgr {

struct GroupSpec;

namespace spec {

struct Cyclic {
  std::uint64_t n = 1;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};

/// Dihedral group of order `order` (so D6 is the symmetric group on three letters).
struct Dihedral {
  std::uint64_t order = 2;
  friend bool operator==(const Dihedral&, const Dihedral&) = default;
};

/// Z_k x| Z_l, the generator of Z_l acting as x -> t*x mod k.
struct SemidirectCC {
  std::uint64_t k = 1, l = 1, t = 1;
  friend bool operator==(const SemidirectCC&, const SemidirectCC&) = default;
};

/// Z_n x| Z_2, the involution acting as x -> s*x mod n.
struct SemidirectZ2 {
  std::uint64_t n = 1, s = 1;
  friend bool operator==(const SemidirectZ2&, const SemidirectZ2&) = default;
};

/// Direct product with at least two factors; nested products are flattened.
struct DirectProduct {
  std::vector<GroupSpec> factors;
  friend bool operator==(const DirectProduct&, const DirectProduct&);
};

struct Holomorph {
  std::shared_ptr<const GroupSpec> base;
  friend bool operator==(const Holomorph&, const Holomorph&);
};

struct Alternating4 {
  friend bool operator==(const Alternating4&, const Alternating4&) = default;
};

}  // namespace spec

/// Abstract recipe for one of the supported group families. Text form, e.g.
/// "C6", "D30", "SD(7,3;2)", "SDZ2(15;4)", "Hol(C6)", "A4", "C2xC6".
struct GroupSpec {
  using Variant = std::variant<spec::Cyclic, spec::Dihedral, spec::SemidirectCC, spec::SemidirectZ2,
                               spec::DirectProduct, spec::Holomorph, spec::Alternating4>;
  Variant value;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.value == b.value; }
};

namespace spec {

inline bool operator==(const DirectProduct& a, const DirectProduct& b) { return a.factors == b.factors; }

inline bool operator==(const Holomorph& a, const Holomorph& b) {
  if (!a.base || !b.base) return a.base == b.base;
  return *a.base == *b.base;
}

}  // namespace spec

inline GroupSpec cyclic(std::uint64_t n) { return {spec::Cyclic{n}}; }
inline GroupSpec dihedral(std::uint64_t order) { return {spec::Dihedral{order}}; }
inline GroupSpec semidirect_cc(std::uint64_t k, std::uint64_t l, std::uint64_t t) { return {spec::SemidirectCC{k, l, t}}; }
inline GroupSpec semidirect_z2(std::uint64_t n, std::uint64_t s) { return {spec::SemidirectZ2{n, s}}; }
inline GroupSpec alternating4() { return {spec::Alternating4{}}; }
inline GroupSpec holomorph_of(GroupSpec base) {
  return {spec::Holomorph{std::make_shared<const GroupSpec>(std::move(base))}};
}

inline GroupSpec direct_product(std::vector<GroupSpec> factors) {
  std::vector<GroupSpec> flat;
  for (auto& f : factors) {
    if (auto* p = std::get_if<spec::DirectProduct>(&f.value)) {
      for (auto& g : p->factors) flat.push_back(g);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.size() < 2) throw SpecError("a direct product needs at least two factors");
  return {spec::DirectProduct{std::move(flat)}};
}

/// Checks the parameter constraints of every node; throws SpecError with the reason.
inline void validate(const GroupSpec& g) {
  struct Visitor {
    void operator()(const spec::Cyclic& c) const {
      if (c.n == 0) throw SpecError("C0 is not a group order");
    }
    void operator()(const spec::Dihedral& d) const {
      if (d.order < 2 || d.order % 2) throw SpecError("D" + std::to_string(d.order) + ": dihedral order must be even and >= 2");
    }
    void operator()(const spec::SemidirectCC& s) const {
      if (s.k == 0 || s.l == 0) throw SpecError("SD: k and l must be positive");
      if (std::gcd(s.k, s.l) != 1) throw SpecError("SD(" + std::to_string(s.k) + "," + std::to_string(s.l) + "): k and l must be coprime");
      if (s.k > 1 && std::gcd(s.t % s.k, s.k) != 1) throw SpecError("SD: twist must be a unit mod k");
      if (pow_mod(s.t, s.l, s.k) != 1 % s.k) {
        throw SpecError("SD(" + std::to_string(s.k) + "," + std::to_string(s.l) + ";" + std::to_string(s.t) +
                        "): twist^l is not 1 mod k");
      }
    }
    void operator()(const spec::SemidirectZ2& s) const {
      if (s.n == 0) throw SpecError("SDZ2: n must be positive");
      if (s.n > 1 && std::gcd(s.s % s.n, s.n) != 1) throw SpecError("SDZ2: twist must be a unit mod n");
      if (pow_mod(s.s, 2, s.n) != 1 % s.n) {
        throw SpecError("SDZ2(" + std::to_string(s.n) + ";" + std::to_string(s.s) + "): twist squared is not 1 mod n");
      }
    }
    void operator()(const spec::DirectProduct& p) const {
      if (p.factors.size() < 2) throw SpecError("a direct product needs at least two factors");
      for (const auto& f : p.factors) validate(f);
    }
    void operator()(const spec::Holomorph& h) const {
      if (!h.base) throw SpecError("Hol() needs a base group");
      validate(*h.base);
    }
    void operator()(const spec::Alternating4&) const {}
  };
  std::visit(Visitor{}, g.value);
}

/// Canonical text form; parse(to_string(g)) == g.
inline std::string to_string(const GroupSpec& g) {
  struct Visitor {
    std::string operator()(const spec::Cyclic& c) const { return "C" + std::to_string(c.n); }
    std::string operator()(const spec::Dihedral& d) const { return "D" + std::to_string(d.order); }
    std::string operator()(const spec::SemidirectCC& s) const {
      return "SD(" + std::to_string(s.k) + "," + std::to_string(s.l) + ";" + std::to_string(s.t) + ")";
    }
    std::string operator()(const spec::SemidirectZ2& s) const {
      return "SDZ2(" + std::to_string(s.n) + ";" + std::to_string(s.s) + ")";
    }
    std::string operator()(const spec::DirectProduct& p) const {
      std::string out;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += "x";
        out += to_string(p.factors[i]);
      }
      return out;
    }
    std::string operator()(const spec::Holomorph& h) const { return "Hol(" + to_string(*h.base) + ")"; }
    std::string operator()(const spec::Alternating4&) const { return "A4"; }
  };
  return std::visit(Visitor{}, g.value);
}

namespace detail {

/// Recursive-descent parser for
///   product := atom ("x" atom)*
///   atom    := "C" int | "D" int | "SD(" int "," int ";" int ")" | "SDZ2(" int ";" int ")"
///            | "Hol(" product ")" | "A4"
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        positions_.push_back(i);
      }
    }
    end_position_ = text.size();
  }

  GroupSpec parse() {
    GroupSpec g = product();
    if (pos_ != chars_.size()) fail("end of input", "unexpected trailing text");
    return g;
  }

 private:
  GroupSpec product() {
    std::vector<GroupSpec> factors{atom()};
    while (peek() == 'x') {
      ++pos_;
      factors.push_back(atom());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return direct_product(std::move(factors));
  }

  GroupSpec atom() {
    if (accept("SDZ2(")) {
      auto n = integer();
      expect(';');
      auto s = integer();
      expect(')');
      return semidirect_z2(n, s);
    }
    if (accept("SD(")) {
      auto k = integer();
      expect(',');
      auto l = integer();
      expect(';');
      auto t = integer();
      expect(')');
      return semidirect_cc(k, l, t);
    }
    if (accept("Hol(")) {
      GroupSpec base = product();
      expect(')');
      return holomorph_of(std::move(base));
    }
    if (accept("A4")) return alternating4();
    if (accept("C")) return cyclic(integer());
    if (accept("D")) return dihedral(integer());
    fail("group name (C, D, SD, SDZ2, Hol, A4)", "unknown group");
  }

  std::uint64_t integer() {
    if (pos_ >= chars_.size() || !std::isdigit(static_cast<unsigned char>(chars_[pos_]))) {
      fail("integer", "missing number");
    }
    std::uint64_t v = 0;
    while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(chars_[pos_] - '0');
      if (v > (UINT64_MAX - digit) / 10) fail("integer", "number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  bool accept(std::string_view word) {
    if (chars_.size() - pos_ < word.size()) return false;
    if (std::string_view(chars_).substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("'") + c + "'", "unexpected character");
    ++pos_;
  }

  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    const std::size_t at = pos_ < positions_.size() ? positions_[pos_] : end_position_;
    throw ParseError(at, expected, message);
  }

  std::string chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and validates. Syntax problems raise ParseError (with position); a well-formed text
/// naming an invalid group raises SpecError.
inline GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec g = detail::SpecParser(text).parse();
  validate(g);
  return g;
}

}  // namespace hgr
