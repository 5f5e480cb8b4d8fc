#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgedepth/error.hpp"

namespace edgedepth {

// Hard cap on a single exponent. Powers of edge ideals at desk scale stay
// far below this; anything larger is treated as corruption, never wrapped.
inline constexpr std::int32_t kMaxExponent = 1 << 15;

// A monomial in a fixed polynomial ring k[x_1..x_n], stored as its exponent
// vector. The ambient variable count is the vector length; all arithmetic
// checks that operands agree on it.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int vars) : exps_(vars, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps);

  static Monomial unit(int vars) { return Monomial(vars); }
  static Monomial variable(int vars, int index);

  int vars() const { return static_cast<int>(exps_.size()); }
  std::int32_t exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int32_t>& exponents() const { return exps_; }

  int degree() const;
  bool is_unit() const;
  std::vector<int> support() const;

  Monomial times(const Monomial& other) const;
  Monomial pow(int t) const;
  bool divides(const Monomial& other) const;
  // this / other, requiring exact divisibility.
  Monomial quotient(const Monomial& other) const;
  // this / gcd(this, m); the generator-wise colon step.
  Monomial quotient_gcd(const Monomial& m) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  // Product notation over the given variable names, `1` for the unit
  // monomial, e.g. "x2^3*x5".
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;  // default names x1..xn

  std::size_t hash() const;

 private:
  void check_same_vars(const Monomial& other) const;
  std::vector<std::int32_t> exps_;
};

// Graded lexicographic order: lower total degree first, ties broken by the
// exponent vectors. Used everywhere a deterministic generator order is
// needed.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Parses `*`-separated `name[^k]` factors against a name list; "1" is the
// unit monomial. Throws ParseError with a 1-based column.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names);

std::vector<std::string> default_variable_names(int n);

// A monomial ideal held by its unique minimal generating set, sorted in
// graded lex order. The zero ideal has no generators; the unit ideal has the
// single generator 1. Two ideals are equal iff their generator sequences are.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal in zero variables
  static MonomialIdeal zero(int vars) { return MonomialIdeal(vars); }
  static MonomialIdeal whole_ring(int vars);
  // Minimalizes: keeps g iff no other kept generator properly divides it.
  static MonomialIdeal make(int vars, std::vector<Monomial> gens);

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  // Membership: some generator divides f.
  bool contains(const Monomial& f) const;

  MonomialIdeal power(int t) const;
  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal sum(const MonomialIdeal& other) const;

  // Componentwise max over the generators; requires a nonzero ideal.
  Monomial generator_lcm() const;

  bool operator==(const MonomialIdeal& other) const {
    return vars_ == other.vars_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  explicit MonomialIdeal(int vars) : vars_(vars) {}
  int vars_ = 0;
  std::vector<Monomial> gens_;
};

}  // namespace edgedepth
