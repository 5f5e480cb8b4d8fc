#include "edgedepth/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace edgedepth {

namespace {

void check_exponent(std::int64_t e) {
  if (e > kMaxExponent) {
    throw Error(ErrorKind::ExponentOverflow,
                "exponent " + std::to_string(e) + " exceeds the cap of 2^15");
  }
  if (e < 0) {
    throw Error(ErrorKind::ExponentOverflow, "negative exponent");
  }
}

}  // namespace

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {
  for (std::int32_t e : exps_) check_exponent(e);
}

Monomial Monomial::variable(int vars, int index) {
  Monomial m(vars);
  m.exps_[static_cast<std::size_t>(index)] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (std::int32_t e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < vars(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
  return s;
}

void Monomial::check_same_vars(const Monomial& other) const {
  if (vars() != other.vars()) {
    throw Error(ErrorKind::DimensionMismatch,
                "monomials live in different ambient rings (" + std::to_string(vars()) +
                    " vs " + std::to_string(other.vars()) + " variables)");
  }
}

Monomial Monomial::times(const Monomial& other) const {
  check_same_vars(other);
  Monomial out(vars());
  for (int i = 0; i < vars(); ++i) {
    std::int64_t e = static_cast<std::int64_t>(exps_[i]) + other.exps_[i];
    check_exponent(e);
    out.exps_[i] = static_cast<std::int32_t>(e);
  }
  return out;
}

Monomial Monomial::pow(int t) const {
  Monomial out(vars());
  for (int i = 0; i < vars(); ++i) {
    std::int64_t e = static_cast<std::int64_t>(exps_[i]) * t;
    check_exponent(e);
    out.exps_[i] = static_cast<std::int32_t>(e);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  check_same_vars(other);
  for (int i = 0; i < vars(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  check_same_vars(other);
  Monomial out(vars());
  for (int i = 0; i < vars(); ++i) {
    if (other.exps_[i] > exps_[i]) {
      throw Error(ErrorKind::Precondition, "quotient requires exact divisibility");
    }
    out.exps_[i] = exps_[i] - other.exps_[i];
  }
  return out;
}

Monomial Monomial::quotient_gcd(const Monomial& m) const {
  check_same_vars(m);
  Monomial out(vars());
  for (int i = 0; i < vars(); ++i)
    out.exps_[i] = exps_[i] - std::min(exps_[i], m.exps_[i]);
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  a.check_same_vars(b);
  Monomial out(a.vars());
  for (int i = 0; i < a.vars(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  a.check_same_vars(b);
  Monomial out(a.vars());
  for (int i = 0; i < a.vars(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != vars()) {
    throw Error(ErrorKind::DimensionMismatch, "name list does not match variable count");
  }
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < vars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << '*';
    out << names[static_cast<std::size_t>(i)];
    if (exps_[i] > 1) out << '^' << exps_[i];
    first = false;
  }
  if (first) return "1";
  return out.str();
}

std::string Monomial::to_string() const { return to_string(default_variable_names(vars())); }

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::int32_t e : exps_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Within a degree the grlex-larger monomial (x1-heavy) comes first, so
  // printed ideals read the usual way: (x1*x2, x2*x3).
  return a.exponents() > b.exponents();
}

std::vector<std::string> default_variable_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  Monomial out(n);
  std::size_t pos = 0;
  auto column = [&]() { return static_cast<int>(pos) + 1; };
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  if (pos >= text.size()) throw ParseError(1, column(), "empty monomial");
  if (text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError(1, column(), "trailing input after '1'");
    return out;
  }

  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) throw ParseError(1, column(), "expected a variable name");
    std::string name = text.substr(start, pos - start);
    int index = -1;
    for (int i = 0; i < n; ++i) {
      if (names[static_cast<std::size_t>(i)] == name) {
        index = i;
        break;
      }
    }
    if (index < 0) {
      throw ParseError(1, static_cast<int>(start) + 1, "unknown variable '" + name + "'");
    }

    std::int64_t e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) throw ParseError(1, column(), "expected an exponent after '^'");
      e = std::stoll(text.substr(dstart, pos - dstart));
      if (e <= 0) throw ParseError(1, static_cast<int>(dstart) + 1, "exponent must be positive");
    }

    std::int64_t total = out.exp(index) + e;
    check_exponent(total);
    {
      std::vector<std::int32_t> exps = out.exponents();
      exps[static_cast<std::size_t>(index)] = static_cast<std::int32_t>(total);
      out = Monomial(std::move(exps));
    }

    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '*') throw ParseError(1, column(), "expected '*' between factors");
    ++pos;
  }
  return out;
}

MonomialIdeal MonomialIdeal::whole_ring(int vars) {
  MonomialIdeal out(vars);
  out.gens_.push_back(Monomial::unit(vars));
  return out;
}

MonomialIdeal MonomialIdeal::make(int vars, std::vector<Monomial> gens) {
  for (const Monomial& g : gens) {
    if (g.vars() != vars) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator has " + std::to_string(g.vars()) + " variables, ideal has " +
                      std::to_string(vars));
    }
  }
  std::sort(gens.begin(), gens.end(), GrlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Ascending degree order means any divisor of a candidate is already kept,
  // so one pass suffices. Distinct monomials of equal degree never divide
  // each other.
  MonomialIdeal out(vars);
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : out.gens_) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.gens_.push_back(g);
  }
  return out;
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

bool MonomialIdeal::contains(const Monomial& f) const {
  for (const Monomial& g : gens_)
    if (g.divides(f)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::power(int t) const {
  if (t < 1) throw Error(ErrorKind::Precondition, "ideal power requires t >= 1");
  if (is_zero() || t == 1) return *this;

  // All products of t generators with repetition, via nondecreasing index
  // tuples, then minimalize.
  std::vector<Monomial> products;
  std::vector<int> idx(static_cast<std::size_t>(t), 0);
  const int m = static_cast<int>(gens_.size());
  while (true) {
    Monomial prod = gens_[static_cast<std::size_t>(idx[0])];
    for (int k = 1; k < t; ++k) prod = prod.times(gens_[static_cast<std::size_t>(idx[k])]);
    products.push_back(std::move(prod));

    int k = t - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - 1) --k;
    if (k < 0) break;
    int v = ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < t; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
  return make(vars_, std::move(products));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  if (m.vars() != vars_) {
    throw Error(ErrorKind::DimensionMismatch, "colon argument lives in a different ring");
  }
  std::vector<Monomial> quotients;
  quotients.reserve(gens_.size());
  for (const Monomial& g : gens_) quotients.push_back(g.quotient_gcd(m));
  return make(vars_, std::move(quotients));
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  if (other.vars_ != vars_) {
    throw Error(ErrorKind::DimensionMismatch, "ideal sum requires a common ambient ring");
  }
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return make(vars_, std::move(gens));
}

Monomial MonomialIdeal::generator_lcm() const {
  if (is_zero()) throw Error(ErrorKind::Precondition, "zero ideal has no generator lcm");
  Monomial out = gens_[0];
  for (std::size_t i = 1; i < gens_.size(); ++i) out = Monomial::lcm(out, gens_[i]);
  return out;
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "(0)";
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].to_string(names);
  }
  out << ')';
  return out.str();
}

std::string MonomialIdeal::to_string() const { return to_string(default_variable_names(vars_)); }

}  // namespace edgedepth
