#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgedepth/homology.hpp"
#include "edgedepth/monomial.hpp"

namespace edgedepth {

enum class BettiStrategy { Lattice, Box };

std::string to_string(BettiStrategy s);
BettiStrategy parse_strategy(const std::string& text);

struct DepthOptions {
  BettiStrategy strategy = BettiStrategy::Lattice;
  FieldChoice field = FieldChoice::gf2();
  std::size_t lattice_cap = std::size_t(1) << 22;
  std::size_t box_cap = std::size_t(1) << 22;
  std::size_t socle_cap = std::size_t(1) << 22;
  // Zero means no deadline. Checked between multidegrees, so overruns stay
  // within one homology computation.
  std::chrono::steady_clock::time_point deadline{};

  bool has_deadline() const { return deadline != std::chrono::steady_clock::time_point{}; }
  void check_deadline() const;
  static DepthOptions with_budget_ms(std::int64_t ms);
};

// Join closure of the generators under componentwise max (the empty join is
// excluded), in graded lex order. The only multidegrees where Betti numbers
// of R/J can live. Throws BudgetExceeded past `cap`, advising the box
// strategy.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& j, std::size_t cap = std::size_t(1) << 22);

// The subsets S of support(b) with x^b / x^S in J, as a complex on
// support(b); vertex i of the complex is the i-th support variable in
// ascending order. Void when x^b itself is outside J.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& j, const Monomial& b);

// Multigraded Betti numbers of R/J: entry (i, b) for i >= 1 is
// dim H~_{i-2} of the upper Koszul complex at b, and (0, 1) = 1. Zero ranks
// are omitted.
struct BettiTable {
  int ambient_n = 0;
  FieldChoice field;
  std::map<std::pair<int, Monomial>,
           std::int64_t,
           bool (*)(const std::pair<int, Monomial>&, const std::pair<int, Monomial>&)>
      entries;

  BettiTable();
  int projective_dimension() const;
  std::int64_t total_rank(int i) const;
  bool same_entries(const BettiTable& other) const { return entries == other.entries; }
};

struct BettiStats {
  std::size_t multidegrees = 0;  // candidates examined
  std::int64_t wall_ms = 0;
};

BettiTable betti_table(const MonomialIdeal& j, const DepthOptions& options = {},
                       BettiStats* stats = nullptr);

struct DepthResult {
  int depth = 0;
  int pd = 0;
  BettiStrategy strategy = BettiStrategy::Lattice;
  FieldChoice field;
  std::size_t multidegrees = 0;
  std::int64_t wall_ms = 0;
};

// depth R/J = ambient - pd(R/J) via Auslander-Buchsbaum. The zero ideal has
// depth = ambient; the unit ideal is rejected. Generators that are bare
// variables are split off first (each contributes one to pd and drops a
// variable), and variables outside the support count as free.
DepthResult depth(const MonomialIdeal& j, const DepthOptions& options = {});

// Searches the divisors of the componentwise generator max for a monomial z
// outside J with z*x_i in J for every ambient variable. Nonempty exactly
// when depth R/J = 0; this is independent of the Betti route.
std::optional<Monomial> socle_depth_zero(const MonomialIdeal& j,
                                         std::size_t budget = std::size_t(1) << 22);

}  // namespace edgedepth
