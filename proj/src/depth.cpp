#include "edgedepth/depth.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace edgedepth {

std::string to_string(BettiStrategy s) {
  return s == BettiStrategy::Lattice ? "lattice" : "box";
}

BettiStrategy parse_strategy(const std::string& text) {
  if (text == "lattice") return BettiStrategy::Lattice;
  if (text == "box") return BettiStrategy::Box;
  throw Error(ErrorKind::UnknownKind, "unknown strategy '" + text + "' (expected lattice or box)");
}

void DepthOptions::check_deadline() const {
  if (has_deadline() && std::chrono::steady_clock::now() > deadline) {
    throw Error(ErrorKind::BudgetExceeded, "per-instance time budget exceeded");
  }
}

DepthOptions DepthOptions::with_budget_ms(std::int64_t ms) {
  DepthOptions options;
  if (ms > 0) {
    options.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
  }
  return options;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& j, std::size_t cap) {
  if (j.is_zero() || j.is_unit()) {
    throw Error(ErrorKind::Precondition, "lcm lattice requires a proper nonzero ideal");
  }
  const auto& gens = j.generators();
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> worklist(gens.begin(), gens.end());
  // Join closure: joining each reached element with each generator is
  // enough, since joins are associative and idempotent.
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    Monomial current = worklist[head];
    for (const Monomial& g : gens) {
      Monomial join = Monomial::lcm(current, g);
      if (seen.insert(join).second) {
        if (seen.size() > cap) {
          throw Error(ErrorKind::BudgetExceeded,
                      "lcm lattice exceeded the cap of " + std::to_string(cap) +
                          " elements; try the box strategy or a smaller instance");
        }
        worklist.push_back(std::move(join));
      }
    }
  }
  std::sort(worklist.begin(), worklist.end(), GrlexLess{});
  return worklist;
}

namespace {

// Facets of the upper Koszul complex at b, directly from the generators:
// S is a face iff some generator g divides b with S avoiding every

// coordinate where g and b agree, so the facets are the maximal sets
// supp(b) minus {v : g_v = b_v} over generators g dividing b.
std::vector<std::uint32_t> koszul_facets(const MonomialIdeal& j, const Monomial& b,
                                         const std::vector<int>& support) {
  std::vector<std::uint32_t> facets;
  for (const Monomial& g : j.generators()) {
    if (!g.divides(b)) continue;
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (g.exp(support[k]) < b.exp(support[k])) mask |= std::uint32_t(1) << k;
    }
    facets.push_back(mask);
  }
  return facets;
}

}  // namespace

SimplicialComplex upper_koszul_complex(const MonomialIdeal& j, const Monomial& b) {
  if (b.vars() != j.vars()) {
    throw Error(ErrorKind::DimensionMismatch, "multidegree lives in a different ring");
  }
  std::vector<int> support = b.support();
  if (static_cast<int>(support.size()) > kGroundCap) {
    throw Error(ErrorKind::BudgetExceeded, "multidegree support exceeds the complex ground cap");
  }
  auto facets = koszul_facets(j, b, support);
  if (facets.empty()) return SimplicialComplex::void_complex(static_cast<int>(support.size()));
  return SimplicialComplex::from_facets(static_cast<int>(support.size()), std::move(facets));
}

BettiTable::BettiTable()
    : field(FieldChoice::gf2()),
      entries([](const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) {
        if (a.first != b.first) return a.first < b.first;
        return GrlexLess{}(a.second, b.second);
      }) {}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, rank] : entries) pd = std::max(pd, key.first);
  return pd;
}

std::int64_t BettiTable::total_rank(int i) const {
  std::int64_t total = 0;
  for (const auto& [key, rank] : entries) {
    if (key.first == i) total += rank;
  }
  return total;
}

namespace {

std::vector<Monomial> box_candidates(const MonomialIdeal& j, std::size_t cap) {
  Monomial top = j.generator_lcm();
  const int n = j.vars();
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::size_t>(top.exp(i)) + 1;
    if (size > cap) {
      throw Error(ErrorKind::BudgetExceeded,
                  "divisor box exceeded the cap of " + std::to_string(cap) + " multidegrees");
    }
  }
  std::vector<Monomial> out;
  out.reserve(size);
  std::vector<std::int32_t> exps(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(exps);
    int i = 0;
    while (i < n && exps[static_cast<std::size_t>(i)] == top.exp(i)) {
      exps[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++exps[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& j, const DepthOptions& options, BettiStats* stats) {
  if (j.is_zero() || j.is_unit()) {
    throw Error(ErrorKind::Precondition, "Betti table requires a proper nonzero ideal");
  }
  auto started = std::chrono::steady_clock::now();

  std::vector<Monomial> candidates = options.strategy == BettiStrategy::Lattice
                                         ? lcm_lattice(j, options.lattice_cap)
                                         : box_candidates(j, options.box_cap);

  BettiTable table;
  table.ambient_n = j.vars();
  table.field = options.field;
  table.entries[{0, Monomial::unit(j.vars())}] = 1;

  std::size_t examined = 0;
  for (const Monomial& b : candidates) {
    options.check_deadline();
    ++examined;
    if (b.is_unit()) continue;
    std::vector<int> support = b.support();
    auto facets = koszul_facets(j, b, support);
    if (facets.empty()) continue;  // x^b outside J, void complex

    // Cone prunes: a facet covering the whole support means the full
    // simplex, and a vertex common to all facets is a cone apex; both are
    // acyclic and contribute nothing.
    const std::uint32_t full = support.size() == 32
                                   ? ~std::uint32_t(0)
                                   : (std::uint32_t(1) << support.size()) - 1;
    std::uint32_t common = full;
    bool acyclic = false;
    for (std::uint32_t f : facets) {
      common &= f;
      if (f == full) {
        acyclic = true;
        break;
      }
    }
    if (acyclic || (common != 0 && full != 0)) continue;

    auto complex = SimplicialComplex::from_facets(static_cast<int>(support.size()),
                                                  std::move(facets));
    auto dims = reduced_homology_dims(complex, options.field);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] > 0) {
        // dims[k] is H~ in dimension k-1, which lands at homological index
        // k+1 for R/J.
        table.entries[{static_cast<int>(k) + 1, b}] = dims[k];
      }
    }
  }

  if (stats) {
    stats->multidegrees = examined;
    stats->wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  }
  return table;
}

DepthResult depth(const MonomialIdeal& j, const DepthOptions& options) {
  if (j.is_unit()) {
    throw Error(ErrorKind::Precondition, "depth of the zero module R/(1) is undefined");
  }
  auto started = std::chrono::steady_clock::now();
  DepthResult result;
  result.strategy = options.strategy;
  result.field = options.field;

  const int n = j.vars();
  if (j.is_zero()) {
    result.depth = n;
    result.pd = 0;
    return result;
  }

  // Split off generators that are bare variables: R/(x, J') is R'/J' with
  // one variable fewer, and each split variable adds one to pd.
  std::vector<char> split(static_cast<std::size_t>(n), 0);
  int split_count = 0;
  for (const Monomial& g : j.generators()) {
    if (g.degree() == 1) {
      split[static_cast<std::size_t>(g.support()[0])] = 1;
      ++split_count;
    }
  }

  int pd_rest = 0;
  if (split_count < static_cast<int>(j.generators().size())) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
      if (!split[static_cast<std::size_t>(i)]) keep.push_back(i);
    }
    std::vector<Monomial> reduced_gens;
    for (const Monomial& g : j.generators()) {
      if (g.degree() == 1) continue;
      std::vector<std::int32_t> exps;
      exps.reserve(keep.size());
      for (int i : keep) exps.push_back(g.exp(i));
      reduced_gens.emplace_back(std::move(exps));
    }
    MonomialIdeal reduced =
        MonomialIdeal::make(static_cast<int>(keep.size()), std::move(reduced_gens));
    BettiStats stats;
    pd_rest = betti_table(reduced, options, &stats).projective_dimension();
    result.multidegrees = stats.multidegrees;
  }

  result.pd = pd_rest + split_count;
  result.depth = n - result.pd;
  result.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return result;
}

std::optional<Monomial> socle_depth_zero(const MonomialIdeal& j, std::size_t budget) {
  if (j.is_zero() || j.is_unit()) {
    throw Error(ErrorKind::Precondition, "socle search requires a proper nonzero ideal");
  }
  const int n = j.vars();
  const auto& gens = j.generators();

  // A free variable forces depth >= 1: z*x_i for unused x_i can only land in
  // J if z was already there.
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const Monomial& g : gens) {
    for (int v : g.support()) used[static_cast<std::size_t>(v)] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) return std::nullopt;

  Monomial top = j.generator_lcm();
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::size_t>(top.exp(i)) + 1;
    if (size > budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "socle search box exceeded the budget of " + std::to_string(budget));
    }
  }

  // z*x_i membership without building the product: g | z*x_i iff g_k <= z_k
  // away from i and g_i <= z_i + 1.
  auto annihilated_by_all_vars = [&](const std::vector<std::int32_t>& z) {
    for (int i = 0; i < n; ++i) {
      bool in_ideal = false;
      for (const Monomial& g : gens) {
        bool div = true;
        for (int k = 0; k < n; ++k) {
          std::int32_t allowance = z[static_cast<std::size_t>(k)] + (k == i ? 1 : 0);
          if (g.exp(k) > allowance) {
            div = false;
            break;
          }
        }
        if (div) {
          in_ideal = true;
          break;
        }
      }
      if (!in_ideal) return false;
    }
    return true;
  };

  std::vector<std::int32_t> z(static_cast<std::size_t>(n), 0);
  while (true) {
    Monomial candidate(z);
    if (!j.contains(candidate) && annihilated_by_all_vars(z)) return candidate;
    int i = 0;
    while (i < n && z[static_cast<std::size_t>(i)] == top.exp(i)) {
      z[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++z[static_cast<std::size_t>(i)];
  }
  return std::nullopt;
}

}  // namespace edgedepth
