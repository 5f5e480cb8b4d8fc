#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgedepth/bounds.hpp"
#include "edgedepth/rng.hpp"

namespace edgedepth {

// Outcome of one machine-check suite: how many cases ran, which failed, and
// a short reproducer string per failure (graph key or ideal plus the
// parameters).
struct VerifyReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Seeded proper, nonzero monomial ideal on 2..max_n variables with
// exponents bounded by max_exp. Shared by the verification suites and the
// cross-check harnesses.
MonomialIdeal random_monomial_ideal(Rng& rng, int max_n, int max_exp, int max_gens = 6);

// (I^t : xy) = I^{t-1} for every leaf x with neighbor y, over all connected
// graphs with up to max_n vertices and the given powers.
VerifyReport verify_leaf(int max_n, const std::vector<int>& ts);

// (I^{t+1} : factors) matches construct_e: every edge of every connected
// graph at t = 1, plus seeded two-edge factor products at t = 2.
VerifyReport verify_edge(int max_n, int seeded_cases, std::uint64_t seed);

// ((I:M), y) = ((K:M), y) for seeded (ideal, monomial, variable) triples
// with y not dividing M, where K drops the generators divisible by y.
VerifyReport verify_hamorey(int cases, std::uint64_t seed);

// The deletion-order postcondition: over all (graph, root, target) choices,
// deleting any proper prefix of the order keeps root and target connected.
VerifyReport verify_order(int max_n);

// Reduction traces on one graph: for every vertex w of the root's
// component, trace (I^t : w) along the ordered neighbors of w and check the
// min-floor inequality and the step rewritings.
VerifyReport verify_exhaust(const Graph& g, int t, const DepthOptions& options = {});

}  // namespace edgedepth
