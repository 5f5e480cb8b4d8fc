#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgedepth/error.hpp"

namespace edgedepth {

// Coefficient field for homology ranks: the rationals or a prime field.
struct FieldChoice {
  bool rationals = false;
  std::int64_t p = 2;

  static FieldChoice rationals_field() { return FieldChoice{true, 0}; }
  static FieldChoice gf(std::int64_t p);
  static FieldChoice gf2() { return gf(2); }

  bool operator==(const FieldChoice& other) const {
    return rationals == other.rationals && (rationals || p == other.p);
  }
  std::string to_string() const;
};

FieldChoice parse_field(const std::string& text);

// Abstract simplicial complex on ground set {0..ground-1}, encoded by its
// facets as bitmasks. The void complex (no faces at all) and the complex
// whose only face is the empty set are distinct: the former has an empty
// facet list, the latter the single facet 0.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int ground) { return SimplicialComplex(ground, {}); }
  static SimplicialComplex empty_face_only(int ground) { return SimplicialComplex(ground, {0}); }
  // Keeps only the maximal masks.
  static SimplicialComplex from_facets(int ground, std::vector<std::uint32_t> facets);

  int ground() const { return ground_; }
  const std::vector<std::uint32_t>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  // -1 for {empty face}; meaningless (returns -2) for the void complex.
  int dimension() const;

  // Coning over a fresh vertex (index = ground): every facet gains the apex.
  SimplicialComplex cone() const;

  bool operator==(const SimplicialComplex& other) const {
    return ground_ == other.ground_ && facets_ == other.facets_;
  }

 private:
  SimplicialComplex(int ground, std::vector<std::uint32_t> facets);
  int ground_;
  std::vector<std::uint32_t> facets_;  // sorted, pairwise incomparable
};

inline constexpr int kGroundCap = 25;  // 2^25 faces is already absurd here

// Ranks of the reduced homology groups, exact arithmetic only. Entry k of
// the result is dim H~_{k-1}, so the sequence starts at dimension -1 and
// runs through dim(C). The void complex yields an empty sequence (all
// reduced homology vanishes); {empty face} yields {1}.
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& complex,
                                                const FieldChoice& field);

// Number of faces per dimension, index k = dimension k-1 as above. Empty for
// the void complex.
std::vector<std::int64_t> face_counts(const SimplicialComplex& complex);

// Exact ranks of small integer matrices; exposed for tests. Entries of
// boundary matrices are 0/+1/-1 but these routines take arbitrary ints.
std::int64_t matrix_rank_gf(std::vector<std::vector<std::int64_t>> m, std::int64_t p);
std::int64_t matrix_rank_rational(std::vector<std::vector<std::int64_t>> m);

}  // namespace edgedepth
