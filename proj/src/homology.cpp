#include "edgedepth/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace edgedepth {

FieldChoice FieldChoice::gf(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t(1) << 31)) {
    throw Error(ErrorKind::Precondition, "prime field characteristic must be in [2, 2^31)");
  }
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw Error(ErrorKind::Precondition, std::to_string(p) + " is not prime");
    }
  }
  return FieldChoice{false, p};
}

std::string FieldChoice::to_string() const {
  return rationals ? "q" : "gf" + std::to_string(p);
}

FieldChoice parse_field(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return FieldChoice::rationals_field();
  if (text == "gf2") return FieldChoice::gf2();
  if (text.rfind("gf", 0) == 0) return FieldChoice::gf(std::stoll(text.substr(2)));
  throw Error(ErrorKind::UnknownKind, "unknown field '" + text + "' (expected q or gfP)");
}

SimplicialComplex::SimplicialComplex(int ground, std::vector<std::uint32_t> facets)
    : ground_(ground), facets_(std::move(facets)) {
  if (ground < 0 || ground > kGroundCap) {
    throw Error(ErrorKind::Precondition,
                "complex ground set must have at most " + std::to_string(kGroundCap) + " vertices");
  }
  std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::from_facets(int ground, std::vector<std::uint32_t> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t f : facets) {
    bool covered = false;
    for (std::uint32_t g : facets) {
      if (g != f && (f & g) == f) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(f);
  }
  return SimplicialComplex(ground, std::move(maximal));
}

int SimplicialComplex::dimension() const {
  if (is_void()) return -2;
  int dim = -1;
  for (std::uint32_t f : facets_) dim = std::max(dim, std::popcount(f) - 1);
  return dim;
}

SimplicialComplex SimplicialComplex::cone() const {
  std::uint32_t apex = std::uint32_t(1) << ground_;
  std::vector<std::uint32_t> facets;
  facets.reserve(facets_.size());
  for (std::uint32_t f : facets_) facets.push_back(f | apex);
  if (is_void()) facets.push_back(apex);
  return SimplicialComplex(ground_ + 1, std::move(facets));
}

namespace {

// Sorted-tuple lexicographic order on faces, e.g. {0,3} before {1,2}. Only
// used to pin a reproducible basis order for the boundary matrices.
bool face_lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    int va = std::countr_zero(a);
    int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// All faces (the downward closure of the facets) grouped by dimension;
// index k of the result holds the (k-1)-dimensional faces.
std::vector<std::vector<std::uint32_t>> faces_by_dimension(const SimplicialComplex& complex) {
  std::vector<std::vector<std::uint32_t>> out;
  if (complex.is_void()) return out;
  std::unordered_map<std::uint32_t, char> seen;
  for (std::uint32_t facet : complex.facets()) {
    // Subset enumeration, including the empty face.
    std::uint32_t sub = facet;
    while (true) {
      seen.emplace(sub, 1);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  out.assign(static_cast<std::size_t>(complex.dimension()) + 2, {});
  for (const auto& [mask, unused] : seen) {
    (void)unused;
    out[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }
  for (auto& level : out) std::sort(level.begin(), level.end(), face_lex_less);
  return out;
}

// Boundary of the k-sized faces into the (k-1)-sized ones as a dense signed
// matrix, rows indexed by the smaller faces.
std::vector<std::vector<std::int64_t>> boundary_matrix(const std::vector<std::uint32_t>& rows,
                                                       const std::vector<std::uint32_t>& cols) {
  std::unordered_map<std::uint32_t, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
  std::vector<std::vector<std::int64_t>> m(rows.size(),
                                           std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::uint32_t face = cols[c];
    int sign = 1;
    std::uint32_t rest = face;
    while (rest) {
      std::uint32_t low = rest & (~rest + 1);
      m[row_index.at(face ^ low)][c] = sign;
      sign = -sign;
      rest ^= low;
    }
  }
  return m;
}

std::int64_t matrix_rank_gf2_packed(const std::vector<std::uint32_t>& rows,
                                    const std::vector<std::uint32_t>& cols) {
  std::unordered_map<std::uint32_t, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
  const std::size_t blocks = (cols.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(rows.size(),
                                               std::vector<std::uint64_t>(blocks, 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::uint32_t face = cols[c];
    std::uint32_t rest = face;
    while (rest) {
      std::uint32_t low = rest & (~rest + 1);
      bits[row_index.at(face ^ low)][c / 64] ^= std::uint64_t(1) << (c % 64);
      rest ^= low;
    }
  }
  std::int64_t rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols.size() && row < bits.size(); ++c) {
    std::size_t pivot = row;
    while (pivot < bits.size() && !((bits[pivot][c / 64] >> (c % 64)) & 1)) ++pivot;
    if (pivot == bits.size()) continue;
    std::swap(bits[pivot], bits[row]);
    for (std::size_t r = 0; r < bits.size(); ++r) {
      if (r != row && ((bits[r][c / 64] >> (c % 64)) & 1)) {
        for (std::size_t b = 0; b < blocks; ++b) bits[r][b] ^= bits[row][b];
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

std::int64_t matrix_rank_gf(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t nrows = m.size(), ncols = m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;

  auto inv_mod = [&](std::int64_t a) {
    // Fermat inverse; p is prime.
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  std::int64_t rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < nrows; ++c) {
    std::size_t pivot = row;
    while (pivot < nrows && m[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[row]);
    std::int64_t inv = inv_mod(m[row][c]);
    for (std::size_t r = row + 1; r < nrows; ++r) {
      if (m[r][c] == 0) continue;
      std::int64_t factor = m[r][c] * inv % p;
      for (std::size_t cc = c; cc < ncols; ++cc) {
        m[r][cc] = (m[r][cc] - factor * m[row][cc]) % p;
        if (m[r][cc] < 0) m[r][cc] += p;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::int64_t matrix_rank_rational(std::vector<std::vector<std::int64_t>> m0) {
  if (m0.empty() || m0[0].empty()) return 0;
  const std::size_t nrows = m0.size(), ncols = m0[0].size();
  std::vector<std::vector<mpz_class>> m(nrows, std::vector<mpz_class>(ncols));
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) m[r][c] = static_cast<long>(m0[r][c]);

  // Bareiss fraction-free elimination: every intermediate entry is a minor
  // of the original matrix, so the divisions below are exact; this is
  // checked, not assumed.
  mpz_class prev = 1;
  std::int64_t rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < nrows; ++c) {
    std::size_t pivot = row;
    while (pivot < nrows && m[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t r = row + 1; r < nrows; ++r) {
      for (std::size_t cc = c + 1; cc < ncols; ++cc) {
        mpz_class num = m[row][c] * m[r][cc] - m[r][c] * m[row][cc];
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("Bareiss elimination produced a non-exact division");
        m[r][cc] = q;
      }
      m[r][c] = 0;
    }
    prev = m[row][c];
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> face_counts(const SimplicialComplex& complex) {
  auto levels = faces_by_dimension(complex);
  std::vector<std::int64_t> out;
  out.reserve(levels.size());
  for (const auto& level : levels) out.push_back(static_cast<std::int64_t>(level.size()));
  return out;
}

std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& complex,
                                                const FieldChoice& field) {
  if (complex.is_void()) return {};
  auto levels = faces_by_dimension(complex);
  const std::size_t nlevels = levels.size();  // level k = faces of size k

  // rank of the boundary map from the size-(k+1) faces down to size-k faces;
  // ranks[k] with k in [0, nlevels-1), plus implicit zeros at the ends.
  std::vector<std::int64_t> ranks(nlevels, 0);
  for (std::size_t k = 0; k + 1 < nlevels; ++k) {
    const auto& rows = levels[k];
    const auto& cols = levels[k + 1];
    if (rows.empty() || cols.empty()) continue;
    if (field.rationals) {
      ranks[k] = matrix_rank_rational(boundary_matrix(rows, cols));
    } else if (field.p == 2) {
      ranks[k] = matrix_rank_gf2_packed(rows, cols);
    } else {
      ranks[k] = matrix_rank_gf(boundary_matrix(rows, cols), field.p);
    }
  }

  std::vector<std::int64_t> dims(nlevels, 0);
  for (std::size_t k = 0; k < nlevels; ++k) {
    std::int64_t incoming = k + 1 < nlevels ? ranks[k] : 0;
    std::int64_t outgoing = k > 0 ? ranks[k - 1] : 0;
    dims[k] = static_cast<std::int64_t>(levels[k].size()) - incoming - outgoing;
  }
  return dims;
}

}  // namespace edgedepth
