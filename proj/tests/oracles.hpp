// Independent cross-check oracles used by the unit and acceptance tests.
//
// These deliberately do NOT share algorithms with the library: ranks come
// from dense row-major Gaussian elimination on bit-packed rows, and the
// small-system oracles enumerate all 2^cols candidate vectors outright.
// Agreement between two dissimilar implementations is the point.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "tori/gf2.hpp"

namespace oracle {

// Dense bit-packed matrix, row major: row_bits[r] holds ceil(cols/64) words.
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::uint64_t>> row_bits;
};

inline Dense dense_from(const tori::gf2::Gf2Matrix& m) {
  Dense d;
  d.rows = m.rows;
  d.cols = m.cols;
  const std::size_t words = (m.cols + 63) / 64;
  d.row_bits.assign(m.rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (std::uint32_t r : m.columns[c]) {
      d.row_bits[r][c / 64] ^= (std::uint64_t{1} << (c % 64));
    }
  }
  return d;
}

// Row-echelon rank by forward elimination (destroys its copy of the rows).
inline std::size_t rank_row_echelon(Dense d) {
  const std::size_t words = d.cols == 0 ? 0 : (d.cols + 63) / 64;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d.cols && rank < d.rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < d.rows && !(d.row_bits[pivot][w] & bit)) ++pivot;
    if (pivot == d.rows) continue;
    std::swap(d.row_bits[rank], d.row_bits[pivot]);
    for (std::size_t r = 0; r < d.rows; ++r) {
      if (r != rank && (d.row_bits[r][w] & bit)) {
        for (std::size_t k = 0; k < words; ++k) {
          d.row_bits[r][k] ^= d.row_bits[rank][k];
        }
      }
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_of(const tori::gf2::Gf2Matrix& m) {
  return rank_row_echelon(dense_from(m));
}

// --- exhaustive small-system oracle (requires cols <= 20, rows <= 64) ---

// Image of the candidate vector with 1-bits `xmask`, packed into a row mask.
inline std::uint64_t apply_mask(const tori::gf2::Gf2Matrix& m,
                                std::uint32_t xmask) {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (xmask & (std::uint32_t{1} << c)) {
      for (std::uint32_t r : m.columns[c]) out ^= (std::uint64_t{1} << r);
    }
  }
  return out;
}

inline std::uint64_t pack_vector(const tori::gf2::Gf2Vector& v) {
  std::uint64_t out = 0;
  for (std::uint32_t i : v.support) out ^= (std::uint64_t{1} << i);
  return out;
}

struct Exhaustive {
  std::set<std::uint64_t> image;          // all achievable right-hand sides
  std::vector<std::uint32_t> kernel;      // all x masks with M x = 0
  std::size_t rank = 0;                   // log2 |image|
};

inline Exhaustive enumerate(const tori::gf2::Gf2Matrix& m) {
  Exhaustive e;
  const std::uint32_t total = std::uint32_t{1} << m.cols;
  for (std::uint32_t x = 0; x < total; ++x) {
    const std::uint64_t b = apply_mask(m, x);
    e.image.insert(b);
    if (b == 0) e.kernel.push_back(x);
  }
  std::size_t sz = e.image.size();
  while (sz > 1) {
    sz >>= 1;
    ++e.rank;
  }
  return e;
}

}  // namespace oracle
