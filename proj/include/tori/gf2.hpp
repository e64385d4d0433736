// Exact linear algebra over GF(2), sparse representation.
//
// Vectors store the strictly increasing list of their 1-positions; matrices
// store one such list per column.  Elimination is column reduction: columns
// are scanned left to right, and a column is repeatedly XOR-cancelled against
// the previously recorded column having the same lowest 1-row, until its low
// row is fresh or the column dies.  The solver caches the reduction together
// with the combination of original columns that produced each reduced column,
// so a single elimination answers rank queries, linear systems, and kernel
// bases, and can be reused across many right-hand sides.
//
// Everything is deterministic and allocation-bounded; there is no floating
// point anywhere in the library.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tori/errors.hpp"

namespace tori::gf2 {

// Vector in GF(2)^length; support = sorted unique positions of the 1 bits.
struct Gf2Vector {
  std::size_t length = 0;
  std::vector<std::uint32_t> support;

  static Gf2Vector zeros(std::size_t length);
  // Validates that the support is strictly increasing and within range.
  static Gf2Vector from_support(std::size_t length,
                                std::vector<std::uint32_t> support);

  bool get(std::size_t index) const;
  bool is_zero() const { return support.empty(); }

  bool operator==(const Gf2Vector& other) const = default;
};

// XOR of two vectors of equal length.
Gf2Vector add(const Gf2Vector& a, const Gf2Vector& b);

// Matrix in GF(2)^{rows x cols}, stored column-major as sorted row lists.
struct Gf2Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::uint32_t>> columns;  // size cols

  static Gf2Matrix zeros(std::size_t rows, std::size_t cols);
  // Validates row/col indices; duplicate (r, c) pairs cancel mod 2.
  static Gf2Matrix from_entries(
      std::size_t rows, std::size_t cols,
      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries);

  bool get(std::size_t row, std::size_t col) const;
  std::size_t entry_count() const;
  Gf2Matrix transposed() const;
  Gf2Vector column(std::size_t col) const;
  // y = M x  (x has length cols; result has length rows).
  Gf2Vector apply(const Gf2Vector& x) const;
};

// Cached column reduction of one matrix.
class Gf2Solver {
 public:
  explicit Gf2Solver(const Gf2Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }

  // Some x with M x = b, or nullopt when b is outside the column space.
  // Among all solutions, the one produced by greedy low-row cancellation.
  std::optional<Gf2Vector> solve(const Gf2Vector& b) const;

  // Residual of b after cancelling against all reduced columns: zero iff
  // b lies in the column space.  Exposed so callers can run incremental
  // independence tests against the column space without re-eliminating.
  Gf2Vector reduce(const Gf2Vector& b) const;

  // cols - rank vectors spanning the kernel, in increasing order of the
  // original column where each dependency appeared.
  std::vector<Gf2Vector> kernel_basis() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t rank_ = 0;
  // Surviving reduced columns and the original-column combinations that
  // produced them, addressed by their low row via low_to_slot_.
  std::vector<std::vector<std::uint32_t>> reduced_;
  std::vector<std::vector<std::uint32_t>> combo_;
  std::vector<std::int64_t> low_to_slot_;  // size rows_, -1 = free
  std::vector<Gf2Vector> kernel_;
};

// One-shot conveniences (each builds a throwaway solver).
std::size_t rank(const Gf2Matrix& m);
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b);
std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m);

}  // namespace tori::gf2
