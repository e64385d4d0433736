#include "tori/gf2.hpp"

#include <algorithm>
#include <string>

namespace tori::gf2 {

namespace {

// XOR-merge of two sorted index lists (symmetric difference).
std::vector<std::uint32_t> xor_merge(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

void check_support(std::size_t length,
                   const std::vector<std::uint32_t>& support) {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= length) {
      throw DimensionError("support index " + std::to_string(support[i]) +
                           " out of range for length " +
                           std::to_string(length));
    }
    if (i > 0 && support[i - 1] >= support[i]) {
      throw DimensionError("support indices must be strictly increasing");
    }
  }
}

}  // namespace

Gf2Vector Gf2Vector::zeros(std::size_t length) { return Gf2Vector{length, {}}; }

Gf2Vector Gf2Vector::from_support(std::size_t length,
                                  std::vector<std::uint32_t> support) {
  check_support(length, support);
  return Gf2Vector{length, std::move(support)};
}

bool Gf2Vector::get(std::size_t index) const {
  if (index >= length) {
    throw DimensionError("vector index " + std::to_string(index) +
                         " out of range for length " + std::to_string(length));
  }
  return std::binary_search(support.begin(), support.end(),
                            static_cast<std::uint32_t>(index));
}

Gf2Vector add(const Gf2Vector& a, const Gf2Vector& b) {
  if (a.length != b.length) {
    throw DimensionError("adding vectors of lengths " +
                         std::to_string(a.length) + " and " +
                         std::to_string(b.length));
  }
  return Gf2Vector{a.length, xor_merge(a.support, b.support)};
}

Gf2Matrix Gf2Matrix::zeros(std::size_t rows, std::size_t cols) {
  Gf2Matrix m;
  m.rows = rows;
  m.cols = cols;
  m.columns.resize(cols);
  return m;
}

Gf2Matrix Gf2Matrix::from_entries(
    std::size_t rows, std::size_t cols,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries) {
  Gf2Matrix m = zeros(rows, cols);
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) {
      throw DimensionError("entry (" + std::to_string(r) + ", " +
                           std::to_string(c) + ") outside " +
                           std::to_string(rows) + " x " + std::to_string(cols));
    }
    m.columns[c].push_back(r);
  }
  for (auto& col : m.columns) {
    std::sort(col.begin(), col.end());
    // Duplicate entries cancel in pairs.
    std::vector<std::uint32_t> kept;
    for (std::size_t i = 0; i < col.size();) {
      std::size_t j = i;
      while (j < col.size() && col[j] == col[i]) ++j;
      if ((j - i) % 2 == 1) kept.push_back(col[i]);
      i = j;
    }
    col = std::move(kept);
  }
  return m;
}

bool Gf2Matrix::get(std::size_t row, std::size_t col) const {
  if (row >= rows || col >= cols) {
    throw DimensionError("index (" + std::to_string(row) + ", " +
                         std::to_string(col) + ") outside " +
                         std::to_string(rows) + " x " + std::to_string(cols));
  }
  const auto& c = columns[col];
  return std::binary_search(c.begin(), c.end(),
                            static_cast<std::uint32_t>(row));
}

std::size_t Gf2Matrix::entry_count() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t = zeros(cols, rows);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::uint32_t r : columns[c]) {
      t.columns[r].push_back(static_cast<std::uint32_t>(c));
    }
  }
  // Row indices were appended in increasing column order already; each
  // transposed column is therefore sorted.
  return t;
}

Gf2Vector Gf2Matrix::column(std::size_t col) const {
  if (col >= cols) {
    throw DimensionError("column " + std::to_string(col) + " outside " +
                         std::to_string(cols));
  }
  return Gf2Vector{rows, columns[col]};
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& x) const {
  if (x.length != cols) {
    throw DimensionError("applying " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " matrix to vector of length " +
                         std::to_string(x.length));
  }
  std::vector<std::uint32_t> acc;
  for (std::uint32_t c : x.support) acc = xor_merge(acc, columns[c]);
  return Gf2Vector{rows, std::move(acc)};
}

Gf2Solver::Gf2Solver(const Gf2Matrix& m) : rows_(m.rows), cols_(m.cols) {
  low_to_slot_.assign(rows_, -1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::vector<std::uint32_t> col = m.columns[c];
    std::vector<std::uint32_t> combo = {static_cast<std::uint32_t>(c)};
    while (!col.empty()) {
      std::uint32_t low = col.back();
      std::int64_t slot = low_to_slot_[low];
      if (slot < 0) break;
      col = xor_merge(col, reduced_[static_cast<std::size_t>(slot)]);
      combo = xor_merge(combo, combo_[static_cast<std::size_t>(slot)]);
    }
    if (col.empty()) {
      kernel_.push_back(Gf2Vector{cols_, std::move(combo)});
    } else {
      low_to_slot_[col.back()] = static_cast<std::int64_t>(reduced_.size());
      reduced_.push_back(std::move(col));
      combo_.push_back(std::move(combo));
    }
  }
  rank_ = reduced_.size();
}

Gf2Vector Gf2Solver::reduce(const Gf2Vector& b) const {
  if (b.length != rows_) {
    throw DimensionError("right-hand side of length " +
                         std::to_string(b.length) + " against " +
                         std::to_string(rows_) + " rows");
  }
  // Full normal form: cancel the highest remaining support index that is a
  // pivot row, until none is left.  Each cancellation only toggles lower
  // indices, so the result is the unique representative of b modulo the
  // column space with no support on any pivot row — which makes reduce()
  // linear, a property the homology-class machinery relies on.
  std::vector<std::uint32_t> cur = b.support;
  while (true) {
    std::int64_t slot = -1;
    for (auto it = cur.rbegin(); it != cur.rend(); ++it) {
      if (low_to_slot_[*it] >= 0) {
        slot = low_to_slot_[*it];
        break;
      }
    }
    if (slot < 0) break;
    cur = xor_merge(cur, reduced_[static_cast<std::size_t>(slot)]);
  }
  return Gf2Vector{rows_, std::move(cur)};
}

std::optional<Gf2Vector> Gf2Solver::solve(const Gf2Vector& b) const {
  if (b.length != rows_) {
    throw DimensionError("right-hand side of length " +
                         std::to_string(b.length) + " against " +
                         std::to_string(rows_) + " rows");
  }
  std::vector<std::uint32_t> cur = b.support;
  std::vector<std::uint32_t> combo;
  while (!cur.empty()) {
    std::int64_t slot = low_to_slot_[cur.back()];
    if (slot < 0) return std::nullopt;
    cur = xor_merge(cur, reduced_[static_cast<std::size_t>(slot)]);
    combo = xor_merge(combo, combo_[static_cast<std::size_t>(slot)]);
  }
  return Gf2Vector{cols_, std::move(combo)};
}

std::vector<Gf2Vector> Gf2Solver::kernel_basis() const { return kernel_; }

std::size_t rank(const Gf2Matrix& m) { return Gf2Solver(m).rank(); }

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
  return Gf2Solver(m).solve(b);
}

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m) {
  return Gf2Solver(m).kernel_basis();
}

}  // namespace tori::gf2
