#include "ciw/dense_matrix.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ciw/errors.hpp"

namespace ciw {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, const PrimeField& field,
                         std::uint64_t max_entries)
    : rows_(rows), cols_(cols), field_(field) {
  if (cols != 0 && rows > std::numeric_limits<std::size_t>::max() / cols) {
    throw ResourceError("matrix dimensions " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " overflow the address space",
                        max_entries);
  }
  const std::uint64_t n = static_cast<std::uint64_t>(rows) * cols;
  if (n > max_entries) {
    throw ResourceError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " has " +
                            std::to_string(n) + " entries, above the cap of " +
                            std::to_string(max_entries),
                        max_entries);
  }
  entries_.assign(n, 0);
}

DenseMatrix DenseMatrix::identity(std::size_t n, const PrimeField& field) {
  DenseMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                                   const PrimeField& field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = entries_[i * cols_ + j];
  }
  return t;
}

namespace {

// y += f * x over GF(p), p < 2^31. Shoup's trick: with fs = floor(f * 2^32 / p)
// the quotient estimate is off by at most one, so every step stays in 32 bits.
void axpy(Residue* __restrict y, const Residue* __restrict x, std::size_t n, Residue f,
          std::uint32_t p) {
  const std::uint32_t fs =
      static_cast<std::uint32_t>((static_cast<std::uint64_t>(f) << 32) / p);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t xv = x[j];
    const std::uint32_t q =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(xv) * fs) >> 32);
    std::uint32_t t = xv * f - q * p;
    t = std::min(t, t - p);
    const std::uint32_t s = y[j] + t;
    y[j] = std::min(s, s - p);
  }
}

}  // namespace

// Rows are reduced one at a time against the pivot rows found so far, which are
// kept scaled to a leading 1. A row that still has a nonzero entry in a column
// without a pivot becomes that column's pivot. Stops once every column has one.
std::size_t rank_mod_p(DenseMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const PrimeField& field = m.field();
  const std::uint32_t p = field.modulus();
  constexpr std::size_t kNone = ~std::size_t{0};

  std::vector<std::size_t> pivot_of(cols, kNone);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows && rank < cols; ++i) {
    Residue* r = m.row(i).data();
    for (std::size_t col = 0; col < cols; ++col) {
      if (r[col] == 0) continue;
      if (pivot_of[col] == kNone) {
        const Residue inv = field.inv(r[col]);
        for (std::size_t j = col; j < cols; ++j) r[j] = field.mul(r[j], inv);
        pivot_of[col] = i;
        ++rank;
        break;
      }
      const Residue* prow = m.row(pivot_of[col]).data();
      axpy(r + col + 1, prow + col + 1, cols - col - 1, field.neg(r[col]), p);
      r[col] = 0;
    }
  }
  return rank;
}

}  // namespace ciw
