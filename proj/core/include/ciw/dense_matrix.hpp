#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ciw/prime_field.hpp"

namespace ciw {

/// Row-major matrix over GF(p). Entries are stored as reduced residues.
class DenseMatrix {
 public:
  /// Zero matrix. Throws ResourceError if rows*cols overflows or exceeds
  /// `max_entries`.
  DenseMatrix(std::size_t rows, std::size_t cols, const PrimeField& field,
              std::uint64_t max_entries = kUnlimited);

  static constexpr std::uint64_t kUnlimited = ~std::uint64_t{0};

  static DenseMatrix identity(std::size_t n, const PrimeField& field);
  /// Builds from row lists; values are reduced mod p. Throws DomainError on ragged input.
  static DenseMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                               const PrimeField& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  FieldElement at(std::size_t i, std::size_t j) const { return {entries_[i * cols_ + j], field_}; }
  Residue raw(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t value) {
    entries_[i * cols_ + j] = field_.reduce(value);
  }

  std::span<Residue> row(std::size_t i) noexcept { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Residue> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }

  DenseMatrix transposed() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<Residue> entries_;
};

/// Rank over GF(p) by Gaussian elimination. Takes a copy; the argument is untouched.
std::size_t rank_mod_p(DenseMatrix m);

}  // namespace ciw
