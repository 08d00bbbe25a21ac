#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace hypersurf {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Empty matrices cannot be constructed: every instance has at least one row
/// and one column. Instances are values; nothing is shared between copies.
class IntMatrix {
 public:
  /// Zero matrix of the given shape. Throws InvalidArgument on a zero extent.
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  /// Matrix whose columns are the given vectors (all of equal length).
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  IntVector column(std::size_t j) const;
  std::span<const Integer> entries() const noexcept { return entries_; }

  IntMatrix transpose() const;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

/// uᵀ·m·v.
Integer bilinear(const IntMatrix& m, std::span<const Integer> u, std::span<const Integer> v);

std::string to_string(const IntMatrix& m);

// Matrix JSON: {"rows": n, "cols": m, "data": [["1", "-2", ...], ...]}.
// Entries are decimal strings so values of any size survive any JSON reader.
nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace hypersurf
