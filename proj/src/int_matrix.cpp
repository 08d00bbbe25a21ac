#include "hypersurf/int_matrix.hpp"

#include <sstream>

#include "hypersurf/error.hpp"

namespace hypersurf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw Error(Errc::InvalidArgument, "matrix must have at least one row and one column");
  }
  entries_.resize(rows * cols);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> converted;
  for (const auto& r : rows) {
    IntVector row;
    for (long v : r) row.emplace_back(v);
    converted.push_back(std::move(row));
  }
  return from_rows(converted);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(Errc::InvalidArgument, "matrix must have at least one row and one column");
  }
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty() || columns.front().empty()) {
    throw Error(Errc::InvalidArgument, "matrix must have at least one row and one column");
  }
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows_) throw Error(Errc::DimensionMismatch, "ragged columns");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {
void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::DimensionMismatch, "matrix shapes differ");
}
}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b);
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b);
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& e : c.entries_) e = -e;
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& e : c.entries_) e *= s;
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols_ != v.size()) throw Error(Errc::DimensionMismatch, "vector length differs");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0)
        mpz_addmul(out[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
  return out;
}

Integer bilinear(const IntMatrix& m, std::span<const Integer> u, std::span<const Integer> v) {
  if (m.rows() != u.size() || m.cols() != v.size())
    throw Error(Errc::DimensionMismatch, "bilinear form arguments have wrong length");
  Integer total = 0;
  Integer row_sum;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) == 0) continue;
    row_sum = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0)
        mpz_addmul(row_sum.get_mpz_t(), m(i, j).get_mpz_t(), v[j].get_mpz_t());
    total += u[i] * row_sum;
  }
  return total;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

namespace {
Integer parse_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(v.dump());
  if (!v.is_string()) throw Error(Errc::Parse, "matrix entry is not a decimal string");
  const std::string& s = v.get_ref<const std::string&>();
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw Error(Errc::Parse, "malformed integer '" + s + "'");
  return Integer(s, 10);
}
}  // namespace

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw Error(Errc::Parse, "matrix JSON needs rows, cols and data");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw Error(Errc::Parse, "rows and cols must be non-negative integers");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const auto& data = j["data"];
  if (!data.is_array() || data.size() != rows)
    throw Error(Errc::Parse, "data does not have 'rows' rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!data[i].is_array() || data[i].size() != cols)
      throw Error(Errc::Parse, "data row " + std::to_string(i) + " does not have 'cols' entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_integer(data[i][k]);
  }
  return m;
}

}  // namespace hypersurf
