#include "hypersurf/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hypersurf/error.hpp"

namespace hypersurf {

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

namespace {

// Upper triangle of the running Schur complement. Entry (i,j) is stored as a
// numerator together with the index of the leading minor it is scaled by:
// the rational Schur entry equals value / minors[tag]. Bringing an entry to
// the current stage multiplies by minors[current] / minors[tag], which is
// exact because scaled Schur entries are bordered minors of the input.
class SchurTriangle {
 public:
  explicit SchurTriangle(const IntMatrix& s) : n_(s.rows()) {
    values_.resize(n_ * (n_ + 1) / 2);
    tags_.assign(values_.size(), 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) values_[index(i, j)] = s(i, j);
    minors_.emplace_back(1);
  }

  bool is_zero(std::size_t i, std::size_t j) const { return sgn(values_[index(i, j)]) == 0; }

  // Value of the entry scaled by the current leading minor.
  Integer& current(std::size_t i, std::size_t j) {
    const std::size_t k = index(i, j);
    Integer& v = values_[k];
    const std::uint32_t now = stage();
    if (tags_[k] != now) {
      if (sgn(v) != 0) {
        mpz_mul(v.get_mpz_t(), v.get_mpz_t(), minors_[now].get_mpz_t());
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), minors_[tags_[k]].get_mpz_t());
      }
      tags_[k] = now;
    }
    return v;
  }

  // Overwrite an entry with a value scaled by the minor of the next stage.
  void store_next(std::size_t i, std::size_t j, Integer&& v) {
    const std::size_t k = index(i, j);
    values_[k] = std::move(v);
    tags_[k] = stage() + 1;
  }

  const Integer& minor() const { return minors_.back(); }
  void advance(Integer next_minor) { minors_.push_back(std::move(next_minor)); }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }
  std::uint32_t stage() const { return static_cast<std::uint32_t>(minors_.size() - 1); }

  std::size_t n_;
  std::vector<Integer> values_;
  std::vector<std::uint32_t> tags_;
  std::vector<Integer> minors_;
};

}  // namespace

Inertia inertia(const IntMatrix& s) {
  if (!s.is_symmetric()) throw Error(Errc::NonSymmetric, "inertia requires a symmetric matrix");
  const std::size_t n = s.rows();
  SchurTriangle schur(s);
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  Inertia result;
  std::vector<std::size_t> hit;
  IntVector first, second;
  Integer t1, t2;

  while (!remaining.empty()) {
    auto diag = std::find_if(remaining.begin(), remaining.end(),
                             [&](std::size_t i) { return !schur.is_zero(i, i); });
    if (diag != remaining.end()) {
      const std::size_t p = *diag;
      remaining.erase(diag);
      const Integer pivot = schur.current(p, p);
      const Integer& minor = schur.minor();
      if (sgn(pivot) * sgn(minor) > 0) ++result.n_plus; else ++result.n_minus;

      hit.clear();
      first.clear();
      for (std::size_t j : remaining) {
        if (schur.is_zero(p, j)) continue;
        hit.push_back(j);
        first.push_back(schur.current(p, j));
      }
      for (std::size_t a = 0; a < hit.size(); ++a) {
        for (std::size_t b = a; b < hit.size(); ++b) {
          const Integer& w = schur.current(hit[a], hit[b]);
          mpz_mul(t1.get_mpz_t(), pivot.get_mpz_t(), w.get_mpz_t());
          mpz_submul(t1.get_mpz_t(), first[a].get_mpz_t(), first[b].get_mpz_t());
          mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), minor.get_mpz_t());
          schur.store_next(hit[a], hit[b], std::move(t1));
          t1 = Integer();
        }
      }
      schur.advance(pivot);
      continue;
    }

    // Every remaining diagonal entry vanishes: pivot on the first nonzero
    // off-diagonal pair, which spans a hyperbolic plane.
    std::size_t p = n, q = n;
    for (std::size_t a = 0; a < remaining.size() && p == n; ++a)
      for (std::size_t b = a + 1; b < remaining.size(); ++b)
        if (!schur.is_zero(remaining[a], remaining[b])) {
          p = remaining[a];
          q = remaining[b];
          break;
        }
    if (p == n) {
      result.n_zero += remaining.size();
      break;
    }
    remaining.erase(std::find(remaining.begin(), remaining.end(), q));
    remaining.erase(std::find(remaining.begin(), remaining.end(), p));
    ++result.n_plus;
    ++result.n_minus;

    const Integer off = schur.current(p, q);
    const Integer minor = schur.minor();
    const Integer off_sq = off * off;
    const Integer minor_sq = minor * minor;
    Integer next_minor = -off_sq;
    mpz_divexact(next_minor.get_mpz_t(), next_minor.get_mpz_t(), minor.get_mpz_t());

    hit.clear();
    first.clear();
    second.clear();
    for (std::size_t j : remaining) {
      if (schur.is_zero(p, j) && schur.is_zero(q, j)) continue;
      hit.push_back(j);
      first.push_back(schur.current(p, j));
      second.push_back(schur.current(q, j));
    }
    // Sylvester's identity on the bordered 3×3 minor with rows (p, q, l) and
    // columns (p, q, m): −off²·w + off·(a_qm·a_lp + a_pm·a_lq), over minor².
    for (std::size_t a = 0; a < hit.size(); ++a) {
      for (std::size_t b = a; b < hit.size(); ++b) {
        const Integer& w = schur.current(hit[a], hit[b]);
        mpz_mul(t2.get_mpz_t(), second[b].get_mpz_t(), first[a].get_mpz_t());
        mpz_addmul(t2.get_mpz_t(), first[b].get_mpz_t(), second[a].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), t2.get_mpz_t(), off.get_mpz_t());
        mpz_mul(t1.get_mpz_t(), off_sq.get_mpz_t(), w.get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t2.get_mpz_t(), t1.get_mpz_t());
        mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), minor_sq.get_mpz_t());
        schur.store_next(hit[a], hit[b], std::move(t1));
        t1 = Integer();
      }
    }
    schur.advance(std::move(next_minor));
  }
  return result;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw Error(Errc::NonSquare, "determinant requires a square matrix");
  const std::size_t n = a.rows();
  std::vector<IntVector> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i].assign(a.row(i).begin(), a.row(i).end());
  int sign = 1;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(m[piv][k]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), m[k][k].get_mpz_t(), m[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_unimodular(const IntMatrix& t) {
  const Integer det = determinant(t);
  return det == 1 || det == -1;
}

std::size_t rank(const IntMatrix& a) {
  std::vector<IntVector> m(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) m[i].assign(a.row(i).begin(), a.row(i).end());
  std::size_t r = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        mpz_mul(t.get_mpz_t(), m[r][col].get_mpz_t(), m[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), m[i][col].get_mpz_t(), m[r][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b) {
  if (a.rows() != b.size()) throw Error(Errc::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  // Column operations act on h = a and on u = identity, keeping a·u == h.
  // Columns are stored contiguously for the operations below.
  std::vector<IntVector> h(cols, IntVector(rows));
  std::vector<IntVector> u(cols, IntVector(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) h[j][i] = a(i, j);
    u[j][j] = 1;
  }
  auto add_column = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < rows; ++i) mpz_addmul(h[dst][i].get_mpz_t(), f.get_mpz_t(), h[src][i].get_mpz_t());
    for (std::size_t i = 0; i < cols; ++i) mpz_addmul(u[dst][i].get_mpz_t(), f.get_mpz_t(), u[src][i].get_mpz_t());
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::size_t next = 0;
  Integer q;
  for (std::size_t i = 0; i < rows && next < cols; ++i) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = next; j < cols; ++j) {
        if (sgn(h[j][i]) == 0) continue;
        if (best == cols || mpz_cmpabs(h[j][i].get_mpz_t(), h[best][i].get_mpz_t()) < 0) best = j;
      }
      if (best == cols) break;
      if (best != next) {
        std::swap(h[best], h[next]);
        std::swap(u[best], u[next]);
      }
      bool reduced = true;
      for (std::size_t j = next + 1; j < cols; ++j) {
        if (sgn(h[j][i]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), h[j][i].get_mpz_t(), h[next][i].get_mpz_t());
        q = -q;
        add_column(j, next, q);
        if (sgn(h[j][i]) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (next < cols && sgn(h[next][i]) != 0) {
      if (sgn(h[next][i]) < 0) {
        for (auto& e : h[next]) e = -e;
        for (auto& e : u[next]) e = -e;
      }
      pivots.emplace_back(i, next);
      ++next;
    }
  }

  // Forward substitution through the column echelon form; coordinates
  // without a pivot stay zero.
  IntVector y(cols);
  std::size_t k = 0;
  Integer residual;
  for (std::size_t i = 0; i < rows; ++i) {
    residual = b[i];
    for (std::size_t j = 0; j < next; ++j)
      if (sgn(y[j]) != 0) mpz_submul(residual.get_mpz_t(), h[j][i].get_mpz_t(), y[j].get_mpz_t());
    if (k < pivots.size() && pivots[k].first == i) {
      const Integer& p = h[pivots[k].second][i];
      if (!mpz_divisible_p(residual.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[pivots[k].second].get_mpz_t(), residual.get_mpz_t(), p.get_mpz_t());
      ++k;
    } else if (sgn(residual) != 0) {
      return std::nullopt;
    }
  }

  IntVector x(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    if (sgn(y[j]) == 0) continue;
    for (std::size_t i = 0; i < cols; ++i) mpz_addmul(x[i].get_mpz_t(), u[j][i].get_mpz_t(), y[j].get_mpz_t());
  }
  return x;
}

IntMatrix unipotent_upper_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw Error(Errc::BadBlockShape, "unipotent inverse needs a square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 1) throw Error(Errc::BadBlockShape, "diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (sgn(m(i, j)) != 0) throw Error(Errc::BadBlockShape, "entry below the diagonal");
  }
  IntMatrix inv = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      Integer acc = 0;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (sgn(m(i, k)) != 0) mpz_submul(acc.get_mpz_t(), m(i, k).get_mpz_t(), inv(k, j).get_mpz_t());
      inv(i, j) = acc;
    }
  }
  return inv;
}

}  // namespace hypersurf
