#include "frk/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace frk {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols,
                               const std::vector<IntVec>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("from_rows: ragged row");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVec IntMatrix::mul(const IntVec& x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  IntVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& v) { return v == 0; });
}

namespace {

struct SnfState {
  IntMatrix a, u, v, v_inv;

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(r1, j), u(r2, j));
  }

  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, c1), v(i, c2));
    for (std::size_t j = 0; j < v_inv.cols(); ++j)
      std::swap(v_inv(c1, j), v_inv(c2, j));
  }

  // row r -= q * row t
  void row_sub(std::size_t r, const Int& q, std::size_t t) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) -= q * a(t, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) -= q * u(t, j);
  }

  // col c -= q * col t; v_inv picks up the inverse op on rows.
  void col_sub(std::size_t c, const Int& q, std::size_t t) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, c) -= q * a(i, t);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, c) -= q * v(i, t);
    for (std::size_t j = 0; j < v_inv.cols(); ++j)
      v_inv(t, j) += q * v_inv(c, j);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
  }

  // Smallest nonzero |entry| in the trailing block, ties row-major.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        Int mag = abs(a(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SnfDecomposition snf(const IntMatrix& m) {
  SnfState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
              IntMatrix::identity(m.cols())};
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = t, pj = t;
    if (!st.find_pivot(t, pi, pj)) break;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);
    for (;;) {
      // Clear column t below the pivot.
      bool col_clear = false;
      while (!col_clear) {
        col_clear = true;
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
          if (st.a(i, t) == 0) continue;
          Int q = st.a(i, t) / st.a(t, t);  // truncated, |rem| < |pivot|
          st.row_sub(i, q, t);
          if (st.a(i, t) != 0) {
            st.swap_rows(t, i);  // smaller magnitude moves into the pivot
            col_clear = false;
          }
        }
      }
      // Clear row t to the right; may dirty the column again.
      bool row_clear = true;
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (st.a(t, j) == 0) continue;
        Int q = st.a(t, j) / st.a(t, t);
        st.col_sub(j, q, t);
        if (st.a(t, j) != 0) {
          st.swap_cols(t, j);
          row_clear = false;
        }
      }
      if (!row_clear) continue;
      bool dirty_col = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i)
        if (st.a(i, t) != 0) dirty_col = true;
      if (dirty_col) continue;
      // Pivot isolated; enforce divisibility into the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols() && !fixed; ++j)
          if (st.a(i, j) % st.a(t, t) != 0) {
            st.row_sub(t, Int(-1), i);  // row t += row i
            fixed = true;
          }
      if (!fixed) break;
    }
    if (st.a(t, t) < 0) st.negate_row(t);
  }

  SnfDecomposition out;
  out.u = std::move(st.u);
  out.s = std::move(st.a);
  out.v = std::move(st.v);
  out.v_inv = std::move(st.v_inv);
  for (std::size_t t = 0; t < n; ++t)
    if (out.s(t, t) != 0) out.invariant_factors.push_back(out.s(t, t));
  return out;
}

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    // Euclidean elimination within column c, rows >= pivot_row.
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = pivot_row; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        if (best == a.rows() || abs(a(i, c)) < abs(a(best, c))) best = i;
      }
      if (best == a.rows()) break;  // column clear
      if (best != pivot_row)
        for (std::size_t j = 0; j < a.cols(); ++j)
          std::swap(a(pivot_row, j), a(best, j));
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Int q = a(i, c) / a(pivot_row, c);
        for (std::size_t j = 0; j < a.cols(); ++j)
          a(i, j) -= q * a(pivot_row, j);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(pivot_row, c) == 0) continue;
    if (a(pivot_row, c) < 0)
      for (std::size_t j = 0; j < a.cols(); ++j)
        a(pivot_row, j) = -a(pivot_row, j);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(),
                 a(pivot_row, c).get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < a.cols(); ++j)
          a(i, j) -= q * a(pivot_row, j);
    }
    ++pivot_row;
  }
  return a;
}

bool lattice_membership(const IntMatrix& basis, const IntVec& vec) {
  if (vec.size() != basis.cols())
    throw std::invalid_argument("lattice_membership: dimension mismatch");
  IntMatrix h = hnf(basis);
  IntVec r = vec;
  std::size_t row = 0;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    if (row < h.rows() && h(row, c) != 0) {
      if (r[c] % h(row, c) != 0) return false;
      Int q = r[c] / h(row, c);
      for (std::size_t j = 0; j < h.cols(); ++j) r[j] -= q * h(row, j);
      ++row;
    } else if (r[c] != 0) {
      return false;
    }
  }
  return true;
}

std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve_integer: dimension mismatch");
  SnfDecomposition d = snf(m);
  IntVec c = d.u.mul(b);
  const std::size_t n = std::min(m.rows(), m.cols());
  IntVec y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int* s = (i < n) ? &d.s(i, i) : nullptr;
    if (s && *s != 0) {
      if (c[i] % *s != 0) return std::nullopt;
      y[i] = c[i] / *s;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return d.v.mul(y);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace frk
