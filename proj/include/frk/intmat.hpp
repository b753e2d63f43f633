#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace frk {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  // `cols` disambiguates matrices with zero rows.
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  // Matrix times column vector.
  IntVec mul(const IntVec& x) const;

  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Smith normal form u*m*v = s with u, v unimodular and the diagonal of s a
/// non-negative divisibility chain. v_inv is kept alongside so lattice
/// changes of basis can be inverted without re-solving.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix v_inv;
  std::vector<Int> invariant_factors;
};

SnfDecomposition snf(const IntMatrix& m);

/// Row Hermite normal form. Shape is preserved; zero rows sink to the bottom.
/// Pivots are positive and entries above each pivot are reduced into
/// [0, pivot).
IntMatrix hnf(const IntMatrix& m);

/// True iff vec is an integer combination of the rows of basis.
bool lattice_membership(const IntMatrix& basis, const IntVec& vec);

/// Some integer solution x of m*x = b, or nullopt when none exists.
std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b);

Int determinant(const IntMatrix& m);

}  // namespace frk
