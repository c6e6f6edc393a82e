#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace cylrig {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const mpq_class& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  std::vector<mpq_class> multiply(const std::vector<mpq_class>& x) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

// Rank over the rationals. When `upper_bound` is given and known to hold,
// a modular rank reaching it is accepted without exact elimination.
int exact_rank(const RationalMatrix& m, std::optional<int> upper_bound = std::nullopt);

// Fraction-free elimination only, for cross-checking.
int bareiss_rank(const RationalMatrix& m);

// Rank modulo 2^61 - 1, or nullopt if a denominator vanishes mod p.
std::optional<int> modular_rank(const RationalMatrix& m);

// Basis of the right kernel, from the reduced row echelon form.
std::vector<std::vector<mpq_class>> kernel_basis(const RationalMatrix& m);

}  // namespace cylrig
