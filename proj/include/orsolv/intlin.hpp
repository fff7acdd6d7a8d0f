#pragma once

#include <gmpxx.h>

#include <vector>

#include "orsolv/words.hpp"

namespace orsolv::intlin {

using Int = mpz_class;

// Dense integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

// Invariant factors d_1 | d_2 | ... | d_r, nonnegative, padded with trailing
// zeros up to min(rows, cols).
std::vector<Int> smith_normal_form(IntMatrix m);

// Rational first homology data of a presentation: betti number plus torsion
// invariant factors (> 1, divisibility chain).
struct H1Data {
  int betti = 0;
  std::vector<Int> torsion;
};

H1Data h1_of_presentation(const Presentation& p);

}  // namespace orsolv::intlin
