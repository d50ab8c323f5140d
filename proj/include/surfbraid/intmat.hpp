#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace surfbraid {

// Dense matrix of arbitrary-precision integers, row major.  Only what the
// abelianization pipeline needs; this is not a linear algebra library.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;

  void swapRows(std::size_t a, std::size_t b);
  void swapCols(std::size_t a, std::size_t b);
  void negateRow(std::size_t r);
  void negateCol(std::size_t c);
  // row[dst] += f * row[src], and the column analogue
  void addRowMultiple(std::size_t dst, std::size_t src, const mpz_class& f);
  void addColMultiple(std::size_t dst, std::size_t src, const mpz_class& f);

  std::string toString() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

// u * m * v == d with u, v unimodular, d diagonal, and each diagonal entry
// nonnegative and dividing the next.  uInv and vInv are maintained alongside
// so callers can change basis without inverting anything.
struct SmithResult {
  IntMatrix d, u, v, uInv, vInv;
};

SmithResult smithNormalForm(const IntMatrix& m);

// Exact determinant by fraction-free elimination.  Square input only.
mpz_class determinant(const IntMatrix& m);

struct AbelianInvariants {
  std::size_t freeRank = 0;
  std::vector<mpz_class> torsion;  // entries > 1, each dividing the next

  bool operator==(const AbelianInvariants&) const = default;
  std::string toString() const;
};

// Invariants of the cokernel Z^cols / rowspace(m).
AbelianInvariants abelianInvariantsOfMatrix(const IntMatrix& m);

}  // namespace surfbraid
