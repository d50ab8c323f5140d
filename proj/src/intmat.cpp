#include "surfbraid/intmat.hpp"

#include <cstdlib>
#include <sstream>

#include "surfbraid/errors.hpp"

namespace surfbraid {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidParams("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& f = at(r, k);
      if (f == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out.at(r, c) += f * rhs.at(k, c);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidParams("matrix difference shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - rhs.a_[k];
  return out;
}

void IntMatrix::swapRows(std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swapCols(std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::negateRow(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::negateCol(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

void IntMatrix::addRowMultiple(std::size_t dst, std::size_t src,
                               const mpz_class& f) {
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::addColMultiple(std::size_t dst, std::size_t src,
                               const mpz_class& f) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

std::string IntMatrix::toString() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < cols_; ++c)
      out << (c == 0 ? "" : " ") << at(r, c).get_str();
    out << (r + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) out << "[]";
  return out.str();
}

SmithResult smithNormalForm(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithResult res{m, IntMatrix::identity(rows), IntMatrix::identity(cols),
                  IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = res.d;

  // Every elementary move is mirrored into u/v and undone in uInv/vInv, so
  // u*m*v == d and u*uInv == 1 hold at every step.
  auto rowSwap = [&](std::size_t a, std::size_t b) {
    d.swapRows(a, b);
    res.u.swapRows(a, b);
    res.uInv.swapCols(a, b);
  };
  auto colSwap = [&](std::size_t a, std::size_t b) {
    d.swapCols(a, b);
    res.v.swapCols(a, b);
    res.vInv.swapRows(a, b);
  };
  auto rowAdd = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
    d.addRowMultiple(dst, src, f);
    res.u.addRowMultiple(dst, src, f);
    res.uInv.addColMultiple(src, dst, -f);
  };
  auto colAdd = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
    d.addColMultiple(dst, src, f);
    res.v.addColMultiple(dst, src, f);
    res.vInv.addRowMultiple(src, dst, -f);
  };
  auto rowNegate = [&](std::size_t r) {
    d.negateRow(r);
    res.u.negateRow(r);
    res.uInv.negateCol(r);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t s = 0; s < steps; ++s) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = s; r < rows; ++r)
        for (std::size_t c = s; c < cols; ++c) {
          const mpz_class& x = d.at(r, c);
          if (x == 0) continue;
          if (pr == rows || cmp(abs(x), abs(d.at(pr, pc))) < 0) {
            pr = r;
            pc = c;
          }
        }
      if (pr == rows) return res;  // trailing submatrix is zero
      if (pr != s) rowSwap(s, pr);
      if (pc != s) colSwap(s, pc);

      bool clean = true;
      for (std::size_t r = s + 1; r < rows; ++r) {
        if (d.at(r, s) == 0) continue;
        mpz_class q = d.at(r, s) / d.at(s, s);
        rowAdd(r, s, -q);
        if (d.at(r, s) != 0) clean = false;
      }
      for (std::size_t c = s + 1; c < cols; ++c) {
        if (d.at(s, c) == 0) continue;
        mpz_class q = d.at(s, c) / d.at(s, s);
        colAdd(c, s, -q);
        if (d.at(s, c) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller pivot appeared, select again

      // pivot must divide everything that remains, else fold the offending
      // row in and reduce once more
      bool divides = true;
      for (std::size_t r = s + 1; r < rows && divides; ++r)
        for (std::size_t c = s + 1; c < cols && divides; ++c)
          if (!mpz_divisible_p(d.at(r, c).get_mpz_t(),
                               d.at(s, s).get_mpz_t())) {
            rowAdd(s, r, 1);
            divides = false;
          }
      if (!divides) continue;

      if (d.at(s, s) < 0) rowNegate(s);
      break;
    }
  }
  return res;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swapRows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

AbelianInvariants abelianInvariantsOfMatrix(const IntMatrix& m) {
  SmithResult s = smithNormalForm(m);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
    const mpz_class& dk = s.d.at(k, k);
    if (dk != 0) ++nonzero;
    if (dk > 1) inv.torsion.push_back(dk);
  }
  inv.freeRank = m.cols() - nonzero;
  return inv;
}

std::string AbelianInvariants::toString() const {
  std::ostringstream out;
  out << "(" << freeRank << ", [";
  for (std::size_t k = 0; k < torsion.size(); ++k)
    out << (k ? ", " : "") << torsion[k].get_str();
  out << "])";
  return out.str();
}

}  // namespace surfbraid
