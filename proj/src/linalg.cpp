#include "cmband/linalg.hpp"

#include <vector>

namespace cmband {

int rank_q(const QMat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      Rat scaled = m(i, j) * Rat(l);
      a[i][j] = scaled.get_num();
    }
  }

  mpz_class prev(1);
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

Rat det_minor(const QMat& m, const std::vector<int>& ri, const std::vector<int>& ci) {
  const int n = static_cast<int>(ri.size());
  if (n == 1) return m(ri[0], ci[0]);
  Rat acc(0);
  std::vector<int> sub(ri.begin() + 1, ri.end());
  for (int j = 0; j < n; ++j) {
    std::vector<int> cs;
    cs.reserve(n - 1);
    for (int k = 0; k < n; ++k)
      if (k != j) cs.push_back(ci[k]);
    Rat term = m(ri[0], ci[j]) * det_minor(m, sub, cs);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

bool any_nonzero_minor(const QMat& m, int k) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> ri(k), ci(k);
  std::function<bool(int, int)> pick_cols = [&](int pos, int start) {
    if (pos == k) return det_minor(m, ri, ci) != 0;
    for (int c = start; c <= cols - (k - pos); ++c) {
      ci[pos] = c;
      if (pick_cols(pos + 1, c + 1)) return true;
    }
    return false;
  };
  std::function<bool(int, int)> pick_rows = [&](int pos, int start) {
    if (pos == k) return pick_cols(0, 0);
    for (int r = start; r <= rows - (k - pos); ++r) {
      ri[pos] = r;
      if (pick_rows(pos + 1, r + 1)) return true;
    }
    return false;
  };
  return pick_rows(0, 0);
}

}  // namespace

int rank_by_minors(const QMat& m) {
  const int maxk = static_cast<int>(std::min(m.rows(), m.cols()));
  int rank = 0;
  for (int k = 1; k <= maxk; ++k) {
    if (any_nonzero_minor(m, k)) rank = k;
    else break;
  }
  return rank;
}

LinSolve solve_linear(QMat a, QVec b, const std::function<Rat(const Rat&)>& reduce) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (reduce(a(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(row));
    std::swap(b(piv), b(row));
    Rat inv = reduce(Rat(1) / reduce(a(row, col)));
    for (int j = col; j < cols; ++j) a(row, j) = reduce(a(row, j) * inv);
    b(row) = reduce(b(row) * inv);
    for (int i = 0; i < rows; ++i) {
      if (i == row) continue;
      Rat f = reduce(a(i, col));
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) a(i, j) = reduce(a(i, j) - f * a(row, j));
      b(i) = reduce(b(i) - f * b(row));
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (reduce(b(i)) != 0) return {false, QVec()};

  LinSolve out;
  out.consistent = true;
  out.solution = QVec::Zero(cols);
  for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) out.solution(pivot_col[i]) = b(i);
  return out;
}

}  // namespace cmband
