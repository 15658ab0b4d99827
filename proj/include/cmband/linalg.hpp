#pragma once

#include <functional>

#include "cmband/rational.hpp"

namespace cmband {

// Exact rank of a rational matrix via fraction-free (Bareiss) elimination
// on the denominator-cleared integer matrix.
int rank_q(const QMat& m);

// Reference oracle: rank as the largest k with a nonzero k-by-k minor.
// Exponential; test harness use only.
int rank_by_minors(const QMat& m);

struct LinSolve {
  bool consistent = false;
  QVec solution;  // one particular solution, free variables at zero
};

// Solves a*x = b exactly over the rationals, or over a prime field when
// `reduce` maps coefficients into it. `reduce` must be a field projection;
// the identity function gives plain rational elimination.
LinSolve solve_linear(QMat a, QVec b, const std::function<Rat(const Rat&)>& reduce);

inline LinSolve solve_linear(QMat a, QVec b) {
  return solve_linear(std::move(a), std::move(b), [](const Rat& c) { return c; });
}

}  // namespace cmband
