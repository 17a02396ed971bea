#pragma once

#include <vector>

#include "brickforge/numeric.hpp"

namespace brickforge::lp {

using num::QVec;
using num::Rational;

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rational value = 0;  // objective at optimum (phase-2 value)
  QVec x;              // primal solution, empty unless optimal
};

// Exact two-phase simplex for the standard form
//   min c'x   s.t.  A x = b,  x >= 0
// over arbitrary-precision rationals.  Pivoting uses Bland's rule (entering:
// smallest column index with negative reduced cost; leaving: smallest basic
// variable among minimum-ratio ties), so the method always terminates.
Result solve(const std::vector<QVec>& A, const QVec& b, const QVec& c);

// Feasibility of { x >= 0 : A x = b } (phase 1 only).
bool feasible(const std::vector<QVec>& A, const QVec& b);

}  // namespace brickforge::lp
