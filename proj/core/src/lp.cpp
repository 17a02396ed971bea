#include "brickforge/lp.hpp"

#include <algorithm>

namespace brickforge::lp {

namespace {

// Full-tableau simplex state.  rows[i] has ncols entries plus the rhs at the
// back; basis[i] is the variable whose column is the i-th identity column.
struct Tableau {
  std::vector<QVec> rows;
  QVec rhs;
  std::vector<int> basis;
  int ncols = 0;

  void pivot(int r, int j) {
    Rational p = rows[r][j];
    for (int t = 0; t < ncols; ++t) rows[r][t] /= p;
    rhs[r] /= p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rational f = rows[i][j];
      if (f == 0) continue;
      for (int t = 0; t < ncols; ++t) rows[i][t] -= f * rows[r][t];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = j;
  }

  // Minimizes cost'x over the current tableau.  Returns false when unbounded.
  bool run(const QVec& cost) {
    for (;;) {
      // Reduced costs relative to the current basis.
      QVec red(cost);
      Rational unused = 0;
      for (size_t i = 0; i < rows.size(); ++i) {
        Rational cb = cost[basis[i]];
        if (cb == 0) continue;
        for (int t = 0; t < ncols; ++t) red[t] -= cb * rows[i][t];
      }
      (void)unused;
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (red[j] < 0) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best = 0;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  Rational objective(const QVec& cost) const {
    Rational v = 0;
    for (size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rhs[i];
    return v;
  }
};

}  // namespace

Result solve(const std::vector<QVec>& A, const QVec& b, const QVec& c) {
  size_t m = A.size();
  size_t nv = c.size();
  for (const auto& row : A)
    if (row.size() != nv) throw DimensionMismatch("lp: row width mismatch");
  if (b.size() != m) throw DimensionMismatch("lp: rhs length mismatch");

  Tableau t;
  t.ncols = static_cast<int>(nv + m);
  t.rows.assign(m, QVec(static_cast<size_t>(t.ncols), Rational(0)));
  t.rhs.assign(m, Rational(0));
  t.basis.resize(m);
  for (size_t i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    for (size_t j = 0; j < nv; ++j) t.rows[i][j] = neg ? -A[i][j] : A[i][j];
    t.rhs[i] = neg ? -b[i] : b[i];
    t.rows[i][nv + i] = 1;  // artificial
    t.basis[i] = static_cast<int>(nv + i);
  }

  // Phase 1: minimize the sum of artificials.
  QVec phase1(static_cast<size_t>(t.ncols), Rational(0));
  for (size_t i = 0; i < m; ++i) phase1[nv + i] = 1;
  bool ok = t.run(phase1);
  check(ok, "phase-1 objective is bounded");
  if (t.objective(phase1) != 0) return {Status::infeasible, 0, {}};

  // Drive leftover artificials out of the basis; rows that cannot be pivoted
  // are redundant equations and get dropped.
  for (size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < static_cast<int>(nv)) {
      ++i;
      continue;
    }
    int j = -1;
    for (size_t cand = 0; cand < nv; ++cand) {
      if (t.rows[i][cand] != 0) {
        j = static_cast<int>(cand);
        break;
      }
    }
    if (j >= 0) {
      t.pivot(static_cast<int>(i), j);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<long>(i));
      t.rhs.erase(t.rhs.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
    }
  }

  // Phase 2 over the original columns only.
  t.ncols = static_cast<int>(nv);
  for (auto& row : t.rows) row.resize(nv);
  QVec cost(c);
  if (!t.run(cost)) return {Status::unbounded, 0, {}};

  Result res;
  res.status = Status::optimal;
  res.value = t.objective(cost);
  res.x.assign(nv, Rational(0));
  for (size_t i = 0; i < t.rows.size(); ++i) res.x[static_cast<size_t>(t.basis[i])] = t.rhs[i];
  return res;
}

bool feasible(const std::vector<QVec>& A, const QVec& b) {
  QVec c(A.empty() ? 0 : A[0].size(), Rational(0));
  if (!A.empty() && c.empty()) {
    // No variables: feasible iff b = 0.
    for (const auto& v : b)
      if (v != 0) return false;
    return true;
  }
  return solve(A, b, c).status == Status::optimal;
}

}  // namespace brickforge::lp
