#include "choicelab/lp.hpp"

#include <cstddef>

namespace choicelab {

namespace {

// Dense tableau. Columns: structural vars, slacks, artificials, rhs.
class Tableau {
public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows * cols) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r * cols_ + c]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational pv = at(pr, pc);
    for (std::size_t c = 0; c < cols_; ++c) at(pr, c) /= pv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || at(r, pc) == 0) continue;
      const Rational f = at(r, pc);
      for (std::size_t c = 0; c < cols_; ++c) at(r, c) -= f * at(pr, c);
    }
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> t_;
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& a_ub,
                  const std::vector<Rational>& b_ub,
                  const std::vector<std::vector<Rational>>& a_eq,
                  const std::vector<Rational>& b_eq,
                  const std::vector<Rational>& c) {
  const std::size_t n = c.size();
  const std::size_t m_ub = a_ub.size();
  const std::size_t m_eq = a_eq.size();
  const std::size_t m = m_ub + m_eq;

  // Column layout: [0,n) structural, [n,n+m_ub) slacks,
  // [n+m_ub, n+m_ub+m) artificials (one per row, unused ones stay nonbasic),
  // last column rhs.
  const std::size_t art0 = n + m_ub;
  const std::size_t cols = n + m_ub + m + 1;
  const std::size_t rhs = cols - 1;
  Tableau t(m + 1, cols);

  std::vector<std::size_t> basis(m);
  std::vector<bool> artificial_used(m, false);

  for (std::size_t r = 0; r < m; ++r) {
    const bool is_ub = r < m_ub;
    const std::vector<Rational>& row = is_ub ? a_ub[r] : a_eq[r - m_ub];
    const Rational b = is_ub ? b_ub[r] : b_eq[r - m_ub];
    const int sign = b < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = sign * row[j];
    t.at(r, rhs) = sign * b;
    if (is_ub) t.at(r, n + r) = sign;  // slack
    if (is_ub && sign > 0) {
      basis[r] = n + r;
    } else {
      t.at(r, art0 + r) = 1;
      basis[r] = art0 + r;
      artificial_used[r] = true;
    }
  }

  const std::size_t obj = m;  // objective row index

  // Runs simplex on the current objective row; assumes the row has been
  // priced out against the basis. Bland: smallest eligible column enters,
  // ratio ties broken by smallest basic variable.
  auto simplex = [&](std::size_t col_limit) -> bool {
    for (;;) {
      std::size_t pc = cols;
      for (std::size_t j = 0; j < col_limit; ++j)
        if (t.at(obj, j) > 0) { pc = j; break; }
      if (pc == cols) return true;  // optimal
      std::size_t pr = m;
      Rational best;
      for (std::size_t r = 0; r < m; ++r) {
        if (t.at(r, pc) <= 0) continue;
        Rational ratio = t.at(r, rhs) / t.at(r, pc);
        if (pr == m || ratio < best ||
            (ratio == best && basis[r] < basis[pr])) {
          pr = r;
          best = ratio;
        }
      }
      if (pr == m) return false;  // unbounded
      t.pivot(pr, pc);
      basis[pr] = pc;
    }
  };

  LpResult out;

  bool need_phase1 = false;
  for (std::size_t r = 0; r < m; ++r) need_phase1 |= artificial_used[r];
  if (need_phase1) {
    // Phase 1: maximize -(sum of artificials).
    for (std::size_t r = 0; r < m; ++r) {
      if (!artificial_used[r]) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (j < art0 || j == rhs) t.at(obj, j) += t.at(r, j);
    }
    simplex(art0);  // artificial columns never re-enter
    if (t.at(obj, rhs) != 0) return out;  // infeasible
    // Pivot remaining basic artificials out (degenerate rows).
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < art0) continue;
      std::size_t pc = cols;
      for (std::size_t j = 0; j < art0; ++j)
        if (t.at(r, j) != 0) { pc = j; break; }
      if (pc != cols) {
        t.pivot(r, pc);
        basis[r] = pc;
      }
      // else: the row is all-zero, constraint was redundant; leave it.
    }
    for (std::size_t j = 0; j < cols; ++j) t.at(obj, j) = 0;
  }

  // Phase 2 objective: maximize c.x, priced out against the current basis.
  for (std::size_t j = 0; j < n; ++j) t.at(obj, j) = c[j];
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] >= n || t.at(obj, basis[r]) == 0) continue;
    const Rational f = t.at(obj, basis[r]);
    for (std::size_t j = 0; j < cols; ++j) t.at(obj, j) -= f * t.at(r, j);
  }
  // Guard: basic structural columns must be priced out too.
  for (std::size_t r = 0; r < m; ++r) {
    if (t.at(obj, basis[r]) == 0) continue;
    const Rational f = t.at(obj, basis[r]);
    for (std::size_t j = 0; j < cols; ++j) t.at(obj, j) -= f * t.at(r, j);
  }

  if (!simplex(art0)) {
    out.feasible = true;  // a ray exists, so the program is feasible
    out.unbounded = true;
    return out;
  }

  out.feasible = true;
  out.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) out.x[basis[r]] = t.at(r, rhs);
  Rational objective = 0;
  for (std::size_t j = 0; j < n; ++j) objective += c[j] * out.x[j];
  out.objective = objective;
  return out;
}

}  // namespace choicelab
