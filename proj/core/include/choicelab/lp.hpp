#pragma once

#include <gmpxx.h>

#include <vector>

#include "choicelab/types.hpp"

namespace choicelab {

using Rational = mpq_class;

struct LpResult {
  bool feasible = false;
  bool unbounded = false;
  Rational objective;
  std::vector<Rational> x;
};

// maximize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.
// Exact rational two-phase simplex with Bland's rule: deterministic and
// terminating, no tolerances anywhere.
LpResult solve_lp(const std::vector<std::vector<Rational>>& a_ub,
                  const std::vector<Rational>& b_ub,
                  const std::vector<std::vector<Rational>>& a_eq,
                  const std::vector<Rational>& b_eq,
                  const std::vector<Rational>& c);

}  // namespace choicelab
