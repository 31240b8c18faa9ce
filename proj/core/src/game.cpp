#include "choicelab/game.hpp"

namespace choicelab {

namespace {

// Constraints of the optimal-strategy polytope over A.
struct GamePolytope {
  std::vector<Alt> alts;
  std::vector<std::vector<Rational>> a_ub;
  std::vector<Rational> b_ub;
  std::vector<std::vector<Rational>> a_eq;
  std::vector<Rational> b_eq;
};

GamePolytope build_polytope(const MarginMatrix& margins, AltSet a_set) {
  GamePolytope gp;
  gp.alts = a_set.members();
  const std::size_t k = gp.alts.size();
  // p^T G >= 0  ->  for each column b: -sum_a p_a g(a,b) <= 0
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i)
      row[i] = -margins.at(gp.alts[i], gp.alts[j]);
    gp.a_ub.push_back(std::move(row));
    gp.b_ub.emplace_back(0);
  }
  gp.a_eq.emplace_back(k, Rational(1));
  gp.b_eq.emplace_back(1);
  return gp;
}

}  // namespace

Rational MixedStrategy::weight(Alt a) const {
  for (std::size_t i = 0; i < alts.size(); ++i)
    if (alts[i] == a) return p[i];
  return Rational(0);
}

MixedStrategy maximin_strategy(const MarginMatrix& margins, AltSet a_set) {
  GamePolytope gp = build_polytope(margins, a_set);
  const std::vector<Rational> c(gp.alts.size(), Rational(0));
  LpResult res = solve_lp(gp.a_ub, gp.b_ub, gp.a_eq, gp.b_eq, c);
  if (!res.feasible)
    throw InternalError("maximin polytope empty; skew-symmetry violated?");
  return MixedStrategy{std::move(gp.alts), std::move(res.x)};
}

bool is_optimal_strategy(const MixedStrategy& s, const MarginMatrix& margins,
                         AltSet a_set) {
  if (s.alts != a_set.members()) return false;
  Rational total = 0;
  for (const Rational& v : s.p) {
    if (v < 0) return false;
    total += v;
  }
  if (total != 1) return false;
  for (Alt b : a_set.each()) {
    Rational col = 0;
    for (std::size_t i = 0; i < s.alts.size(); ++i)
      col += s.p[i] * margins.at(s.alts[i], b);
    if (col < 0) return false;
  }
  return true;
}

Rational max_support_weight(const MarginMatrix& margins, AltSet a_set, Alt a) {
  GamePolytope gp = build_polytope(margins, a_set);
  std::vector<Rational> c(gp.alts.size(), Rational(0));
  for (std::size_t i = 0; i < gp.alts.size(); ++i)
    if (gp.alts[i] == a) c[i] = 1;
  LpResult res = solve_lp(gp.a_ub, gp.b_ub, gp.a_eq, gp.b_eq, c);
  if (!res.feasible) throw InternalError("maximin polytope empty");
  return res.objective;
}

AltSet bipartisan_set(const MarginMatrix& margins, AltSet a_set) {
  AltSet out;
  for (Alt a : a_set.each())
    if (max_support_weight(margins, a_set, a) > 0) out = out.with(a);
  if (out.empty()) throw InternalError("essential set came out empty");
  return out;
}

}  // namespace choicelab
