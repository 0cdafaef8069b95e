#pragma once

#include <optional>
#include <vector>

#include "latcut/lp.hpp"

namespace latcut {

/// Inequality a . x >= rhs with nonnegative data.
struct FacetRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Smallest alpha >= 1 with P inside alpha*Q, where Q is given by facet rows
/// and the relaxation P by a finite covering row family:
///   alpha = max over rows with rhs > 0 of rhs / inf{ a . x : x in P }.
/// nullopt encodes +infinity (some infimum is 0).
inline std::optional<Rational> goemans_alpha(const std::vector<FacetRow>& facet_rows,
                                             const LPProblem& relaxation) {
  Rational alpha(1);
  for (const auto& facet : facet_rows) {
    if (facet.coeffs.size() != relaxation.num_vars)
      throw ParamOutOfRange("facet row length mismatch");
    if (facet.rhs < 0) throw ParamOutOfRange("facet rhs must be nonnegative");
    for (const auto& a : facet.coeffs)
      if (a < 0) throw ParamOutOfRange("facet coefficients must be nonnegative");
    if (facet.rhs == 0) continue;
    LPSolution inf = solve_min(relaxation, facet.coeffs);
    if (inf.value == 0) return std::nullopt;
    Rational ratio = facet.rhs / inf.value;
    if (ratio > alpha) alpha = ratio;
  }
  return alpha;
}

}  // namespace latcut
