#pragma once

#include <string>

#include "latcut/lp.hpp"

namespace latcut {

/// Outcome of a strength computation. `value` is the closed-form quantity of
/// the statement being reproduced and `lp_value` the exact LP optimum; they
/// coincide for the Type 1 strength function, while for the relaxation bounds
/// the closed form sits on the stated side of the LP value.
struct StrengthReport {
  Rational value;
  Rational lp_value;
  std::string region_tag;
  LPSolution witness;
};

}  // namespace latcut
