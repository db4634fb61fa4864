#pragma once

namespace perron {

/// Numeric tolerances. Exponents and graph weights are exact rationals, so
/// these only govern double-precision coefficient decisions.
struct Tolerances {
  double zero_rel = 1e-12;     // drop coefficients below zero_rel * scale of the operands
  double rank_rel = 1e-9;      // numerical rank / singularity threshold (relative to largest SV)
  double nonneg_slack = 1e-9;  // slack allowed when asserting nonnegativity
};

/// Process-wide defaults, overridable via CLI --tol or PERRON_TOL.
Tolerances& default_tolerances();

}  // namespace perron
