#pragma once

#include "leontief/model.hpp"
#include "leontief/outcome.hpp"

#include <optional>

namespace leontief {

/// Largest instances the simplex oracle accepts.
inline constexpr std::size_t kOracleMaxRows = 16;
inline constexpr std::size_t kOracleMaxColumns = 64;

struct OracleVerdict {
    OutcomeKind kind;
    std::optional<RationalVector> x;    // a primal feasible point, when one exists
    std::optional<Rational> objective;  // optimal value (kind == optimal)
    std::optional<RationalVector> ray;  // r >= 0, A r = 0, c^T r < 0 (dual infeasible kinds)
};

/// Exact two-phase primal simplex with Bland's rule on a general
/// equality-form LP (no Leontief assumption). Classifies the primal/dual
/// pair into the four duality cases. Throws std::length_error beyond
/// kOracleMaxRows x kOracleMaxColumns.
OracleVerdict simplex_solve(const Instance& inst);

/// (A | I | -I), costs (0, 1, 1), same b: minimizing the slack total decides
/// feasibility of A x = b, x >= 0.
Instance two_phase_auxiliary(const Instance& inst);

struct TwoPhaseResult {
    bool feasible = false;
    RationalVector x;  // feasible point (feasible)
    RationalVector z;  // z^T A <= 0, z^T b > 0 (infeasible)
};

/// Primal feasibility decided through the auxiliary problem, solved with the
/// main certifying solver.
TwoPhaseResult two_phase_primal_feasibility(const Instance& inst);

}  // namespace leontief
