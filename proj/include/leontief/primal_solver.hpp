#pragma once

#include "leontief/dual_solver.hpp"

namespace leontief {

/// A x = b, x >= 0 is feasible iff b vanishes on every vertex that never
/// became nontrivial.
bool primal_feasibility(const RationalVector& b, const std::vector<bool>& nontriv_m);

/// Feasible x* for A x = b, x >= 0. When the dual was infeasible the value
/// iteration is rerun with all lengths zero and that run's p and q are used.
/// Throws std::invalid_argument when primal_feasibility is false.
RationalVector primal_solution(const Hypergraph& h, const RationalVector& b, const DualTrace& trace);

/// z*(v) = 0 for nontrivial v, else the M-coefficient of y_m(v). Satisfies
/// z^T A <= 0 and z^T b > 0. Throws std::invalid_argument when
/// primal_feasibility is true.
RationalVector farkas_primal(const RationalVector& b, const std::vector<MAffine>& y_m,
                             const std::vector<bool>& nontriv_m);

}  // namespace leontief
