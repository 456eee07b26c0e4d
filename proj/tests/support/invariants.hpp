#pragma once

#include "leontief/dual_solver.hpp"

#include <string>
#include <vector>

namespace support {

/// Per-iteration checks of a DualTrace against its (normalized) hypergraph:
/// monotonicity with strictness exactly on change, nontriv iff no M term with
/// nonnegative M coefficients, r coupling (r >= 0, A r <= e_v, c^T r = beta,
/// equality A r = e_v when nontriv) and level-set stabilization of nontriv.
/// Returns a description of every violation; empty means all hold.
std::vector<std::string> trace_violations(const leontief::Hypergraph& h, const leontief::DualTrace& trace);

}  // namespace support
