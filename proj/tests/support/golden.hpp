#pragma once

#include "leontief/model.hpp"

namespace golden {

using leontief::Instance;
using leontief::RationalVector;

/// Rational literal helper: q("1/2").
leontief::Rational q(const char* text);
RationalVector qv(std::initializer_list<const char*> items);

/// Gainfree hypergraph with one cycle of gain 2/3.
Instance ex_gain();
/// Unit-gain cycle v1 -> v3 -> v2 -> v1 of length -1; dual infeasible.
Instance ex_unit_cycle(RationalVector b = qv({"1", "1", "1", "1"}));
/// Acyclic hypergraph; empty-head violation.
Instance ex_acyclic(RationalVector b = qv({"1", "1", "1"}));
/// Cycle with gains 1/2, 1/3, 6 and costs (-3, 1, -2); dual infeasible.
Instance ex_gain_cycle_infeasible(RationalVector b = qv({"1", "1", "1"}));
/// Same matrix with costs (-3, 1, 2); dual feasible.
Instance ex_gain_cycle_feasible(RationalVector b = qv({"1", "1", "1"}));
/// Two-vertex cycle with gains 1/2 and 1/2 (product 1/4): not gainfree.
Instance ex_not_gainfree();

}  // namespace golden
