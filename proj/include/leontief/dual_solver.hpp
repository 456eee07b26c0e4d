#pragma once

#include "leontief/maffine.hpp"
#include "leontief/model.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

namespace leontief {

/// Immutable length-n vector shared between iterations where it is unchanged.
using SharedVector = std::shared_ptr<const RationalVector>;

/// Complete history of the value iteration over M-affine upper bounds on the
/// dual variables. Every per-iteration table is indexed [k][v] for
/// k = 0..m (m = vertex count).
///
/// r[k][v] certifies y[k][v]: r >= 0, A r <= e_v, c^T r equals the constant
/// part of y[k][v], and A r = e_v once v is nontrivial.
struct DualTrace {
    std::size_t vertex_count = 0;
    std::size_t arc_count = 0;
    std::vector<std::vector<MAffine>> y;
    std::vector<std::vector<SharedVector>> r;
    std::vector<std::vector<bool>> change;
    std::vector<std::vector<std::optional<std::size_t>>> p;
    std::vector<std::vector<bool>> nontriv;
    /// Last iteration at which v was promoted to nontrivial; 0 if never.
    std::vector<std::size_t> q;
    /// True iff the dual system y^T A <= c^T was found feasible.
    bool value = false;

    std::size_t iterations() const { return vertex_count; }
    const std::vector<MAffine>& final_y() const { return y.back(); }
    const std::vector<bool>& final_nontriv() const { return nontriv.back(); }
    const RationalVector& r_at(std::size_t k, std::size_t v) const { return *r[k][v]; }
};

/// l(E) + sum_{u in T(E)} gamma(E,u) * y(u).
MAffine arc_bound(const Hyperarc& e, const std::vector<MAffine>& y);

/// Lowest-index vertex v with y(v) > min over incoming E of arc_bound(E, y),
/// together with the lowest-index minimizing hyperarc.
struct Improvement {
    std::size_t vertex;
    std::size_t arc;
};
std::optional<Improvement> find_improvement(const Hypergraph& h, const std::vector<MAffine>& y);

/// Lowest-index hyperarc E with empty head and 0 > arc_bound(E, y).
std::optional<std::size_t> find_violated_headless(const Hypergraph& h, const std::vector<MAffine>& y);

/// Runs exactly m Jacobi rounds starting from y = M everywhere; ties go to
/// the lowest hyperarc index. The hypergraph is assumed gainfree.
DualTrace dual_feasibility(const Hypergraph& h);

/// The value substituted for M when extracting a dual solution: the
/// smallest integer at or above every breakpoint beta(E) / -alpha(E) over
/// hyperarcs with alpha(E) < 0, or 0 when there is none.
Rational dual_substitution(const Hypergraph& h, const std::vector<MAffine>& y_m);

/// Feasible y* (y*^T A <= c^T) from a trace with value = true.
/// Throws std::invalid_argument when trace.value is false.
RationalVector dual_solution(const Hypergraph& h, const DualTrace& trace);

/// Farkas certificate r* >= 0, A r* = 0, c^T r* < 0 of dual infeasibility.
/// Throws std::invalid_argument when trace.value is true.
RationalVector farkas_dual(const Hypergraph& h, const DualTrace& trace);

/// Human-readable dump of y and changed r per iteration.
void write_trace(std::ostream& os, const DualTrace& trace);

}  // namespace leontief
