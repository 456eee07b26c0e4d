#include "leontief/primal_solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace leontief {

bool primal_feasibility(const RationalVector& b, const std::vector<bool>& nontriv_m)
{
    if (b.size() != nontriv_m.size()) throw std::invalid_argument("primal_feasibility: dimension mismatch");
    for (std::size_t v = 0; v < b.size(); ++v) {
        if (!nontriv_m[v] && sgn(b[v]) != 0) return false;
    }
    return true;
}

RationalVector primal_solution(const Hypergraph& h, const RationalVector& b, const DualTrace& trace)
{
    const auto& nontriv = trace.final_nontriv();
    if (!primal_feasibility(b, nontriv)) throw std::invalid_argument("primal_solution: primal system is infeasible");

    // The nontrivial set depends only on A, so the zero-length rerun keeps it.
    std::optional<DualTrace> rerun;
    if (!trace.value) {
        rerun = dual_feasibility(h.with_zero_lengths());
        assert(rerun->final_nontriv() == nontriv);
    }
    const DualTrace& source = rerun ? *rerun : trace;

    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        if (nontriv[v]) order.push_back(v);
    }
    // Largest q first; lowest vertex index among equal q.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return source.q[a] > source.q[b]; });

    RationalVector x = zeros(h.arc_count());
    RationalVector demand = b;
    for (std::size_t v : order) {
        const std::size_t k = source.q[v];
        assert(k >= 1 && source.p[k][v]);
        const std::size_t j = *source.p[k][v];
        x[j] = demand[v];
        for (const Tail& t : h.arc(j).tails) demand[t.vertex] += t.gain * x[j];
    }
    return x;
}

RationalVector farkas_primal(const RationalVector& b, const std::vector<MAffine>& y_m,
                             const std::vector<bool>& nontriv_m)
{
    if (primal_feasibility(b, nontriv_m)) throw std::invalid_argument("farkas_primal: primal system is feasible");
    RationalVector z(y_m.size());
    for (std::size_t v = 0; v < y_m.size(); ++v) z[v] = nontriv_m[v] ? Rational(0) : y_m[v].alpha();
    return z;
}

}  // namespace leontief
