#include "leontief/dual_solver.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace leontief {

namespace {

/// e_E + sum_{u in T(E)} gamma(E,u) * r_u, with r_u read from `layer`.
RationalVector combine(std::size_t arc_index, const Hyperarc& e, std::size_t n,
                       const std::vector<SharedVector>& layer)
{
    RationalVector out = zeros(n);
    out[arc_index] = 1;
    for (const Tail& t : e.tails) {
        const RationalVector& ru = *layer[t.vertex];
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(ru[j]) != 0) out[j] += t.gain * ru[j];
        }
    }
    return out;
}

/// min over incoming hyperarcs of arc_bound, lowest index on ties.
std::optional<std::pair<MAffine, std::size_t>> best_incoming(const Hypergraph& h, std::size_t v,
                                                             const std::vector<MAffine>& y)
{
    std::optional<std::pair<MAffine, std::size_t>> best;
    for (std::size_t j : h.incoming(v)) {
        MAffine bound = arc_bound(h.arc(j), y);
        if (!best || bound < best->first) best.emplace(std::move(bound), j);
    }
    return best;
}

}  // namespace

MAffine arc_bound(const Hyperarc& e, const std::vector<MAffine>& y)
{
    MAffine sum = MAffine::constant(e.length);
    for (const Tail& t : e.tails) sum += scale(t.gain, y[t.vertex]);
    return sum;
}

std::optional<Improvement> find_improvement(const Hypergraph& h, const std::vector<MAffine>& y)
{
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        auto best = best_incoming(h, v, y);
        if (best && y[v] > best->first) return Improvement{v, best->second};
    }
    return std::nullopt;
}

std::optional<std::size_t> find_violated_headless(const Hypergraph& h, const std::vector<MAffine>& y)
{
    for (std::size_t j : h.headless()) {
        const MAffine bound = arc_bound(h.arc(j), y);
        if (bound < MAffine::constant(0)) {
            // M-coefficients are never negative, so a violation is M-free.
            assert(!bound.has_m());
            return j;
        }
    }
    return std::nullopt;
}

DualTrace dual_feasibility(const Hypergraph& h)
{
    const std::size_t m = h.vertex_count();
    const std::size_t n = h.arc_count();

    DualTrace t;
    t.vertex_count = m;
    t.arc_count = n;
    t.y.reserve(m + 1);
    t.r.reserve(m + 1);
    t.change.reserve(m + 1);
    t.p.reserve(m + 1);
    t.nontriv.reserve(m + 1);

    const auto zero = std::make_shared<const RationalVector>(zeros(n));
    t.y.emplace_back(m, MAffine::big_m());
    t.r.emplace_back(m, zero);
    t.change.emplace_back(m, false);
    t.p.emplace_back(m);
    t.nontriv.emplace_back(m, false);
    t.q.assign(m, 0);

    for (std::size_t k = 1; k <= m; ++k) {
        const auto& y_prev = t.y[k - 1];
        const auto& r_prev = t.r[k - 1];
        const auto& nontriv_prev = t.nontriv[k - 1];

        std::vector<MAffine> y_next = y_prev;
        std::vector<SharedVector> r_next = r_prev;
        std::vector<bool> change_next(m, false);
        std::vector<std::optional<std::size_t>> p_next(m);
        std::vector<bool> nontriv_next = nontriv_prev;

        for (std::size_t v = 0; v < m; ++v) {
            auto best = best_incoming(h, v, y_prev);
            if (!best || !(y_prev[v] > best->first)) continue;

            const std::size_t j = best->second;
            const Hyperarc& e = h.arc(j);
            y_next[v] = std::move(best->first);
            p_next[v] = j;
            r_next[v] = std::make_shared<const RationalVector>(combine(j, e, n, r_prev));
            change_next[v] = true;
            bool all_tails_nontrivial = true;
            for (const Tail& tail : e.tails) all_tails_nontrivial = all_tails_nontrivial && nontriv_prev[tail.vertex];
            if (all_tails_nontrivial) {
                nontriv_next[v] = true;
                t.q[v] = k;
            }
        }

        t.y.push_back(std::move(y_next));
        t.r.push_back(std::move(r_next));
        t.change.push_back(std::move(change_next));
        t.p.push_back(std::move(p_next));
        t.nontriv.push_back(std::move(nontriv_next));
    }

    const auto& y_m = t.final_y();
    t.value = !find_improvement(h, y_m) && !find_violated_headless(h, y_m);
    return t;
}

Rational dual_substitution(const Hypergraph& h, const std::vector<MAffine>& y_m)
{
    std::optional<Rational> lambda;
    for (const Hyperarc& e : h.arcs()) {
        // alpha(E) M + beta(E) = y(h(E)) - arc_bound(E), with y(empty) = 0.
        const MAffine bound = arc_bound(e, y_m);
        const MAffine head = e.head ? y_m[*e.head] : MAffine::constant(0);
        const Rational alpha = head.alpha() - bound.alpha();
        const Rational beta = head.beta() - bound.beta();
        assert(sgn(alpha) <= 0);
        if (sgn(alpha) < 0) {
            Rational breakpoint = beta / -alpha;
            if (!lambda || breakpoint > *lambda) lambda = std::move(breakpoint);
        }
    }
    // Every value at or above the largest breakpoint is feasible; rounding up
    // keeps y* integral whenever A and c are.
    return lambda ? ceil(*lambda) : Rational(0);
}

RationalVector dual_solution(const Hypergraph& h, const DualTrace& trace)
{
    if (!trace.value) throw std::invalid_argument("dual_solution: dual system was not found feasible");
    const auto& y_m = trace.final_y();
    const Rational lambda = dual_substitution(h, y_m);
    RationalVector y;
    y.reserve(y_m.size());
    for (const MAffine& v : y_m) y.push_back(v.evaluate(lambda));
    return y;
}

RationalVector farkas_dual(const Hypergraph& h, const DualTrace& trace)
{
    if (trace.value) throw std::invalid_argument("farkas_dual: dual system was found feasible");
    const std::size_t m = trace.iterations();
    const std::size_t n = trace.arc_count;
    const auto& y_m = trace.final_y();

    if (auto imp = find_improvement(h, y_m)) {
        // Walk back through the change history until a vertex repeats.
        // w[k] and arc[k] are recorded for k = m+1 down to the break point.
        std::vector<std::size_t> w(m + 2);
        std::vector<std::size_t> arc(m + 2);
        std::vector<std::optional<std::size_t>> seen_at(m);
        w[m + 1] = imp->vertex;
        arc[m + 1] = imp->arc;
        seen_at[imp->vertex] = m + 1;
        const RationalVector r_top = combine(imp->arc, h.arc(imp->arc), n, trace.r[m]);

        std::optional<std::size_t> s;
        std::optional<std::size_t> t;
        for (std::size_t k = m + 1; k >= 2; --k) {
            std::optional<std::size_t> u;
            for (const Tail& tail : h.arc(arc[k]).tails) {
                if (trace.change[k - 1][tail.vertex]) {
                    u = tail.vertex;
                    break;
                }
            }
            if (!u) throw std::logic_error("farkas_dual: no changed tail during traceback (hypergraph not gainfree?)");
            w[k - 1] = *u;
            arc[k - 1] = *trace.p[k - 1][*u];
            if (seen_at[*u]) {
                t = seen_at[*u];
                s = k - 1;
                break;
            }
            seen_at[*u] = k - 1;
        }
        if (!s) throw std::logic_error("farkas_dual: traceback found no cycle");

        const RationalVector& r_t = *t == m + 1 ? r_top : trace.r_at(*t, w[*t]);
        const RationalVector& r_s = trace.r_at(*s, w[*s]);
        RationalVector out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = r_t[j] - r_s[j];
        return out;
    }

    const auto j = find_violated_headless(h, y_m);
    if (!j) throw std::logic_error("farkas_dual: trace is infeasible but no violated constraint found");
    return combine(*j, h.arc(*j), n, trace.r[m]);
}

void write_trace(std::ostream& os, const DualTrace& trace)
{
    for (std::size_t k = 0; k < trace.y.size(); ++k) {
        os << "iteration " << k << ": y = (";
        for (std::size_t v = 0; v < trace.vertex_count; ++v) os << (v ? ", " : "") << trace.y[k][v];
        os << ")\n";
        for (std::size_t v = 0; v < trace.vertex_count; ++v) {
            if (!trace.change[k][v]) continue;
            os << "  v" << v + 1 << " via E" << *trace.p[k][v] + 1 << (trace.nontriv[k][v] ? " [nontriv]" : "")
               << "  r = (";
            const RationalVector& r = trace.r_at(k, v);
            for (std::size_t j = 0; j < r.size(); ++j) os << (j ? ", " : "") << to_string(r[j]);
            os << ")\n";
        }
    }
    os << "value = " << (trace.value ? "true" : "false") << "\n";
}

}  // namespace leontief
