#include "leontief/certify.hpp"

#include "leontief/primal_solver.hpp"

namespace leontief {

namespace {

void require_length(const RationalVector& v, std::size_t expected, const char* what)
{
    if (v.size() != expected) {
        throw std::invalid_argument(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                                    std::to_string(expected));
    }
}

std::string join_messages(const std::vector<Violation>& violations)
{
    std::string out = "invalid instance";
    for (const Violation& v : violations) out += "; " + v.message;
    return out;
}

std::string describe_cycle(const CycleWitness& w)
{
    std::string out = "not gainfree: cycle";
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        out += " v" + std::to_string(w.vertices[i] + 1) + " E" + std::to_string(w.arcs[i] + 1);
    }
    out += " v" + std::to_string(w.vertices.front() + 1) + " has gain " + to_string(w.gain());
    return out;
}

}  // namespace

Verdict verify_primal_feasible(const Instance& inst, const RationalVector& x)
{
    require_length(x, inst.n(), "x");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (sgn(x[j]) < 0) return Verdict::fail("x not nonnegative at column " + std::to_string(j + 1));
    }
    const RationalVector ax = inst.times(x);
    for (std::size_t i = 0; i < inst.m; ++i) {
        if (ax[i] != inst.b[i]) {
            return Verdict::fail("A x ≠ b at row " + std::to_string(i + 1) + " (" + to_string(ax[i]) + " vs " +
                                 to_string(inst.b[i]) + ")");
        }
    }
    return Verdict::pass();
}

Verdict verify_dual_feasible(const Instance& inst, const RationalVector& y)
{
    require_length(y, inst.m, "y");
    const RationalVector ya = inst.transpose_times(y);
    for (std::size_t j = 0; j < inst.n(); ++j) {
        if (ya[j] > inst.c[j]) {
            return Verdict::fail("y^T A > c^T at column " + std::to_string(j + 1) + " (" + to_string(ya[j]) + " > " +
                                 to_string(inst.c[j]) + ")");
        }
    }
    return Verdict::pass();
}

Verdict verify_farkas_primal(const Instance& inst, const RationalVector& z)
{
    require_length(z, inst.m, "z");
    const RationalVector za = inst.transpose_times(z);
    for (std::size_t j = 0; j < inst.n(); ++j) {
        if (sgn(za[j]) > 0) return Verdict::fail("z^T A > 0 at column " + std::to_string(j + 1));
    }
    if (sgn(dot(z, inst.b)) <= 0) return Verdict::fail("z^T b ≤ 0");
    return Verdict::pass();
}

Verdict verify_farkas_dual(const Instance& inst, const RationalVector& r)
{
    require_length(r, inst.n(), "r");
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (sgn(r[j]) < 0) return Verdict::fail("r not nonnegative at column " + std::to_string(j + 1));
    }
    const RationalVector ar = inst.times(r);
    for (std::size_t i = 0; i < inst.m; ++i) {
        if (sgn(ar[i]) != 0) {
            return Verdict::fail("A r ≠ 0 at row " + std::to_string(i + 1) + " (residual " + to_string(ar[i]) + ")");
        }
    }
    if (sgn(dot(inst.c, r)) >= 0) return Verdict::fail("c^T r ≥ 0");
    return Verdict::pass();
}

Verdict verify_outcome(const Instance& inst, const Outcome& outcome)
{
    return std::visit([&](const auto& o) -> Verdict {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Optimal>) {
            if (auto v = verify_primal_feasible(inst, o.x); !v) return v;
            if (auto v = verify_dual_feasible(inst, o.y); !v) return v;
            const Rational primal = dot(inst.c, o.x);
            const Rational dual = dot(inst.b, o.y);
            if (primal != dual) {
                return Verdict::fail("objective mismatch: c^T x = " + to_string(primal) + ", b^T y = " + to_string(dual));
            }
            return Verdict::pass();
        } else if constexpr (std::is_same_v<T, PrimalInfeasible>) {
            if (auto v = verify_farkas_primal(inst, o.z); !v) return v;
            return verify_dual_feasible(inst, o.y);
        } else if constexpr (std::is_same_v<T, DualInfeasible>) {
            if (auto v = verify_primal_feasible(inst, o.x); !v) return v;
            return verify_farkas_dual(inst, o.r);
        } else {
            if (auto v = verify_farkas_primal(inst, o.z); !v) return v;
            return verify_farkas_dual(inst, o.r);
        }
    }, outcome);
}

InvalidInstance::InvalidInstance(std::vector<Violation> violations)
    : std::runtime_error(join_messages(violations)), violations_(std::move(violations))
{
}

NotGainfree::NotGainfree(CycleWitness witness)
    : std::runtime_error(describe_cycle(witness)), witness_(std::move(witness))
{
}

SolveReport solve_detailed(const Instance& inst, const SolveOptions& options)
{
    if (auto violations = validate(inst); !violations.empty()) throw InvalidInstance(std::move(violations));

    NormalizedInstance normalized = normalize(inst);
    const Hypergraph h = build_hypergraph(normalized.instance);
    if (options.check_gainfree) {
        if (auto witness = check_gainfree(h)) throw NotGainfree(std::move(*witness));
    }

    DualTrace trace = dual_feasibility(h);
    const auto& nontriv = trace.final_nontriv();
    const bool primal_ok = primal_feasibility(inst.b, nontriv);

    Outcome outcome;
    if (trace.value) {
        RationalVector y = dual_solution(h, trace);
        if (primal_ok) {
            outcome = Optimal{primal_solution(h, inst.b, trace), std::move(y)};
        } else {
            outcome = PrimalInfeasible{farkas_primal(inst.b, trace.final_y(), nontriv), std::move(y)};
        }
    } else {
        RationalVector r = farkas_dual(h, trace);
        if (primal_ok) {
            outcome = DualInfeasible{primal_solution(h, inst.b, trace), std::move(r)};
        } else {
            outcome = BothInfeasible{farkas_primal(inst.b, trace.final_y(), nontriv), std::move(r)};
        }
    }
    outcome = denormalize_certificates(normalized.scaling, std::move(outcome));

    if (auto verdict = verify_outcome(inst, outcome); !verdict) {
        throw InternalError("certificate failed verification (" + std::string(name(kind_of(outcome))) +
                            "): " + verdict.failure);
    }
    return SolveReport{std::move(outcome), std::move(normalized), std::move(trace)};
}

Outcome solve(const Instance& inst, const SolveOptions& options)
{
    return solve_detailed(inst, options).outcome;
}

}  // namespace leontief
