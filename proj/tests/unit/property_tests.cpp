// Standalone property suite: MAffine laws and per-iteration DualTrace
// invariants over the seeded random sweep.

#include "invariants.hpp"
#include "laws.hpp"
#include "sweep.hpp"

#include "leontief/certify.hpp"
#include "leontief/primal_solver.hpp"

#include <doctest.h>

using namespace leontief;

TEST_CASE("MAffine order and algebra laws")
{
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const auto violations = support::maffine_law_violations(seed, 5000);
        CHECK(violations.empty());
        for (std::size_t i = 0; i < std::min<std::size_t>(violations.size(), 5); ++i) MESSAGE(violations[i]);
    }
}

TEST_CASE("DualTrace invariants on the random sweep")
{
    for (std::size_t i = 0; i < support::kSweepSize; ++i) {
        const Instance inst = support::sweep_instance(i);
        const Hypergraph h = build_hypergraph(normalize(inst).instance);
        const DualTrace trace = dual_feasibility(h);
        const auto violations = support::trace_violations(h, trace);
        CAPTURE(i);
        CHECK(violations.empty());
        for (std::size_t k = 0; k < std::min<std::size_t>(violations.size(), 5); ++k) MESSAGE(violations[k]);
    }
}

TEST_CASE("extracted certificates verify on the normalized instance")
{
    for (std::size_t i = 0; i < support::kSweepSize; ++i) {
        const Instance inst = normalize(support::sweep_instance(i)).instance;
        const Hypergraph h = build_hypergraph(inst);
        const DualTrace trace = dual_feasibility(h);
        CAPTURE(i);
        if (trace.value) {
            CHECK(verify_dual_feasible(inst, dual_solution(h, trace)));
        } else {
            CHECK(verify_farkas_dual(inst, farkas_dual(h, trace)));
        }
        if (primal_feasibility(inst.b, trace.final_nontriv())) {
            CHECK(verify_primal_feasible(inst, primal_solution(h, inst.b, trace)));
        } else {
            const RationalVector z = farkas_primal(inst.b, trace.final_y(), trace.final_nontriv());
            CHECK(verify_farkas_primal(inst, z));
            for (const Rational& zv : z) CHECK(sgn(zv) >= 0);
        }
    }
}
