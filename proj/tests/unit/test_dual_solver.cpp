#include "golden.hpp"
#include "invariants.hpp"

#include "leontief/certify.hpp"
#include "leontief/dual_solver.hpp"

#include <doctest.h>

#include <sstream>

using namespace leontief;
using golden::q;
using golden::qv;

namespace {

MAffine ma(const char* alpha, const char* beta)
{
    return {q(alpha), q(beta)};
}

MAffine k(const char* beta)
{
    return MAffine::constant(q(beta));
}

std::vector<MAffine> ys(std::initializer_list<MAffine> items)
{
    return items;
}

const MAffine M = MAffine::big_m();

Hypergraph graph(const Instance& inst)
{
    return build_hypergraph(normalize(inst).instance);
}

RationalVector unit(std::size_t n, std::initializer_list<std::pair<std::size_t, const char*>> entries)
{
    RationalVector v = zeros(n);
    for (auto [j, val] : entries) v[j - 1] = q(val);
    return v;
}

}  // namespace

TEST_CASE("unit-gain cycle: every iterate and the traceback certificate")
{
    const Hypergraph h = graph(golden::ex_unit_cycle());
    const DualTrace t = dual_feasibility(h);
    CHECK(t.y[0] == ys({M, M, M, M}));
    CHECK(t.y[1] == ys({k("0"), k("0"), k("0"), k("0")}));
    for (std::size_t i = 0; i < 4; ++i) CHECK(t.r_at(1, i) == unit(7, {{i + 4, "1"}}));
    CHECK(t.y[2] == ys({k("0"), k("-1"), k("0"), k("0")}));
    CHECK(t.r_at(2, 1) == unit(7, {{1, "1"}, {4, "1"}, {7, "1"}}));
    CHECK(t.y[3] == ys({k("0"), k("-1"), k("-1"), k("0")}));
    CHECK(t.r_at(3, 2) == unit(7, {{1, "1"}, {2, "1"}, {4, "1"}, {7, "2"}}));
    CHECK(t.y[4] == ys({k("-1"), k("-1"), k("-1"), k("0")}));
    CHECK(t.r_at(4, 0) == unit(7, {{1, "1"}, {2, "1"}, {3, "1"}, {4, "1"}, {7, "3"}}));
    CHECK(t.change[4] == std::vector<bool>{true, false, false, false});
    CHECK_FALSE(t.value);
    // q records the latest promotion; v1 is re-promoted at k = 4.
    CHECK(t.q == std::vector<std::size_t>{4, 2, 3, 1});

    const RationalVector r = farkas_dual(h, t);
    CHECK(r == unit(7, {{1, "1"}, {2, "1"}, {3, "1"}, {7, "3"}}));
    CHECK(verify_farkas_dual(golden::ex_unit_cycle(), r));
    CHECK(dot(golden::ex_unit_cycle().c, r) == -1);
}

TEST_CASE("acyclic example: iterates and empty-head certificate")
{
    const Hypergraph h = graph(golden::ex_acyclic());
    const DualTrace t = dual_feasibility(h);
    CHECK(t.y[1] == ys({M, M, k("2")}));
    CHECK(t.r_at(1, 2) == qv({"0", "0", "0", "1"}));
    CHECK(t.y[2] == ys({M, k("5"), k("2")}));
    CHECK(t.r_at(2, 1) == qv({"0", "0", "1", "2"}));
    CHECK(t.y[3] == ys({k("15"), k("5"), k("2")}));
    CHECK(t.r_at(3, 0) == qv({"0", "1", "2", "5"}));
    CHECK(t.q == std::vector<std::size_t>{3, 2, 1});
    CHECK(find_violated_headless(h, t.final_y()) == std::optional<std::size_t>(0));
    CHECK_FALSE(find_improvement(h, t.final_y()).has_value());
    CHECK_FALSE(t.value);

    const RationalVector r = farkas_dual(h, t);
    CHECK(r == qv({"1", "2", "9", "23"}));
    CHECK(dot(golden::ex_acyclic().c, r) == -3);
}

TEST_CASE("non-unit gain cycle, infeasible costs")
{
    const Hypergraph h = graph(golden::ex_gain_cycle_infeasible());
    const DualTrace t = dual_feasibility(h);
    CHECK(t.y[1] == ys({M, ma("1/2", "-3"), ma("1/3", "1")}));
    CHECK(t.r_at(1, 1) == qv({"1", "0", "0"}));
    CHECK(t.r_at(1, 2) == qv({"0", "1", "0"}));
    CHECK(t.y[2] == ys({M, ma("1/2", "-3"), ma("1/6", "0")}));
    CHECK(t.r_at(2, 2) == qv({"1/3", "1", "0"}));
    CHECK(t.y[3] == ys({ma("1", "-2"), ma("1/2", "-3"), ma("1/6", "0")}));
    CHECK(t.r_at(3, 0) == qv({"2", "6", "1"}));
    CHECK(t.final_nontriv() == std::vector<bool>{false, false, false});
    CHECK_FALSE(t.value);

    const RationalVector r = farkas_dual(h, t);
    CHECK(r == qv({"1", "3", "1/2"}));
    CHECK(dot(golden::ex_gain_cycle_infeasible().c, r) == -1);
}

TEST_CASE("non-unit gain cycle, feasible costs")
{
    const Hypergraph h = graph(golden::ex_gain_cycle_feasible());
    const DualTrace t = dual_feasibility(h);
    const auto fixed = ys({M, ma("1/2", "-3"), ma("1/6", "0")});
    CHECK(t.y[2] == fixed);
    CHECK(t.y[3] == fixed);
    CHECK(t.change[3] == std::vector<bool>{false, false, false});
    CHECK(t.value);
    CHECK(dual_substitution(h, t.final_y()) == 0);
    CHECK(dual_solution(h, t) == qv({"0", "-3", "0"}));
}

TEST_CASE("rounded substitution keeps integral data integral")
{
    // One column y1 - 3 y2 <= 1: the literal breakpoint is -1/2, which would
    // give the non-integral y* = (-1/2, -1/2).
    const Instance inst = Instance::from_dense({qv({"1"}), qv({"-3"})}, qv({"0", "0"}), qv({"1"}));
    const Hypergraph h = graph(inst);
    const DualTrace t = dual_feasibility(h);
    REQUIRE(t.value);
    CHECK(t.final_y() == ys({M, M}));
    CHECK(dual_substitution(h, t.final_y()) == 0);
    const RationalVector y = dual_solution(h, t);
    CHECK(y == qv({"0", "0"}));
    CHECK(verify_dual_feasible(inst, y));
    CHECK(verify_dual_feasible(inst, qv({"-1/2", "-1/2"})));
}

TEST_CASE("dual_solution on M-free values returns the constants")
{
    const Instance single = Instance::from_dense({qv({"1"})}, qv({"0"}), qv({"5"}));
    const Hypergraph hs = graph(single);
    const DualTrace t = dual_feasibility(hs);
    REQUIRE(t.value);
    CHECK(dual_solution(hs, t) == qv({"5"}));
}

TEST_CASE("y <= 5 with no improvement keeps M and substitutes 0")
{
    // A vertex with no incoming column keeps y = M; alpha(E) >= 0 for all E.
    const Instance inst = Instance::from_dense({qv({"0"})}, qv({"0"}), qv({"5"}));
    const Hypergraph h = graph(inst);
    const DualTrace t = dual_feasibility(h);
    CHECK(t.value);
    CHECK(t.final_y() == ys({M}));
    CHECK(dual_solution(h, t) == qv({"0"}));
}

TEST_CASE("no hyperarcs: y stays M and the dual is feasible")
{
    Instance inst;
    inst.m = 2;
    inst.b = qv({"0", "0"});
    const Hypergraph h = graph(inst);
    const DualTrace t = dual_feasibility(h);
    CHECK(t.value);
    CHECK(t.final_y() == ys({M, M}));
    CHECK(dual_solution(h, t) == qv({"0", "0"}));
}

TEST_CASE("misuse of extraction routines is rejected")
{
    const Hypergraph feasible = graph(golden::ex_gain_cycle_feasible());
    const Hypergraph infeasible = graph(golden::ex_acyclic());
    CHECK_THROWS_AS(farkas_dual(feasible, dual_feasibility(feasible)), std::invalid_argument);
    CHECK_THROWS_AS(dual_solution(infeasible, dual_feasibility(infeasible)), std::invalid_argument);
}

TEST_CASE("trace invariants hold on every golden example")
{
    for (const Instance& inst : {golden::ex_gain(), golden::ex_unit_cycle(), golden::ex_acyclic(),
                                 golden::ex_gain_cycle_infeasible(), golden::ex_gain_cycle_feasible()}) {
        const Hypergraph h = graph(inst);
        const auto violations = support::trace_violations(h, dual_feasibility(h));
        CHECK(violations.empty());
        for (const auto& v : violations) MESSAGE(v);
    }
}

TEST_CASE("unchanged r vectors are shared between iterations")
{
    const Hypergraph h = graph(golden::ex_acyclic());
    const DualTrace t = dual_feasibility(h);
    CHECK(t.r[3][2].get() == t.r[1][2].get());
}

TEST_CASE("write_trace mentions every iteration")
{
    const Hypergraph h = graph(golden::ex_acyclic());
    std::ostringstream os;
    write_trace(os, dual_feasibility(h));
    CHECK(os.str().find("iteration 3: y = (15, 5, 2)") != std::string::npos);
    CHECK(os.str().find("value = false") != std::string::npos);
}
