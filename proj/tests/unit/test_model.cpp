#include "golden.hpp"

#include "leontief/model.hpp"

#include <doctest.h>

using namespace leontief;
using golden::q;
using golden::qv;

TEST_CASE("from_triplets rejects bad positions and dimensions")
{
    using T = std::tuple<std::size_t, std::size_t, Rational>;
    CHECK_THROWS_AS(Instance::from_triplets(2, 2, {T{2, 0, 1}}, qv({"0", "0"}), qv({"0", "0"})), std::invalid_argument);
    CHECK_THROWS_AS(Instance::from_triplets(2, 2, {T{0, 0, 1}, T{0, 0, 2}}, qv({"0", "0"}), qv({"0", "0"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(Instance::from_triplets(2, 2, {}, qv({"0"}), qv({"0", "0"})), std::invalid_argument);
    const Instance inst = Instance::from_triplets(2, 1, {T{1, 0, 0}, T{0, 0, 3}}, qv({"0", "0"}), qv({"0"}));
    REQUIRE(inst.columns[0].size() == 1);
    CHECK(inst.columns[0][0].row == 0);
}

TEST_CASE("validate reports every violation")
{
    const Instance inst = Instance::from_dense({qv({"1", "2"}), qv({"1", "-1"})}, qv({"-1", "0"}), qv({"0", "0"}));
    const auto violations = validate(inst);
    REQUIRE(violations.size() == 2);
    CHECK(violations[0].kind == ViolationKind::multiple_positive);
    CHECK(violations[0].index == 0);
    CHECK(violations[1].kind == ViolationKind::negative_b);
    CHECK(validate(golden::ex_acyclic()).empty());
}

TEST_CASE("normalize makes positive entries 1 and denormalize maps certificates back")
{
    const Instance inst = Instance::from_dense({qv({"4", "-1"}), qv({"-2", "1/3"})}, qv({"1", "1"}), qv({"8", "1"}));
    const NormalizedInstance norm = normalize(inst);
    CHECK(norm.scaling.column_scale == qv({"4", "1/3"}));
    CHECK_FALSE(norm.scaling.is_identity());
    CHECK(norm.instance.c == qv({"2", "3"}));
    CHECK(norm.instance.columns[0] == Column{{0, q("1")}, {1, q("-1/2")}});
    CHECK(norm.instance.b == inst.b);

    // x' solves the normalized system iff x_j = x'_j / a_j solves the original.
    const Outcome mapped = denormalize_certificates(norm.scaling, DualInfeasible{qv({"4", "1"}), qv({"8", "2"})});
    const auto& d = std::get<DualInfeasible>(mapped);
    CHECK(d.x == qv({"1", "3"}));
    CHECK(d.r == qv({"2", "6"}));
    const Outcome kept = denormalize_certificates(norm.scaling, PrimalInfeasible{qv({"1", "2"}), qv({"3", "4"})});
    CHECK(std::get<PrimalInfeasible>(kept) == PrimalInfeasible{qv({"1", "2"}), qv({"3", "4"})});
}

TEST_CASE("hypergraph of the gain example")
{
    const Hypergraph h = build_hypergraph(normalize(golden::ex_gain()).instance);
    CHECK(h.vertex_count() == 4);
    CHECK(h.arc_count() == 5);
    CHECK(h.arc(0).head == std::optional<std::size_t>(1));
    CHECK(h.arc(0).tails == std::vector<Tail>{{0, q("1/2")}, {3, q("1/3")}});
    CHECK(h.arc(2).tails == std::vector<Tail>{{2, q("9")}, {3, q("1")}});
    CHECK(h.arc(3).tails.empty());
    CHECK(h.incoming(0) == std::vector<std::size_t>{2, 3});
    CHECK(h.incoming(3).empty());
    CHECK(h.headless().empty());
    CHECK(h.to_instance(zeros(4)) == Instance{4, normalize(golden::ex_gain()).instance.columns, zeros(4),
                                               golden::ex_gain().c});
    CHECK(h.with_zero_lengths().arc(0).length == 0);
}

TEST_CASE("build_hypergraph requires normalized input")
{
    const Instance inst = Instance::from_dense({qv({"2"})}, qv({"0"}), qv({"0"}));
    CHECK_THROWS_AS(build_hypergraph(inst), std::invalid_argument);
}

TEST_CASE("gain of the unique cycle is 2/3")
{
    const Hypergraph h = build_hypergraph(normalize(golden::ex_gain()).instance);
    CHECK_FALSE(check_gainfree(h).has_value());
    REQUIRE(max_cycle_gain(h).has_value());
    CHECK(*max_cycle_gain(h) == q("2/3"));
}

TEST_CASE("a cycle of gain 4 is reported with a valid witness")
{
    const Hypergraph h = build_hypergraph(golden::ex_not_gainfree());
    const auto witness = check_gainfree(h);
    REQUIRE(witness.has_value());
    CHECK(is_valid_cycle(h, *witness));
    CHECK(witness->gain_product == q("1/4"));
    CHECK(witness->gain() == 4);
    CHECK(witness->vertices.size() == 2);
}

TEST_CASE("acyclic and unit-gain hypergraphs")
{
    const Hypergraph acyclic = build_hypergraph(golden::ex_acyclic());
    CHECK_FALSE(check_gainfree(acyclic).has_value());
    CHECK_FALSE(max_cycle_gain(acyclic).has_value());

    const Hypergraph unit = build_hypergraph(golden::ex_unit_cycle());
    CHECK_FALSE(check_gainfree(unit).has_value());
    CHECK(*max_cycle_gain(unit) == 1);
}

TEST_CASE("is_valid_cycle rejects malformed witnesses")
{
    const Hypergraph h = build_hypergraph(golden::ex_not_gainfree());
    CycleWitness w = *check_gainfree(h);
    CycleWitness wrong_gain = w;
    wrong_gain.gain_product = 1;
    CHECK_FALSE(is_valid_cycle(h, wrong_gain));
    CycleWitness wrong_arc = w;
    std::swap(wrong_arc.arcs[0], wrong_arc.arcs[1]);
    CHECK_FALSE(is_valid_cycle(h, wrong_arc));
}

TEST_CASE("times and transpose_times")
{
    const Instance inst = golden::ex_acyclic();
    CHECK(inst.times(qv({"1", "2", "9", "23"})) == zeros(3));
    CHECK(inst.transpose_times(qv({"15", "5", "2"})) == qv({"-61", "3", "1", "2"}));
}
