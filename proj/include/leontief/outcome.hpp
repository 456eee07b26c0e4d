#pragma once

#include "leontief/rational.hpp"

#include <optional>
#include <string_view>
#include <variant>

namespace leontief {

/// Primal and dual both feasible with equal objective values.
struct Optimal {
    RationalVector x;
    RationalVector y;
    bool operator==(const Optimal&) const = default;
};

/// Primal infeasible (z^T A <= 0, z^T b > 0); dual feasible and unbounded.
struct PrimalInfeasible {
    RationalVector z;
    RationalVector y;
    bool operator==(const PrimalInfeasible&) const = default;
};

/// Primal feasible and unbounded; dual infeasible (A r = 0, c^T r < 0, r >= 0).
struct DualInfeasible {
    RationalVector x;
    RationalVector r;
    bool operator==(const DualInfeasible&) const = default;
};

struct BothInfeasible {
    RationalVector z;
    RationalVector r;
    bool operator==(const BothInfeasible&) const = default;
};

using Outcome = std::variant<Optimal, PrimalInfeasible, DualInfeasible, BothInfeasible>;

enum class OutcomeKind { optimal, primal_infeasible, dual_infeasible, both_infeasible };

OutcomeKind kind_of(const Outcome& outcome);
std::string_view name(OutcomeKind kind);
std::optional<OutcomeKind> parse_outcome_kind(std::string_view text);

}  // namespace leontief
