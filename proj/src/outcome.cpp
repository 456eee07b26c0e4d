#include "leontief/outcome.hpp"

namespace leontief {

OutcomeKind kind_of(const Outcome& outcome)
{
    return static_cast<OutcomeKind>(outcome.index());
}

std::string_view name(OutcomeKind kind)
{
    switch (kind) {
    case OutcomeKind::optimal: return "optimal";
    case OutcomeKind::primal_infeasible: return "primal_infeasible";
    case OutcomeKind::dual_infeasible: return "dual_infeasible";
    case OutcomeKind::both_infeasible: return "both_infeasible";
    }
    return "unknown";
}

std::optional<OutcomeKind> parse_outcome_kind(std::string_view text)
{
    for (auto kind : {OutcomeKind::optimal, OutcomeKind::primal_infeasible, OutcomeKind::dual_infeasible,
                      OutcomeKind::both_infeasible}) {
        if (name(kind) == text) return kind;
    }
    return std::nullopt;
}

}  // namespace leontief
