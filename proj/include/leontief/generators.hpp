#pragma once

#include "leontief/model.hpp"

#include <cstdint>

namespace leontief {

/// Difference-constraint system y_i - y_j <= w in primal form: one column per
/// constraint (+1 at i, -1 at j, cost w drawn from [w_min, w_max]) followed by
/// one unit column e_v with cost 0 per vertex. b is random in {0..3}.
/// Requires num_vars >= 2 and w_min <= w_max.
Instance gen_dc(std::size_t num_vars, std::size_t num_constraints, std::int64_t w_min, std::int64_t w_max,
                std::uint64_t seed);

/// Two vertices, four columns: cycle gains (a+1)/a and a/(a+1) plus two unit
/// columns. b = (1, 1). Requires a >= 1.
Instance gen_expfamily(std::uint64_t a);

/// Random Leontief instance with entries p/q (p, q <= 9). Each column has a
/// head with probability 7/8, each other row joins the tails with
/// probability `density`. Any cycle with gain above 1 is repaired by
/// rescaling one tail entry so the cycle gain is exactly 1, or by dropping
/// that entry when the rescaled value leaves the p/q <= 9 range.
Instance gen_random_gainfree(std::size_t m, std::size_t n, std::uint64_t seed, double density);

/// Integral instance whose columns carry a head equal to 1 (probability
/// 9/10) and integral tails; c and b integral. Integral gains are >= 1 so
/// every cycle has gain <= 1.
Instance gen_integral(std::size_t m, std::size_t n, std::uint64_t seed, double density);

}  // namespace leontief
