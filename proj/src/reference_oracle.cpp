#include "leontief/reference_oracle.hpp"

#include "leontief/certify.hpp"

#include <stdexcept>

namespace leontief {

namespace {

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
    LpStatus status;
    RationalVector x;
    Rational objective;
    RationalVector ray;
};

/// Dense tableau for min c^T x, A x = b, x >= 0 with one artificial column
/// per row. Columns [0, n) are structural, [n, n+rows) artificial, and the
/// last column is the right-hand side.
class Tableau {
public:
    Tableau(const std::vector<RationalVector>& a, const RationalVector& b, std::size_t n)
        : n_(n), rows_(a.size()), width_(n + a.size() + 1)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            RationalVector row = zeros(width_);
            const bool flip = sgn(b[i]) < 0;
            for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-a[i][j]) : a[i][j];
            row[n + i] = 1;
            row[width_ - 1] = flip ? Rational(-b[i]) : b[i];
            t_.push_back(std::move(row));
            basis_.push_back(n + i);
        }
    }

    /// Bland's rule: lowest-index improving column enters; ties in the ratio
    /// test go to the lowest basic index. Returns the entering column when
    /// the objective is unbounded along it.
    std::optional<std::size_t> optimize(const RationalVector& cost, std::size_t allowed_columns)
    {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < allowed_columns && !entering; ++j) {
                if (is_basic(j)) continue;
                Rational d = cost[j];
                for (std::size_t i = 0; i < t_.size(); ++i) {
                    if (sgn(t_[i][j]) != 0) d -= cost[basis_[i]] * t_[i][j];
                }
                if (sgn(d) < 0) entering = j;
            }
            if (!entering) return std::nullopt;

            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (sgn(t_[i][*entering]) <= 0) continue;
                Rational ratio = t_[i][width_ - 1] / t_[i][*entering];
                if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leave) return entering;
            pivot(*leave, *entering);
        }
    }

    /// Pivots zero-level artificials out of the basis; drops redundant rows.
    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < t_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < n_ && !col; ++j) {
                if (sgn(t_[i][j]) != 0) col = j;
            }
            if (col) {
                pivot(i, *col);
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    RationalVector solution(std::size_t count) const
    {
        RationalVector x = zeros(count);
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (basis_[i] < count) x[basis_[i]] = t_[i][width_ - 1];
        }
        return x;
    }

    /// Direction increasing `entering` by one while keeping A x = b.
    RationalVector ray(std::size_t entering, std::size_t count) const
    {
        RationalVector r = zeros(count);
        r[entering] = 1;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (basis_[i] < count) r[basis_[i]] = -t_[i][entering];
        }
        return r;
    }

private:
    bool is_basic(std::size_t j) const
    {
        for (std::size_t bj : basis_) {
            if (bj == j) return true;
        }
        return false;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational p = t_[row][col];
        for (Rational& v : t_[row]) v /= p;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == row || sgn(t_[i][col]) == 0) continue;
            const Rational f = t_[i][col];
            for (std::size_t j = 0; j < width_; ++j) {
                if (sgn(t_[row][j]) != 0) t_[i][j] -= f * t_[row][j];
            }
        }
        basis_[row] = col;
    }

    std::size_t n_;
    std::size_t rows_;
    std::size_t width_;
    std::vector<RationalVector> t_;
    std::vector<std::size_t> basis_;
};

LpResult solve_standard_form(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c)
{
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    Tableau tab(a, b, n);

    RationalVector phase_one = zeros(n + m);
    for (std::size_t i = 0; i < m; ++i) phase_one[n + i] = 1;
    tab.optimize(phase_one, n + m);
    const RationalVector with_artificials = tab.solution(n + m);
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(with_artificials[n + i]) != 0) return {LpStatus::infeasible, {}, 0, {}};
    }
    tab.drive_out_artificials();

    RationalVector phase_two = zeros(n + m);
    for (std::size_t j = 0; j < n; ++j) phase_two[j] = c[j];
    if (auto entering = tab.optimize(phase_two, n)) {
        return {LpStatus::unbounded, tab.solution(n), 0, tab.ray(*entering, n)};
    }
    RationalVector x = tab.solution(n);
    Rational objective = dot(c, x);
    return {LpStatus::optimal, std::move(x), std::move(objective), {}};
}

std::vector<RationalVector> dense(const Instance& inst)
{
    std::vector<RationalVector> a(inst.m, zeros(inst.n()));
    for (std::size_t j = 0; j < inst.n(); ++j) {
        for (const Entry& e : inst.columns[j]) a[e.row][j] = e.value;
    }
    return a;
}

}  // namespace

OracleVerdict simplex_solve(const Instance& inst)
{
    if (inst.m > kOracleMaxRows || inst.n() > kOracleMaxColumns) {
        throw std::length_error("simplex oracle size guard: " + std::to_string(inst.m) + "x" +
                                std::to_string(inst.n()) + " exceeds " + std::to_string(kOracleMaxRows) + "x" +
                                std::to_string(kOracleMaxColumns));
    }
    const auto a = dense(inst);
    const LpResult primal = solve_standard_form(a, inst.b, inst.c);
    switch (primal.status) {
    case LpStatus::optimal:
        return {OutcomeKind::optimal, primal.x, primal.objective, std::nullopt};
    case LpStatus::unbounded:
        return {OutcomeKind::dual_infeasible, primal.x, std::nullopt, primal.ray};
    case LpStatus::infeasible:
        break;
    }
    // The dual is feasible iff min c^T x over the cone A x = 0, x >= 0 is bounded.
    const LpResult cone = solve_standard_form(a, zeros(inst.m), inst.c);
    if (cone.status == LpStatus::unbounded) {
        return {OutcomeKind::both_infeasible, std::nullopt, std::nullopt, cone.ray};
    }
    return {OutcomeKind::primal_infeasible, std::nullopt, std::nullopt, std::nullopt};
}

Instance two_phase_auxiliary(const Instance& inst)
{
    Instance aux;
    aux.m = inst.m;
    aux.b = inst.b;
    aux.columns = inst.columns;
    aux.c = inst.c;
    for (auto& cj : aux.c) cj = 0;
    for (std::size_t i = 0; i < inst.m; ++i) {
        aux.columns.push_back({Entry{i, Rational(1)}});
        aux.c.emplace_back(1);
    }
    for (std::size_t i = 0; i < inst.m; ++i) {
        aux.columns.push_back({Entry{i, Rational(-1)}});
        aux.c.emplace_back(1);
    }
    return aux;
}

TwoPhaseResult two_phase_primal_feasibility(const Instance& inst)
{
    const Instance aux = two_phase_auxiliary(inst);
    const Outcome outcome = solve(aux);
    const auto* optimal = std::get_if<Optimal>(&outcome);
    if (!optimal) {
        throw InternalError("two-phase auxiliary problem is bounded and feasible, but solved as " +
                            std::string(name(kind_of(outcome))));
    }
    TwoPhaseResult result;
    if (sgn(dot(aux.c, optimal->x)) == 0) {
        result.feasible = true;
        result.x.assign(optimal->x.begin(), optimal->x.begin() + static_cast<std::ptrdiff_t>(inst.n()));
    } else {
        result.z = optimal->y;
    }
    return result;
}

}  // namespace leontief
