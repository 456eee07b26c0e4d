#include "leontief/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace leontief {

namespace {

// Raw engine output only: std distributions differ between standard
// libraries, which would break cross-platform determinism.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t k) { return engine_() % k; }
    bool chance(double p) { return static_cast<double>(below(1'000'000)) < p * 1'000'000.0; }

    /// p/q with 1 <= p, q <= 9.
    Rational small_positive()
    {
        Rational r(static_cast<long>(1 + below(9)), static_cast<long>(1 + below(9)));
        r.canonicalize();
        return r;
    }

private:
    std::mt19937_64 engine_;
};

bool small_enough(const Rational& r)
{
    return abs(r.get_num()) <= 9 && r.get_den() <= 9;
}

void erase_entry(Column& col, std::size_t row)
{
    col.erase(std::remove_if(col.begin(), col.end(), [&](const Entry& e) { return e.row == row; }), col.end());
}

Rational* find_entry(Column& col, std::size_t row)
{
    for (Entry& e : col) {
        if (e.row == row) return &e.value;
    }
    return nullptr;
}

}  // namespace

Instance gen_dc(std::size_t num_vars, std::size_t num_constraints, std::int64_t w_min, std::int64_t w_max,
                std::uint64_t seed)
{
    if (num_vars < 2) throw std::invalid_argument("gen_dc needs at least two variables");
    if (w_min > w_max) throw std::invalid_argument("gen_dc weight range is empty");
    Rng rng(seed);
    const auto span = static_cast<std::uint64_t>(w_max - w_min) + 1;

    Instance inst;
    inst.m = num_vars;
    for (std::size_t k = 0; k < num_constraints; ++k) {
        const std::size_t i = rng.below(num_vars);
        std::size_t j = rng.below(num_vars - 1);
        if (j >= i) ++j;
        Column col{{i, Rational(1)}, {j, Rational(-1)}};
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        inst.columns.push_back(std::move(col));
        inst.c.emplace_back(static_cast<long>(w_min + static_cast<std::int64_t>(rng.below(span))));
    }
    for (std::size_t v = 0; v < num_vars; ++v) {
        inst.columns.push_back({{v, Rational(1)}});
        inst.c.emplace_back(0);
    }
    for (std::size_t v = 0; v < num_vars; ++v) inst.b.emplace_back(static_cast<long>(rng.below(4)));
    return inst;
}

Instance gen_expfamily(std::uint64_t a)
{
    if (a < 1) throw std::invalid_argument("gen_expfamily needs a >= 1");
    const Rational ra{mpz_class(std::to_string(a))};
    const Rational up = (ra + 1) / ra;
    const Rational down = ra / (ra + 1);
    std::vector<RationalVector> rows{
        {-up, 1, 1, 0},
        {1, -down, 0, 1},
    };
    return Instance::from_dense(rows, {1, 1}, {1, -down, 0, 0});
}

Instance gen_random_gainfree(std::size_t m, std::size_t n, std::uint64_t seed, double density)
{
    if (m < 1 || n < 1) throw std::invalid_argument("gen_random_gainfree needs m, n >= 1");
    Rng rng(seed);
    Instance inst;
    inst.m = m;
    for (std::size_t j = 0; j < n; ++j) {
        std::optional<std::size_t> head;
        if (rng.below(8) != 0) head = rng.below(m);
        Column col;
        for (std::size_t i = 0; i < m; ++i) {
            if (head && *head == i) {
                col.push_back({i, rng.small_positive()});
            } else if (rng.chance(density)) {
                col.push_back({i, -rng.small_positive()});
            }
        }
        inst.columns.push_back(std::move(col));
        Rational cost(static_cast<long>(rng.below(10)), static_cast<long>(1 + rng.below(9)));
        cost.canonicalize();
        inst.c.push_back(rng.below(2) ? Rational(-cost) : cost);
    }
    for (std::size_t i = 0; i < m; ++i) inst.b.push_back(rng.below(3) == 0 ? Rational(0) : rng.small_positive());

    for (;;) {
        const auto witness = check_gainfree(build_hypergraph(normalize(inst).instance));
        if (!witness) break;
        const std::size_t j = witness->arcs.front();
        const std::size_t u = witness->vertices.front();
        Rational* entry = find_entry(inst.columns[j], u);
        const Rational rescaled = *entry / witness->gain_product;
        if (small_enough(rescaled)) {
            *entry = rescaled;
        } else {
            erase_entry(inst.columns[j], u);
        }
    }
    return inst;
}

Instance gen_integral(std::size_t m, std::size_t n, std::uint64_t seed, double density)
{
    if (m < 1 || n < 1) throw std::invalid_argument("gen_integral needs m, n >= 1");
    Rng rng(seed);
    Instance inst;
    inst.m = m;
    for (std::size_t j = 0; j < n; ++j) {
        std::optional<std::size_t> head;
        if (rng.below(10) != 0) head = rng.below(m);
        Column col;
        for (std::size_t i = 0; i < m; ++i) {
            if (head && *head == i) {
                col.push_back({i, Rational(1)});
            } else if (rng.chance(density)) {
                col.push_back({i, Rational(-static_cast<long>(1 + rng.below(3)))});
            }
        }
        inst.columns.push_back(std::move(col));
        inst.c.emplace_back(static_cast<long>(rng.below(15)) - 5);
    }
    for (std::size_t i = 0; i < m; ++i) inst.b.emplace_back(static_cast<long>(rng.below(4)));
    return inst;
}

}  // namespace leontief
