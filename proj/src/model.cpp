#include "leontief/model.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace leontief {

RationalVector Instance::times(const RationalVector& x) const
{
    if (x.size() != n()) throw std::invalid_argument("A x: vector length differs from n");
    RationalVector out = zeros(m);
    for (std::size_t j = 0; j < n(); ++j) {
        if (sgn(x[j]) == 0) continue;
        for (const Entry& e : columns[j]) out[e.row] += e.value * x[j];
    }
    return out;
}

RationalVector Instance::transpose_times(const RationalVector& y) const
{
    if (y.size() != m) throw std::invalid_argument("y^T A: vector length differs from m");
    RationalVector out = zeros(n());
    for (std::size_t j = 0; j < n(); ++j) {
        for (const Entry& e : columns[j]) out[j] += e.value * y[e.row];
    }
    return out;
}

Instance Instance::from_triplets(std::size_t m, std::size_t n,
                                 const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& triplets,
                                 RationalVector b, RationalVector c)
{
    if (b.size() != m) throw std::invalid_argument("b has " + std::to_string(b.size()) + " entries, expected m = " + std::to_string(m));
    if (c.size() != n) throw std::invalid_argument("c has " + std::to_string(c.size()) + " entries, expected n = " + std::to_string(n));
    Instance inst;
    inst.m = m;
    inst.columns.resize(n);
    inst.b = std::move(b);
    inst.c = std::move(c);
    for (const auto& [i, j, v] : triplets) {
        if (i >= m || j >= n) {
            throw std::invalid_argument("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") out of range");
        }
        inst.columns[j].push_back({i, v});
    }
    for (Column& col : inst.columns) {
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        for (std::size_t k = 1; k < col.size(); ++k) {
            if (col[k].row == col[k - 1].row) throw std::invalid_argument("duplicate entry in row " + std::to_string(col[k].row + 1));
        }
        std::erase_if(col, [](const Entry& e) { return sgn(e.value) == 0; });
    }
    return inst;
}

Instance Instance::from_dense(const std::vector<RationalVector>& rows, RationalVector b, RationalVector c)
{
    const std::size_t m = rows.size();
    const std::size_t n = c.size();
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets;
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("ragged dense matrix");
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(rows[i][j]) != 0) triplets.emplace_back(i, j, rows[i][j]);
        }
    }
    return from_triplets(m, n, triplets, std::move(b), std::move(c));
}

std::vector<Violation> validate(const Instance& inst)
{
    std::vector<Violation> out;
    for (std::size_t j = 0; j < inst.n(); ++j) {
        const auto positives = std::count_if(inst.columns[j].begin(), inst.columns[j].end(),
                                             [](const Entry& e) { return sgn(e.value) > 0; });
        if (positives > 1) {
            out.push_back({ViolationKind::multiple_positive, j,
                           "column " + std::to_string(j + 1) + " has " + std::to_string(positives) + " positive entries"});
        }
    }
    for (std::size_t i = 0; i < inst.b.size(); ++i) {
        if (sgn(inst.b[i]) < 0) {
            out.push_back({ViolationKind::negative_b, i,
                           "b not nonnegative: b[" + std::to_string(i + 1) + "] = " + to_string(inst.b[i])});
        }
    }
    return out;
}

bool ScalingRecord::is_identity() const
{
    return std::all_of(column_scale.begin(), column_scale.end(), [](const Rational& a) { return a == 1; });
}

NormalizedInstance normalize(const Instance& inst)
{
    NormalizedInstance out{inst, ScalingRecord{RationalVector(inst.n(), Rational(1))}};
    for (std::size_t j = 0; j < inst.n(); ++j) {
        Column& col = out.instance.columns[j];
        auto pos = std::find_if(col.begin(), col.end(), [](const Entry& e) { return sgn(e.value) > 0; });
        if (pos == col.end() || pos->value == 1) continue;
        const Rational a = pos->value;
        for (Entry& e : col) e.value /= a;
        out.instance.c[j] /= a;
        out.scaling.column_scale[j] = a;
    }
    return out;
}

Outcome denormalize_certificates(const ScalingRecord& scaling, Outcome outcome)
{
    auto unscale = [&](RationalVector& v) {
        if (v.size() != scaling.column_scale.size()) throw std::invalid_argument("certificate length differs from column count");
        for (std::size_t j = 0; j < v.size(); ++j) v[j] /= scaling.column_scale[j];
    };
    std::visit([&](auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Optimal> || std::is_same_v<T, DualInfeasible>) unscale(o.x);
        if constexpr (std::is_same_v<T, DualInfeasible> || std::is_same_v<T, BothInfeasible>) unscale(o.r);
    }, outcome);
    return outcome;
}

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<Hyperarc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), incoming_(vertex_count)
{
    for (std::size_t j = 0; j < arcs_.size(); ++j) {
        Hyperarc& e = arcs_[j];
        std::sort(e.tails.begin(), e.tails.end(), [](const Tail& a, const Tail& b) { return a.vertex < b.vertex; });
        for (std::size_t k = 0; k < e.tails.size(); ++k) {
            const Tail& t = e.tails[k];
            if (t.vertex >= vertex_count_) throw std::invalid_argument("tail vertex out of range");
            if (sgn(t.gain) <= 0) throw std::invalid_argument("hyperarc gains must be positive");
            if (k > 0 && e.tails[k - 1].vertex == t.vertex) throw std::invalid_argument("repeated tail vertex");
            if (e.head && *e.head == t.vertex) throw std::invalid_argument("hyperarc head is also a tail");
        }
        if (e.head) {
            if (*e.head >= vertex_count_) throw std::invalid_argument("head vertex out of range");
            incoming_[*e.head].push_back(j);
        } else {
            headless_.push_back(j);
        }
    }
}

Hypergraph Hypergraph::with_zero_lengths() const
{
    std::vector<Hyperarc> arcs = arcs_;
    for (Hyperarc& e : arcs) e.length = 0;
    return Hypergraph(vertex_count_, std::move(arcs));
}

Instance Hypergraph::to_instance(RationalVector b) const
{
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets;
    RationalVector c;
    c.reserve(arcs_.size());
    for (std::size_t j = 0; j < arcs_.size(); ++j) {
        if (arcs_[j].head) triplets.emplace_back(*arcs_[j].head, j, Rational(1));
        for (const Tail& t : arcs_[j].tails) triplets.emplace_back(t.vertex, j, Rational(-t.gain));
        c.push_back(arcs_[j].length);
    }
    return Instance::from_triplets(vertex_count_, arcs_.size(), triplets, std::move(b), std::move(c));
}

Hypergraph build_hypergraph(const Instance& inst)
{
    std::vector<Hyperarc> arcs(inst.n());
    for (std::size_t j = 0; j < inst.n(); ++j) {
        Hyperarc& e = arcs[j];
        e.length = inst.c[j];
        for (const Entry& entry : inst.columns[j]) {
            if (sgn(entry.value) > 0) {
                if (entry.value != 1) throw std::invalid_argument("build_hypergraph needs a normalized instance (column " + std::to_string(j + 1) + ")");
                if (e.head) throw std::invalid_argument("column " + std::to_string(j + 1) + " has two positive entries");
                e.head = entry.row;
            } else {
                e.tails.push_back({entry.row, Rational(-entry.value)});
            }
        }
    }
    return Hypergraph(inst.m, std::move(arcs));
}

namespace {

/// One arc u -> h(E) of weight gamma(E, u) per (E, u in T(E)) with h(E) set.
struct ProjectedArc {
    std::size_t from;
    std::size_t to;
    const Rational* weight;
    std::size_t hyperarc;
};

std::vector<ProjectedArc> project(const Hypergraph& h)
{
    std::vector<ProjectedArc> out;
    for (std::size_t j = 0; j < h.arc_count(); ++j) {
        const Hyperarc& e = h.arc(j);
        if (!e.head) continue;
        for (const Tail& t : e.tails) out.push_back({t.vertex, *e.head, &t.gain, j});
    }
    return out;
}

}  // namespace

std::optional<CycleWitness> check_gainfree(const Hypergraph& h)
{
    const std::size_t m = h.vertex_count();
    const std::vector<ProjectedArc> arcs = project(h);
    if (m == 0 || arcs.empty()) return std::nullopt;

    // Multiplicative Bellman-Ford from a virtual source reaching every vertex
    // with product 1. A product-below-one cycle exists iff round m still relaxes.
    RationalVector potential(m, Rational(1));
    std::vector<std::optional<std::size_t>> pred(m);
    std::optional<std::size_t> last_relaxed;
    for (std::size_t round = 1; round <= m; ++round) {
        last_relaxed.reset();
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            const ProjectedArc& arc = arcs[a];
            Rational candidate = potential[arc.from] * *arc.weight;
            if (candidate < potential[arc.to]) {
                potential[arc.to] = std::move(candidate);
                pred[arc.to] = a;
                last_relaxed = arc.to;
            }
        }
        if (!last_relaxed) return std::nullopt;
    }

    // Walking m predecessor steps back from a vertex relaxed in round m lands
    // on a cycle of the predecessor graph.
    std::size_t v = *last_relaxed;
    for (std::size_t step = 0; step < m; ++step) v = arcs[*pred[v]].from;

    std::vector<std::size_t> reversed;
    std::size_t cur = v;
    do {
        const std::size_t a = *pred[cur];
        reversed.push_back(a);
        cur = arcs[a].from;
    } while (cur != v);

    CycleWitness w;
    w.gain_product = 1;
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
        const ProjectedArc& arc = arcs[*it];
        w.vertices.push_back(arc.from);
        w.arcs.push_back(arc.hyperarc);
        w.gain_product *= *arc.weight;
    }
    assert(w.gain_product < 1);
    return w;
}

std::optional<Rational> max_cycle_gain(const Hypergraph& h)
{
    const std::size_t m = h.vertex_count();
    const std::vector<ProjectedArc> arcs = project(h);
    std::optional<Rational> min_product;

    // The cheapest cycle through `source` is a minimum-product path
    // source ~> u closed by an arc u -> source; such paths are simple when no
    // cycle has product below one.
    for (std::size_t source = 0; source < m; ++source) {
        std::vector<std::optional<Rational>> dist(m);
        dist[source] = Rational(1);
        for (std::size_t round = 1; round < m; ++round) {
            bool changed = false;
            for (const ProjectedArc& arc : arcs) {
                if (!dist[arc.from]) continue;
                Rational candidate = *dist[arc.from] * *arc.weight;
                if (!dist[arc.to] || candidate < *dist[arc.to]) {
                    dist[arc.to] = std::move(candidate);
                    changed = true;
                }
            }
            if (!changed) break;
        }
        for (const ProjectedArc& arc : arcs) {
            if (arc.to != source || !dist[arc.from]) continue;
            Rational product = *dist[arc.from] * *arc.weight;
            if (!min_product || product < *min_product) min_product = std::move(product);
        }
    }
    if (!min_product) return std::nullopt;
    return Rational(1 / *min_product);
}

bool is_valid_cycle(const Hypergraph& h, const CycleWitness& w)
{
    const std::size_t k = w.vertices.size();
    if (k == 0 || w.arcs.size() != k) return false;
    Rational product = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (w.arcs[i] >= h.arc_count()) return false;
        const Hyperarc& e = h.arc(w.arcs[i]);
        if (!e.head || *e.head != w.vertices[(i + 1) % k]) return false;
        auto tail = std::find_if(e.tails.begin(), e.tails.end(), [&](const Tail& t) { return t.vertex == w.vertices[i]; });
        if (tail == e.tails.end()) return false;
        product *= tail->gain;
    }
    return product == w.gain_product;
}

}  // namespace leontief
