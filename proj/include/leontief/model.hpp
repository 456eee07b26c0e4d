#pragma once

#include "leontief/outcome.hpp"
#include "leontief/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace leontief {

struct Entry {
    std::size_t row;
    Rational value;
    bool operator==(const Entry&) const = default;
};

/// Nonzero entries of one column, sorted by row.
using Column = std::vector<Entry>;

/// minimize c^T x subject to A x = b, x >= 0, with A stored by columns.
struct Instance {
    std::size_t m = 0;
    std::vector<Column> columns;
    RationalVector b;
    RationalVector c;

    std::size_t n() const { return columns.size(); }

    /// A x (length m).
    RationalVector times(const RationalVector& x) const;
    /// y^T A (length n).
    RationalVector transpose_times(const RationalVector& y) const;

    bool operator==(const Instance&) const = default;

    /// Builds from (row, col, value) triplets with 0-based indices. Zero values
    /// are dropped. Throws std::invalid_argument on out-of-range or duplicate
    /// positions, or when b/c lengths disagree with m/n.
    static Instance from_triplets(std::size_t m, std::size_t n,
                                  const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& triplets,
                                  RationalVector b, RationalVector c);

    /// Builds from a dense row-major matrix.
    static Instance from_dense(const std::vector<RationalVector>& rows, RationalVector b, RationalVector c);
};

enum class ViolationKind { multiple_positive, negative_b };

struct Violation {
    ViolationKind kind;
    std::size_t index;  // column for multiple_positive, row for negative_b
    std::string message;
};

/// Every violated Leontief-substitution invariant; empty means valid.
std::vector<Violation> validate(const Instance& inst);

/// Per-column positive scale factors: the column's positive entry, or 1.
struct ScalingRecord {
    RationalVector column_scale;
    bool is_identity() const;
};

struct NormalizedInstance {
    Instance instance;
    ScalingRecord scaling;
};

/// Divides every column with a positive entry a_j (and c_j) by a_j so all
/// positive entries become 1. b is unchanged. Precondition: inst validates.
NormalizedInstance normalize(const Instance& inst);

/// Maps certificates computed on the normalized twin back onto the original
/// instance: primal vectors x_j / a_j, Farkas-dual vectors r_j / a_j; y and z
/// are unchanged.
Outcome denormalize_certificates(const ScalingRecord& scaling, Outcome outcome);

struct Tail {
    std::size_t vertex;
    Rational gain;  // gamma(E, vertex) > 0
    bool operator==(const Tail&) const = default;
};

struct Hyperarc {
    std::optional<std::size_t> head;
    std::vector<Tail> tails;  // sorted by vertex
    Rational length;
    bool operator==(const Hyperarc&) const = default;
};

/// Vertices are rows, hyperarc j is column j: head is the row holding 1,
/// tails are rows with negative entries and gain -A_ij, length is c_j.
class Hypergraph {
public:
    Hypergraph(std::size_t vertex_count, std::vector<Hyperarc> arcs);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<Hyperarc>& arcs() const { return arcs_; }
    const Hyperarc& arc(std::size_t j) const { return arcs_[j]; }

    /// Indices of hyperarcs whose head is v, ascending.
    const std::vector<std::size_t>& incoming(std::size_t v) const { return incoming_[v]; }
    /// Indices of hyperarcs with empty head, ascending.
    const std::vector<std::size_t>& headless() const { return headless_; }

    /// Same structure with every length replaced by 0.
    Hypergraph with_zero_lengths() const;

    /// Reconstructs the (normalized) instance with the given right-hand side.
    Instance to_instance(RationalVector b) const;

private:
    std::size_t vertex_count_;
    std::vector<Hyperarc> arcs_;
    std::vector<std::vector<std::size_t>> incoming_;
    std::vector<std::size_t> headless_;
};

/// Precondition: every positive entry of inst is exactly 1.
Hypergraph build_hypergraph(const Instance& inst);

/// Directed cycle v_1 E_1 v_2 ... E_k v_1 with v_i in T(E_i), v_{i+1} = h(E_i).
struct CycleWitness {
    std::vector<std::size_t> vertices;  // v_1..v_k
    std::vector<std::size_t> arcs;      // E_1..E_k
    Rational gain_product;              // prod gamma(E_i, v_i)

    Rational gain() const { return 1 / gain_product; }
};

/// nullopt when every directed cycle has gain <= 1; otherwise a cycle whose
/// gain product is < 1.
std::optional<CycleWitness> check_gainfree(const Hypergraph& h);

/// Largest gain over all directed cycles, or nullopt if there are none.
/// Precondition: h is gainfree (so shortest multiplicative paths exist).
std::optional<Rational> max_cycle_gain(const Hypergraph& h);

/// True when w is a directed cycle of h and gain_product matches its gains.
bool is_valid_cycle(const Hypergraph& h, const CycleWitness& w);

}  // namespace leontief
