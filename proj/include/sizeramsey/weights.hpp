#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sizeramsey/exactnum.hpp"

namespace sizeramsey {

/// Subset of a weight's vertex set; bit x set iff vertex x (0-based) is in it.
using VertexSet = std::uint32_t;

/**
 * A weight f: a nonnegative rational f_A for every subset A of [v].
 *
 * Stored sparsely; absent subsets are zero and zero values are never stored.
 */
class Weight {
public:
    static constexpr int max_vertices = 24;

    explicit Weight(int vertex_count = 0);

    int vertex_count() const { return vertex_count_; }

    /// Throws std::invalid_argument for negative values or sets outside [v].
    void set(VertexSet subset, const Rational& value);
    Rational get(VertexSet subset) const;

    /// Nonzero entries in increasing mask order.
    const std::map<VertexSet, Rational>& support() const { return table_; }

    VertexSet full_set() const;

    friend bool operator==(const Weight&, const Weight&) = default;

private:
    int vertex_count_;
    std::map<VertexSet, Rational> table_;
};

/// k_{s,t}: value t on [s], zero elsewhere.
Weight k_weight(int s, const Rational& t);

/// e(f) = sum_A f_A |A|
Rational weight_size(const Weight& f);

/// d(x) = sum_{A containing x} f_A. Throws std::out_of_range for x outside [v].
Rational weight_degree(const Weight& f, int x);

/// Bipartite graph with a fixed bipartition, described by the left-side
/// neighbourhood of each right vertex.
struct BipGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<VertexSet> right_neighborhoods;

    /// The same graph with the sides exchanged.
    BipGraph transposed() const;

    friend bool operator==(const BipGraph&, const BipGraph&) = default;
};

/// K_{s,t} as a BipGraph with s left vertices.
BipGraph complete_bip_graph(int s, int t);

/**
 * F subset f: for one of the two orientations of F there is an injection h
 * of the left side into V(f) such that every right neighbourhood A has some
 * B containing h(A) with f_B > 0. Throws InstanceTooLarge when a side has
 * more than 8 vertices.
 */
bool graph_in_weight(const BipGraph& graph, const Weight& f);

/// Witness for f subset g.
struct WeightEmbedding {
    std::vector<int> injection;  // h(x) for x in V(f)
    /// (A, B) -> w_{A,B}, only nonzero entries.
    std::map<std::pair<VertexSet, VertexSet>, Rational> transport;
};

/**
 * f subset g: some injection h: V(f) -> V(g) admits w_{A,B} >= 0, zero unless
 * h(A) is within B, with sum_B w_{A,B} >= f_A and sum_A w_{A,B} <= g_B.
 * g is padded with isolated vertices when v(f) > v(g). Each injection is
 * decided by an exact LP feasibility solve; injections are tried in
 * lexicographic order and the first feasible one is returned.
 * Throws InstanceTooLarge when either weight has more than 6 vertices.
 */
std::optional<WeightEmbedding> weight_embedding(const Weight& f, const Weight& g);

bool weight_in_weight(const Weight& f, const Weight& g);

/**
 * Fractional r-colouring of a weight: c_{A_1..A_r} >= 0 over r-tuples of
 * pairwise disjoint subsets. Sparse; absent tuples are zero.
 */
class RColouring {
public:
    RColouring(int r, Weight ground);

    int r() const { return r_; }
    const Weight& ground() const { return ground_; }

    /// Throws std::invalid_argument unless the tuple has r pairwise disjoint
    /// subsets of V(ground) and value >= 0. Adds to any existing value.
    void add(const std::vector<VertexSet>& parts, const Rational& value);

    const std::map<std::vector<VertexSet>, Rational>& entries() const { return table_; }

private:
    int r_;
    Weight ground_;
    std::map<std::vector<VertexSet>, Rational> table_;
};

/// For every A within V(g): sum of c over tuples with union A strictly exceeds g_A.
/// Throws std::invalid_argument if c is not a colouring of g.
bool is_colouring(const RColouring& c, const Weight& g);

/// c_i: A -> sum of c over tuples whose i-th part (0-based) is A.
Weight colour_subweight(const RColouring& c, int colour);

/// Canonical member of the dilatation of f at scale n: ceil(f_A n) right
/// vertices with neighbourhood A for each A in increasing mask order.
BipGraph dilate(const Weight& f, int n);

}  // namespace sizeramsey
