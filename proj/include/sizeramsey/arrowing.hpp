#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sizeramsey {

/// Simple graph on at most 32 vertices with a fixed edge order.
class SmallGraph {
public:
    static constexpr int max_vertices = 32;

    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// endpoints outside [0, vertex_count).
    SmallGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::uint32_t neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint32_t> adjacency_;
};

/// K_{s,t}; left vertices 0..s-1, edges ordered left-major.
SmallGraph complete_bipartite(int s, int t);

/// K_n for 2 <= n <= 10, edges in lexicographic order.
SmallGraph complete(int n);

/// Edge subset, indexed by edge position.
using EdgeMask = std::vector<bool>;

/// Whether the masked edges contain K_{s,t} (as a not necessarily induced subgraph).
bool has_mono_kst(const SmallGraph& graph, const EdgeMask& mask, int s, int t);

/// (s_i, t_i) forbidden in colour i.
using Forbidden = std::vector<std::pair<int, int>>;

struct ArrowingOptions {
    /// Maximum number of search nodes (partial colourings) visited.
    std::uint64_t budget = std::uint64_t{1} << 32;
    /// Worker threads. Outcome and certificate do not depend on it.
    unsigned jobs = 1;
};

struct ArrowingResult {
    bool arrows = false;
    /// When !arrows: colour (1..r) of each edge in edge order, e.g. "121...".
    /// It is the first avoiding colouring in lexicographic edge order.
    std::optional<std::string> certificate;
    std::uint64_t nodes = 0;
};

/**
 * Decides G -> (K_{s_1,t_1}, ..., K_{s_r,t_r}) by backtracking over the edge
 * order. A branch dies as soon as its newest edge completes a forbidden copy
 * in its colour. Throws BudgetExceeded when the node budget runs out and
 * std::invalid_argument unless forbidden has exactly r entries.
 */
ArrowingResult arrows(const SmallGraph& graph, const Forbidden& forbidden, int r,
                      const ArrowingOptions& options = {});

/// Whether a certificate string is an avoiding colouring of graph.
bool certificate_avoids(const SmallGraph& graph, const Forbidden& forbidden, const std::string& certificate);

/// Smallest t <= t_max with K_{s,t} -> forbidden, if any.
std::optional<int> min_t_arrowing(int s, const Forbidden& forbidden, int r, int t_max,
                                  const ArrowingOptions& options = {});

}  // namespace sizeramsey
