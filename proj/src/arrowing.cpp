#include "sizeramsey/arrowing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "sizeramsey/errors.hpp"

namespace sizeramsey {

SmallGraph::SmallGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count < 0 || vertex_count > max_vertices) {
        throw std::invalid_argument("SmallGraph supports at most 32 vertices");
    }
    adjacency_.assign(static_cast<std::size_t>(vertex_count), 0);
    for (auto [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("self-loop");
        if (adjacency_[static_cast<std::size_t>(u)] & (std::uint32_t{1} << v)) {
            throw std::invalid_argument("duplicate edge");
        }
        adjacency_[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adjacency_[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
}

SmallGraph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1 || s + t > SmallGraph::max_vertices) {
        throw InstanceTooLarge("complete_bipartite needs s, t >= 1 and s + t <= 32");
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < s; ++u) {
        for (int v = s; v < s + t; ++v) edges.emplace_back(u, v);
    }
    return SmallGraph(s + t, std::move(edges));
}

SmallGraph complete(int n) {
    if (n < 2 || n > 10) throw InstanceTooLarge("complete needs 2 <= n <= 10");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return SmallGraph(n, std::move(edges));
}

namespace {

using Adjacency = std::vector<std::uint32_t>;

// Some `size`-subset of `candidates` (added to `chosen_common`, already the
// common neighbourhood of the chosen vertices) keeps at least `need` common
// neighbours.
bool extend_common(const Adjacency& adj, std::uint32_t candidates, std::uint32_t common, int size, int need) {
    if (std::popcount(common) < need) return false;
    if (size == 0) return true;
    while (std::popcount(candidates) >= size) {
        const int z = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (extend_common(adj, candidates, common & adj[static_cast<std::size_t>(z)], size - 1, need)) {
            return true;
        }
    }
    return false;
}

bool contains_kst(const Adjacency& adj, int s, int t) {
    // An s-set with t common neighbours exists iff a t-set with s common
    // neighbours does, so the smaller side is enumerated.
    const int a = std::min(s, t);
    const int b = std::max(s, t);
    std::uint32_t all = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (adj[v]) all |= std::uint32_t{1} << v;
    }
    return extend_common(adj, all, ~std::uint32_t{0}, a, b);
}

// Whether adj has a K_{s,t} using edge uv.
bool contains_kst_through(const Adjacency& adj, int u, int v, int s, int t) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
        // x on the s-side, y on the t-side: the other s-1 vertices are neighbours of y.
        const std::uint32_t others = adj[static_cast<std::size_t>(y)] & ~(std::uint32_t{1} << x);
        if (extend_common(adj, others, adj[static_cast<std::size_t>(x)], s - 1, t)) return true;
        if (s == t) break;
    }
    return false;
}

struct SharedState {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> over_budget{false};
    std::atomic<std::size_t> best_prefix{std::numeric_limits<std::size_t>::max()};
    std::uint64_t budget = 0;
};

class Search {
public:
    Search(const SmallGraph& graph, const Forbidden& forbidden, int r, SharedState& shared)
        : graph_(graph), forbidden_(forbidden), r_(r), shared_(shared),
          adj_(static_cast<std::size_t>(r), Adjacency(static_cast<std::size_t>(graph.vertex_count()), 0)),
          colours_(graph.edge_count(), 0) {}

    // Colour edge k with c; false if that completes a forbidden copy.
    bool place(std::size_t k, int c) {
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.budget) {
            shared_.over_budget.store(true, std::memory_order_relaxed);
            return false;
        }
        auto [u, v] = graph_.edges()[k];
        auto& adj = adj_[static_cast<std::size_t>(c)];
        adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
        colours_[k] = c;
        const auto [s, t] = forbidden_[static_cast<std::size_t>(c)];
        if (contains_kst_through(adj, u, v, s, t)) {
            remove(k);
            return false;
        }
        return true;
    }

    void remove(std::size_t k) {
        auto [u, v] = graph_.edges()[k];
        auto& adj = adj_[static_cast<std::size_t>(colours_[k])];
        adj[static_cast<std::size_t>(u)] &= ~(std::uint32_t{1} << v);
        adj[static_cast<std::size_t>(v)] &= ~(std::uint32_t{1} << u);
    }

    // Depth-first over edges k.. in colour order 0..r-1.
    bool complete_from(std::size_t k, std::size_t prefix_index) {
        if (k == graph_.edge_count()) return true;
        if (shared_.over_budget.load(std::memory_order_relaxed) ||
            shared_.best_prefix.load(std::memory_order_relaxed) < prefix_index) {
            return false;
        }
        for (int c = 0; c < r_; ++c) {
            if (!place(k, c)) continue;
            if (complete_from(k + 1, prefix_index)) return true;
            remove(k);
        }
        return false;
    }

    std::string certificate() const {
        std::string out;
        for (int c : colours_) out.push_back(static_cast<char>('1' + c));
        return out;
    }

private:
    const SmallGraph& graph_;
    const Forbidden& forbidden_;
    int r_;
    SharedState& shared_;
    std::vector<Adjacency> adj_;
    std::vector<int> colours_;
};

}  // namespace

bool has_mono_kst(const SmallGraph& graph, const EdgeMask& mask, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("has_mono_kst needs s, t >= 1");
    if (mask.size() != graph.edge_count()) throw std::invalid_argument("edge mask length mismatch");
    Adjacency adj(static_cast<std::size_t>(graph.vertex_count()), 0);
    for (std::size_t k = 0; k < mask.size(); ++k) {
        if (!mask[k]) continue;
        auto [u, v] = graph.edges()[k];
        adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    return contains_kst(adj, s, t);
}

bool certificate_avoids(const SmallGraph& graph, const Forbidden& forbidden, const std::string& certificate) {
    if (certificate.size() != graph.edge_count()) return false;
    const int r = static_cast<int>(forbidden.size());
    for (char ch : certificate) {
        if (ch < '1' || ch >= '1' + r) return false;
    }
    for (int c = 0; c < r; ++c) {
        EdgeMask mask(certificate.size());
        for (std::size_t k = 0; k < certificate.size(); ++k) mask[k] = certificate[k] == '1' + c;
        const auto [s, t] = forbidden[static_cast<std::size_t>(c)];
        if (has_mono_kst(graph, mask, s, t)) return false;
    }
    return true;
}

ArrowingResult arrows(const SmallGraph& graph, const Forbidden& forbidden, int r, const ArrowingOptions& options) {
    if (r < 1 || r > 9) throw std::invalid_argument("arrows supports 1 <= r <= 9 colours");
    if (static_cast<int>(forbidden.size()) != r) {
        throw std::invalid_argument("forbidden list must name one graph per colour");
    }
    for (auto [s, t] : forbidden) {
        if (s < 1 || t < 1) throw std::invalid_argument("forbidden graphs need s, t >= 1");
    }

    SharedState shared;
    shared.budget = options.budget;
    const std::size_t edges = graph.edge_count();

    // Top levels of the tree are split into prefixes, handed out in order.
    const unsigned jobs = std::max(1u, options.jobs);
    std::size_t depth = 0;
    std::size_t prefixes = 1;
    if (jobs > 1) {
        while (depth < edges && prefixes < 8 * static_cast<std::size_t>(jobs)) {
            prefixes *= static_cast<std::size_t>(r);
            ++depth;
        }
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::optional<std::string>> found(prefixes);
    auto worker = [&] {
        for (;;) {
            const std::size_t index = next.fetch_add(1);
            if (index >= prefixes || shared.over_budget.load()) return;
            if (shared.best_prefix.load() < index) continue;
            Search search(graph, forbidden, r, shared);
            // Digits of index, most significant first, colour the first depth edges.
            std::vector<int> digits(depth);
            std::size_t rest = index;
            for (std::size_t k = depth; k-- > 0;) {
                digits[k] = static_cast<int>(rest % static_cast<std::size_t>(r));
                rest /= static_cast<std::size_t>(r);
            }
            bool alive = true;
            for (std::size_t k = 0; k < depth && alive; ++k) alive = search.place(k, digits[k]);
            if (!alive || !search.complete_from(depth, index)) continue;
            found[index] = search.certificate();
            std::size_t current = shared.best_prefix.load();
            while (index < current && !shared.best_prefix.compare_exchange_weak(current, index)) {
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    ArrowingResult result;
    result.nodes = std::min(shared.nodes.load(), shared.budget);
    const std::size_t best = shared.best_prefix.load();
    if (best < prefixes) {
        result.arrows = false;
        result.certificate = found[best];
        return result;
    }
    if (shared.over_budget.load()) {
        throw BudgetExceeded("arrowing search exceeded its budget of " + std::to_string(options.budget) +
                             " nodes");
    }
    result.arrows = true;
    return result;
}

std::optional<int> min_t_arrowing(int s, const Forbidden& forbidden, int r, int t_max,
                                  const ArrowingOptions& options) {
    for (int t = 1; t <= t_max; ++t) {
        if (arrows(complete_bipartite(s, t), forbidden, r, options).arrows) return t;
    }
    return std::nullopt;
}

}  // namespace sizeramsey
