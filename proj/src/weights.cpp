#include "sizeramsey/weights.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "sizeramsey/errors.hpp"
#include "sizeramsey/simplex.hpp"

namespace sizeramsey {

namespace {

VertexSet image(VertexSet subset, const std::vector<int>& injection) {
    VertexSet out = 0;
    for (std::size_t x = 0; x < injection.size(); ++x) {
        if (subset & (VertexSet{1} << x)) out |= VertexSet{1} << injection[x];
    }
    return out;
}

bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

}  // namespace

Weight::Weight(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0 || vertex_count > max_vertices) {
        throw std::invalid_argument("weight vertex count must lie in [0, 24]");
    }
}

VertexSet Weight::full_set() const {
    return vertex_count_ == 0 ? 0 : (VertexSet{1} << vertex_count_) - 1;
}

void Weight::set(VertexSet subset, const Rational& value) {
    if (!is_subset(subset, full_set())) throw std::invalid_argument("subset outside the vertex set");
    if (value.sign() < 0) throw std::invalid_argument("weights are nonnegative");
    if (value.sign() == 0) {
        table_.erase(subset);
    } else {
        table_[subset] = value;
    }
}

Rational Weight::get(VertexSet subset) const {
    auto it = table_.find(subset);
    return it == table_.end() ? Rational{} : it->second;
}

Weight k_weight(int s, const Rational& t) {
    if (s < 1 || t.sign() <= 0) throw std::invalid_argument("k_weight needs s >= 1 and t > 0");
    Weight f(s);
    f.set(f.full_set(), t);
    return f;
}

Rational weight_size(const Weight& f) {
    Rational total;
    for (const auto& [subset, value] : f.support()) total += value * Rational(std::popcount(subset));
    return total;
}

Rational weight_degree(const Weight& f, int x) {
    if (x < 0 || x >= f.vertex_count()) throw std::out_of_range("vertex outside the weight");
    Rational total;
    for (const auto& [subset, value] : f.support()) {
        if (subset & (VertexSet{1} << x)) total += value;
    }
    return total;
}

BipGraph BipGraph::transposed() const {
    BipGraph out;
    out.left_count = right_count;
    out.right_count = left_count;
    out.right_neighborhoods.assign(static_cast<std::size_t>(left_count), 0);
    for (int v = 0; v < right_count; ++v) {
        for (int u = 0; u < left_count; ++u) {
            if (right_neighborhoods[static_cast<std::size_t>(v)] & (VertexSet{1} << u)) {
                out.right_neighborhoods[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
            }
        }
    }
    return out;
}

BipGraph complete_bip_graph(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete_bip_graph needs s, t >= 1");
    BipGraph g;
    g.left_count = s;
    g.right_count = t;
    const VertexSet all = s >= 32 ? ~VertexSet{0} : (VertexSet{1} << s) - 1;
    g.right_neighborhoods.assign(static_cast<std::size_t>(t), all);
    return g;
}

namespace {

// Backtracking over injections of the left side; a partial map is abandoned
// as soon as some right neighbourhood restricted to the mapped vertices has
// no positive superset in f (supersets only get harder to find later).
bool embeds_oriented(const BipGraph& graph, const Weight& f) {
    if (graph.left_count > f.vertex_count()) return false;
    std::vector<VertexSet> positive;
    for (const auto& entry : f.support()) positive.push_back(entry.first);

    std::vector<int> injection;
    VertexSet used = 0;
    auto coverable = [&](int mapped) {
        const VertexSet mapped_mask = mapped >= 32 ? ~VertexSet{0} : (VertexSet{1} << mapped) - 1;
        for (VertexSet nb : graph.right_neighborhoods) {
            const VertexSet target = image(nb & mapped_mask, injection);
            bool found = false;
            for (VertexSet b : positive) {
                if (is_subset(target, b)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };
    std::function<bool(int)> extend = [&](int x) {
        if (!coverable(x)) return false;
        if (x == graph.left_count) return true;
        for (int y = 0; y < f.vertex_count(); ++y) {
            if (used & (VertexSet{1} << y)) continue;
            injection.push_back(y);
            used |= VertexSet{1} << y;
            if (extend(x + 1)) return true;
            used &= ~(VertexSet{1} << y);
            injection.pop_back();
        }
        return false;
    };
    return extend(0);
}

}  // namespace

bool graph_in_weight(const BipGraph& graph, const Weight& f) {
    if (graph.left_count > 8 || graph.right_count > 8) {
        throw InstanceTooLarge("graph_in_weight supports at most 8 vertices per side");
    }
    if (static_cast<int>(graph.right_neighborhoods.size()) != graph.right_count) {
        throw std::invalid_argument("BipGraph right neighbourhood count mismatch");
    }
    return embeds_oriented(graph, f) || embeds_oriented(graph.transposed(), f);
}

namespace {

std::optional<std::map<std::pair<VertexSet, VertexSet>, Rational>> transport_for(
    const Weight& f, const Weight& g, const std::vector<int>& injection) {
    std::vector<std::pair<VertexSet, VertexSet>> columns;
    for (const auto& [a, fa] : f.support()) {
        const VertexSet target = image(a, injection);
        bool any = false;
        for (const auto& [b, gb] : g.support()) {
            if (is_subset(target, b)) {
                columns.emplace_back(a, b);
                any = true;
            }
        }
        if (!any) return std::nullopt;
    }
    if (columns.empty()) return std::map<std::pair<VertexSet, VertexSet>, Rational>{};

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& [a, fa] : f.support()) {
        std::vector<Rational> row(columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].first == a) row[j] = -1;
        }
        rows.push_back(std::move(row));
        rhs.push_back(-fa);
    }
    for (const auto& [b, gb] : g.support()) {
        std::vector<Rational> row(columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].second == b) row[j] = 1;
        }
        rows.push_back(std::move(row));
        rhs.push_back(gb);
    }
    const auto outcome =
        solve_lp(LpProblem(std::vector<Rational>(columns.size()), std::move(rows), std::move(rhs)));
    if (outcome.status != LpStatus::optimal) return std::nullopt;
    std::map<std::pair<VertexSet, VertexSet>, Rational> plan;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (outcome.solution[j].sign() != 0) plan[columns[j]] = outcome.solution[j];
    }
    return plan;
}

}  // namespace

std::optional<WeightEmbedding> weight_embedding(const Weight& f, const Weight& g) {
    if (f.vertex_count() > 6 || g.vertex_count() > 6) {
        throw InstanceTooLarge("weight_in_weight supports at most 6 vertices per weight");
    }
    Weight host(std::max(f.vertex_count(), g.vertex_count()));
    for (const auto& [b, gb] : g.support()) host.set(b, gb);

    std::vector<int> injection;
    VertexSet used = 0;
    std::optional<WeightEmbedding> found;
    std::function<bool(int)> extend = [&](int x) {
        if (x == f.vertex_count()) {
            auto plan = transport_for(f, host, injection);
            if (!plan) return false;
            found = WeightEmbedding{injection, std::move(*plan)};
            return true;
        }
        for (int y = 0; y < host.vertex_count(); ++y) {
            if (used & (VertexSet{1} << y)) continue;
            injection.push_back(y);
            used |= VertexSet{1} << y;
            if (extend(x + 1)) return true;
            used &= ~(VertexSet{1} << y);
            injection.pop_back();
        }
        return false;
    };
    extend(0);
    return found;
}

bool weight_in_weight(const Weight& f, const Weight& g) { return weight_embedding(f, g).has_value(); }

RColouring::RColouring(int r, Weight ground) : r_(r), ground_(std::move(ground)) {
    if (r < 1) throw std::invalid_argument("a colouring needs r >= 1");
}

void RColouring::add(const std::vector<VertexSet>& parts, const Rational& value) {
    if (static_cast<int>(parts.size()) != r_) throw std::invalid_argument("colour tuple must have r parts");
    if (value.sign() < 0) throw std::invalid_argument("colouring values are nonnegative");
    VertexSet seen = 0;
    for (VertexSet part : parts) {
        if (!is_subset(part, ground_.full_set())) throw std::invalid_argument("part outside the vertex set");
        if (part & seen) throw std::invalid_argument("colour parts must be pairwise disjoint");
        seen |= part;
    }
    if (value.sign() == 0) return;
    table_[parts] += value;
}

bool is_colouring(const RColouring& c, const Weight& g) {
    if (!(c.ground() == g)) throw std::invalid_argument("colouring belongs to a different weight");
    std::map<VertexSet, Rational> cover;
    for (const auto& [parts, value] : c.entries()) {
        VertexSet u = 0;
        for (VertexSet part : parts) u |= part;
        cover[u] += value;
    }
    const VertexSet full = g.full_set();
    for (std::uint64_t a = 0; a <= full; ++a) {
        const auto subset = static_cast<VertexSet>(a);
        auto it = cover.find(subset);
        const Rational covered = it == cover.end() ? Rational{} : it->second;
        if (!(covered > g.get(subset))) return false;
    }
    return true;
}

Weight colour_subweight(const RColouring& c, int colour) {
    if (colour < 0 || colour >= c.r()) throw std::out_of_range("colour index outside [0, r)");
    std::map<VertexSet, Rational> sums;
    for (const auto& [parts, value] : c.entries()) sums[parts[static_cast<std::size_t>(colour)]] += value;
    Weight out(c.ground().vertex_count());
    for (const auto& [subset, value] : sums) out.set(subset, value);
    return out;
}

BipGraph dilate(const Weight& f, int n) {
    if (n < 1) throw std::invalid_argument("dilate needs n >= 1");
    if (f.vertex_count() > 8) throw InstanceTooLarge("dilate supports at most 8 weight vertices");
    BipGraph g;
    g.left_count = f.vertex_count();
    for (const auto& [subset, value] : f.support()) {
        const BigInt copies = (value * Rational(n)).ceil();
        if (!copies.fits_slong_p() || copies > 1000000) throw InstanceTooLarge("dilatation too large");
        for (long k = 0; k < copies.get_si(); ++k) g.right_neighborhoods.push_back(subset);
    }
    g.right_count = static_cast<int>(g.right_neighborhoods.size());
    return g;
}

}  // namespace sizeramsey
