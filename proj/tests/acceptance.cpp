// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "sizeramsey/arrowing.hpp"
#include "sizeramsey/cli.hpp"
#include "sizeramsey/closed_forms.hpp"
#include "sizeramsey/ramsey_core.hpp"
#include "sizeramsey/simplex.hpp"
#include "sizeramsey/weights.hpp"

using namespace sizeramsey;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
    std::string failure;
    void expect(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
    }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Check&)>& body) {
    Check check;
    const auto start = Clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    if (check.failure.empty()) {
        line << "PASS criterion " << number << ": " << title << " (" << elapsed << " s)";
    } else {
        ++failures;
        line << "FAIL criterion " << number << ": " << title << ": " << check.failure << " (" << elapsed << " s)";
    }
    std::cout << line.str() << std::endl;
}

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

template <typename F>
auto timed(double limit, Check& check, const std::string& what, F&& f) {
    const auto start = Clock::now();
    auto value = f();
    const double elapsed = seconds_since(start);
    check.expect(elapsed < limit, what + " took " + std::to_string(elapsed) + " s");
    return value;
}

std::vector<ProblemSpec> grid_specs() {
    std::vector<ProblemSpec> specs;
    for (int s1 : {1, 2, 3}) {
        for (int m : {2, 3}) specs.emplace_back(std::vector<DilatingGraph>{{s1, 1}}, std::vector<int>{m});
    }
    for (int s : {1, 2, 3}) {
        for (const auto& fixed : std::vector<std::vector<int>>{{}, {2}, {3}}) {
            specs.emplace_back(std::vector<DilatingGraph>{{s, 1}, {s, 1}}, fixed);
        }
    }
    return specs;
}

}  // namespace

int main() {
    criterion(1, "K_{2,n} vs K_{2,n} limit is 18 with witness (3, 6)", [](Check& check) {
        const ProblemSpec spec({{2, 1}, {2, 1}});
        const auto result = timed(1.0, check, "compute_limit", [&] { return compute_limit(spec); });
        check.expect(result.value == 18, "value " + result.value.to_string());
        check.expect(result.argmin_s == 3 && result.t_prime_at_argmin == 6, "witness mismatch");
        check.expect(result.table.size() == 6 && result.table.front().s == 3 && result.table.back().s == 8,
                     "table does not cover s = 3..8");
        check.expect(result.terminated_at == 9, "terminated at " + std::to_string(result.terminated_at));
        check.expect(witness(spec) == std::pair{3, Rational(6)}, "witness() mismatch");
    });

    criterion(2, "K_{1,n} vs C4 limit is 4", [](Check& check) {
        const auto result =
            timed(1.0, check, "compute_limit", [] { return compute_limit(ProblemSpec({{1, 1}}, {2})); });
        check.expect(result.value == 4, "value " + result.value.to_string());
    });

    criterion(3, "closed forms agree on the 15-cell grid", [](Check& check) {
        const auto start = Clock::now();
        for (int s1 : {1, 2, 3}) {
            for (int m : {2, 3}) {
                const auto lp = compute_limit(ProblemSpec({{s1, 1}}, {m})).value;
                const auto closed = limit_q1(s1, {m}).value;
                check.expect(lp == closed, "q1 s1=" + std::to_string(s1) + " m=" + std::to_string(m) + ": " +
                                               lp.to_string() + " vs " + closed.to_string());
            }
        }
        for (int s : {1, 2, 3}) {
            for (const auto& fixed : std::vector<std::vector<int>>{{}, {2}, {3}}) {
                const auto lp = compute_limit(ProblemSpec({{s, 1}, {s, 1}}, fixed)).value;
                const auto closed = limit_q2(s, fixed).value;
                check.expect(lp == closed, "q2 s=" + std::to_string(s) + ": " + lp.to_string() + " vs " +
                                               closed.to_string());
            }
        }
        check.expect(seconds_since(start) < 60.0, "grid exceeded 60 s");
    });

    criterion(4, "K_{2,n}, K_{2,n}, C4 limit is 45 at a = 6", [](Check& check) {
        // a f(a) in 64-bit integers for a in (3, 22].
        std::int64_t best_num = 0, best_den = 1;
        int best_a = 0;
        for (int a = 4; a <= 22; ++a) {
            const int reduced = a - 1;
            const std::int64_t num = 2 * a * oracle::pascal(a, 2);
            const std::int64_t den = oracle::pascal(reduced / 2, 2) + oracle::pascal(reduced - reduced / 2, 2);
            if (den == 0) continue;
            if (best_a == 0 || num * best_den < best_num * den) {
                best_num = num;
                best_den = den;
                best_a = a;
            }
        }
        const Rational oracle_value{BigInt(best_num), BigInt(best_den)};
        check.expect(oracle_value == 45 && best_a == 6, "oracle gave " + oracle_value.to_string());
        check.expect(Rational(23) * Rational(2) >= oracle_value, "cutoff does not fire after a = 22");
        const auto result = compute_limit(ProblemSpec({{2, 1}, {2, 1}}, {2}));
        check.expect(result.value == oracle_value, "compute_limit gave " + result.value.to_string());
        check.expect(result.argmin_s == 6, "argmin " + std::to_string(result.argmin_s));
        const auto closed = limit_q2(2, {2});
        check.expect(closed.value == 45 && closed.argmin == 6 && closed.scanned_upper == 22, "closed form mismatch");
    });

    criterion(5, "exhaustive arrowing for K6, K_{3,7}, K_{3,6}", [](Check& check) {
        const Forbidden c4{{2, 2}, {2, 2}};
        const auto k6 = timed(5.0, check, "K6", [&] { return arrows(complete(6), c4, 2); });
        check.expect(k6.arrows, "K6 does not arrow");
        const auto k37 = timed(120.0, check, "K_{3,7}", [&] { return arrows(complete_bipartite(3, 7), c4, 2); });
        check.expect(k37.arrows, "K_{3,7} does not arrow");
        const auto k36 = arrows(complete_bipartite(3, 6), c4, 2);
        check.expect(!k36.arrows && k36.certificate, "K_{3,6} arrows");
        if (k36.certificate) {
            const auto graph = complete_bipartite(3, 6);
            bool clean = true;
            for (int c = 0; c < 2; ++c) {
                EdgeMask mask(graph.edge_count());
                for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = (*k36.certificate)[k] == '1' + c;
                std::vector<std::vector<bool>> adj(9, std::vector<bool>(9, false));
                for (std::size_t k = 0; k < mask.size(); ++k) {
                    if (!mask[k]) continue;
                    auto [u, v] = graph.edges()[k];
                    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
                    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
                }
                clean = clean && !oracle::contains_kst_naive(9, adj, 2, 2);
            }
            check.expect(clean, "certificate has a monochromatic C4");
        }
        const auto t = min_t_arrowing(3, c4, 2, 8);
        check.expect(t == 7, "min_t_arrowing gave " + (t ? std::to_string(*t) : std::string("none")));
    });

    criterion(6, "simplex matches vertex enumeration on random LPs", [](Check& check) {
        std::mt19937 rng(20260101);
        int optimal = 0;
        for (int trial = 0; trial < 150; ++trial) {
            const auto lp = oracle::random_lp(rng, 3, 3, -5, 5);
            const auto got = solve_lp(lp);
            const auto want = oracle::solve_by_vertices(lp);
            check.expect(got.status == want.status, "status mismatch on trial " + std::to_string(trial));
            if (got.status != LpStatus::optimal || want.status != LpStatus::optimal) continue;
            ++optimal;
            check.expect(got.value == want.value, "value mismatch on trial " + std::to_string(trial));
            check.expect(check_feasible(lp, got.solution) && objective_value(lp, got.solution) == got.value,
                         "unsound certificate on trial " + std::to_string(trial));
        }
        check.expect(optimal >= 20, "too few optimal instances: " + std::to_string(optimal));
        for (int s = 3; s <= 8; ++s) {
            const auto lp = build_lp(ProblemSpec({{2, 1}, {2, 1}}), s);
            const auto got = solve_lp(lp);
            check.expect(got.status == LpStatus::optimal && check_feasible(lp, got.solution) &&
                             objective_value(lp, got.solution) == got.value,
                         "L_s certificate failed at s=" + std::to_string(s));
        }
    });

    criterion(7, "scaling t by c scales the limit by c", [](Check& check) {
        const auto specs = grid_specs();
        for (std::size_t index : {std::size_t{0}, std::size_t{3}, std::size_t{6}, std::size_t{10}, std::size_t{13}}) {
            const auto& spec = specs[index];
            const auto base = compute_limit(spec);
            for (const auto& c : {frac(1, 2), Rational(3), frac(7, 5)}) {
                const auto scaled = compute_limit(spec.scaled(c));
                check.expect(scaled.value == c * base.value && scaled.argmin_s == base.argmin_s,
                             "spec " + std::to_string(index) + " with c=" + c.to_string());
            }
        }
    });

    criterion(8, "weight identities and graph_in_weight examples", [](Check& check) {
        std::mt19937 rng(8);
        for (int trial = 0; trial < 100; ++trial) {
            const int v = 1 + trial % 5;
            const auto f = oracle::random_weight(rng, v, 1 + trial % 7, 9, 4);
            Rational total;
            for (int x = 0; x < v; ++x) total += weight_degree(f, x);
            check.expect(total == weight_size(f), "degree sum");
            if (v <= 4) check.expect(weight_in_weight(f, f), "reflexivity");
        }
        for (int trial = 0; trial < 60; ++trial) {
            const int v = 1 + trial % 4;
            const int r = 1 + trial % 3;
            const auto g = oracle::random_weight(rng, v, 1 + trial % 5, 5, 3);
            const auto c = oracle::random_colouring(rng, g, r);
            check.expect(is_colouring(c, g), "generated colouring invalid");
            for (int x = 0; x < v; ++x) {
                Rational sum;
                for (int i = 0; i < r; ++i) sum += weight_degree(colour_subweight(c, i), x);
                check.expect(sum > weight_degree(g, x), "colour subweight degree inequality");
            }
        }
        const auto k21 = k_weight(2, 1);
        check.expect(graph_in_weight(complete_bip_graph(2, 2), k21), "K_{2,2} in k_{2,1}");
        check.expect(graph_in_weight(complete_bip_graph(3, 1), k21), "K_{3,1} in k_{2,1}");
        check.expect(!graph_in_weight(complete_bip_graph(3, 3), k21), "K_{3,3} not in k_{2,1}");
    });

    criterion(9, "CLI compute prints 18 and JSON carries the witness", [](Check& check) {
        const auto spec = cli::parse_spec_file("2 2\n2 1\n2 1\n");
        std::ostringstream text, json, err;
        check.expect(cli::cmd_compute(spec, cli::OutputFormat::text, false, {}, text, err) == cli::exit_ok,
                     "text exit code");
        check.expect(text.str() == "18\n", "text output '" + text.str() + "'");
        check.expect(cli::cmd_compute(spec, cli::OutputFormat::json, false, {}, json, err) == cli::exit_ok,
                     "json exit code");
        const auto doc = nlohmann::json::parse(json.str());
        check.expect(doc.at("argmin_s") == 3, "argmin_s");
        check.expect(doc.at("t_prime") == "6", "t_prime");
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures;
}
