#include "sizeramsey/ramsey_core.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>

#include "sizeramsey/compositions.hpp"
#include "sizeramsey/errors.hpp"

namespace sizeramsey {

ProblemSpec::ProblemSpec(std::vector<DilatingGraph> dilating, std::vector<int> fixed)
    : dilating_(std::move(dilating)), fixed_(std::move(fixed)) {
    if (dilating_.empty()) throw std::invalid_argument("at least one dilating graph is required");
    for (const auto& g : dilating_) {
        if (g.s < 1) throw std::invalid_argument("dilating s_i must be >= 1");
        if (g.t.sign() <= 0) throw std::invalid_argument("dilating t_i must be > 0");
    }
    for (int m : fixed_) {
        if (m < 1) throw std::invalid_argument("fixed min(s_i, t_i) must be >= 1");
    }
}

int ProblemSpec::fixed_from_pair(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("fixed graph sides must be >= 1");
    return std::min(s, t);
}

int ProblemSpec::frozen_sum() const {
    int total = 0;
    for (int m : fixed_) total += m - 1;
    return total;
}

ProblemSpec ProblemSpec::scaled(const Rational& factor) const {
    if (factor.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
    auto dilating = dilating_;
    for (auto& g : dilating) g.t *= factor;
    return ProblemSpec(std::move(dilating), fixed_);
}

int sigma(const ProblemSpec& spec) {
    int total = spec.frozen_sum();
    for (const auto& g : spec.dilating()) total += g.s - 1;
    return total;
}

Rational t_min(const ProblemSpec& spec) {
    Rational total;
    for (const auto& g : spec.dilating()) total += g.t;
    return total;
}

LpProblem build_lp(const ProblemSpec& spec, int s, const ComputeOptions& options) {
    if (s <= sigma(spec)) {
        throw std::invalid_argument("build_lp: s = " + std::to_string(s) + " does not exceed sigma");
    }
    const int q = spec.q();
    const BigInt columns = binom(s - spec.frozen_sum() + q - 1, q - 1);
    if (columns > BigInt(static_cast<unsigned long>(options.max_columns))) {
        throw InstanceTooLarge("L_" + std::to_string(s) + " would have " + columns.get_str() +
                               " columns (cap " + std::to_string(options.max_columns) + ")");
    }

    const auto index_set = pi_s(spec, s);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(q),
                                            std::vector<Rational>(index_set.size()));
    std::vector<Rational> rhs(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        const auto& g = spec.dilating()[static_cast<std::size_t>(i)];
        rhs[static_cast<std::size_t>(i)] = g.t * Rational(binom(s, g.s));
        for (std::size_t col = 0; col < index_set.size(); ++col) {
            rows[static_cast<std::size_t>(i)][col] =
                Rational(binom(index_set[col].entries[static_cast<std::size_t>(i)], g.s));
        }
    }
    return LpProblem(std::vector<Rational>(index_set.size(), Rational(1)), std::move(rows), std::move(rhs));
}

Rational t_prime(const ProblemSpec& spec, int s, const ComputeOptions& options) {
    const auto outcome = solve_lp(build_lp(spec, s, options));
    // w = 0 is feasible and every column has a positive entry in some row,
    // so anything but an optimum means the LP was built wrongly.
    if (outcome.status != LpStatus::optimal) {
        throw std::logic_error("L_" + std::to_string(s) + " is not bounded-feasible");
    }
    return outcome.value;
}

LimitResult compute_limit(const ProblemSpec& spec, const ComputeOptions& options) {
    const int first = sigma(spec) + 1;
    const Rational tmin = t_min(spec);
    const unsigned block = std::max(1u, options.jobs);

    LimitResult result;
    bool have_best = false;
    for (int start = first;; start += static_cast<int>(block)) {
        // Candidates for a whole block are solved up front; failures surface
        // only if the sequential scan actually reaches that s.
        std::vector<std::future<Rational>> pending;
        if (block > 1) {
            for (unsigned k = 0; k < block; ++k) {
                const int s = start + static_cast<int>(k);
                if (have_best && Rational(s) * tmin >= result.value) break;
                pending.push_back(std::async(std::launch::async,
                                             [&spec, s, &options] { return t_prime(spec, s, options); }));
            }
        }
        for (unsigned k = 0; k < block; ++k) {
            const int s = start + static_cast<int>(k);
            if (have_best && Rational(s) * tmin >= result.value) {
                result.terminated_at = s;
                if (result.value < Rational(first) * tmin) {
                    throw std::logic_error("limit fell below (sigma+1) * t_min");
                }
                return result;
            }
            Rational tp = block > 1 ? pending[k].get() : t_prime(spec, s, options);
            if (tp < tmin) throw std::logic_error("t'_s below t_min at s = " + std::to_string(s));
            Rational candidate = Rational(s) * tp;
            if (!have_best || candidate < result.value) {
                result.value = candidate;
                result.argmin_s = s;
                result.t_prime_at_argmin = tp;
                have_best = true;
            }
            result.table.push_back(TableRow{s, std::move(tp), std::move(candidate)});
        }
    }
}

std::pair<int, Rational> witness(const ProblemSpec& spec, const ComputeOptions& options) {
    auto result = compute_limit(spec, options);
    return {result.argmin_s, result.t_prime_at_argmin};
}

}  // namespace sizeramsey
