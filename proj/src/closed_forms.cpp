#include "sizeramsey/closed_forms.hpp"

#include <stdexcept>

namespace sizeramsey {

namespace {

int frozen(const std::vector<int>& fixed) {
    int total = 0;
    for (int m : fixed) {
        if (m < 1) throw std::invalid_argument("fixed graph parameter must be >= 1");
        total += m - 1;
    }
    return total;
}

// Shared scan: min over x > sigma of value(x), cut off at the first x with
// x * tmin >= best.
template <typename Candidate>
ClosedFormResult scan(int sigma, const Rational& tmin, Candidate candidate) {
    ClosedFormResult out;
    bool have_best = false;
    for (int x = sigma + 1;; ++x) {
        if (have_best && Rational(x) * tmin >= out.value) return out;
        out.scanned_upper = x;
        auto value = candidate(x);
        if (!value) continue;
        if (!have_best || *value < out.value) {
            out.value = *value;
            out.argmin = x;
            have_best = true;
        }
    }
}

}  // namespace

ClosedFormResult limit_q1(int s1, const std::vector<int>& fixed) {
    if (s1 < 1) throw std::invalid_argument("s1 must be >= 1");
    const int sig = (s1 - 1) + frozen(fixed);
    const int shift = sig - s1 + 1;
    return scan(sig, Rational(1), [&](int s) -> std::optional<Rational> {
        const BigInt den = falling_factorial(s - shift, s1);
        if (den == 0) return std::nullopt;
        return Rational(s) * Rational(falling_factorial(s, s1), den);
    });
}

Rational limit_q1_star(const std::vector<int>& fixed) {
    if (fixed.empty()) throw std::invalid_argument("limit_q1_star needs at least one fixed graph");
    long total = 1 - (static_cast<long>(fixed.size()) + 1);
    bool nontrivial = false;
    for (int m : fixed) {
        if (m < 1) throw std::invalid_argument("fixed graph parameter must be >= 1");
        nontrivial = nontrivial || m >= 2;
        total += m;
    }
    if (!nontrivial) throw std::invalid_argument("limit_q1_star needs some fixed parameter >= 2");
    return Rational(4 * total);
}

std::optional<Rational> q2_density(int a, int s, const std::vector<int>& fixed) {
    const int reduced = a - frozen(fixed);
    if (reduced < 0) return std::nullopt;
    const BigInt den = binom(reduced / 2, s) + binom(reduced - reduced / 2, s);
    if (den == 0) return std::nullopt;
    return Rational(2 * binom(a, s), den);
}

ClosedFormResult limit_q2(int s, const std::vector<int>& fixed) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    const int sig = 2 * (s - 1) + frozen(fixed);
    return scan(sig, Rational(2), [&](int a) -> std::optional<Rational> {
        auto f = q2_density(a, s, fixed);
        if (!f) return std::nullopt;
        return Rational(a) * *f;
    });
}

}  // namespace sizeramsey
