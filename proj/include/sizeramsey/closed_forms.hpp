#pragma once

#include <optional>
#include <vector>

#include "sizeramsey/exactnum.hpp"

namespace sizeramsey {

struct ClosedFormResult {
    Rational value;
    int argmin = 0;
    int scanned_upper = 0;  // last candidate evaluated before the cutoff
};

/// q = 1, t_1 = 1: min over s > sigma of s (s)_{s1} / (s - s')_{s1}, s' = sigma - s1 + 1.
/// `fixed` holds m_2..m_r.
ClosedFormResult limit_q1(int s1, const std::vector<int>& fixed);

/// s_1 = 1, t_1 = 1 specialization: 4 (1 - r + sum m_i).
/// Throws unless some m_i >= 2; with every m_i = 1 the limit is 1.
Rational limit_q1_star(const std::vector<int>& fixed);

/// f(a) = 2 C(a,s) / (C(floor(a'/2), s) + C(ceil(a'/2), s)), a' = a - sum (m_i - 1).
/// Empty when the denominator vanishes.
std::optional<Rational> q2_density(int a, int s, const std::vector<int>& fixed);

/// q = 2, s_1 = s_2 = s, t_1 = t_2 = 1: min over a > sigma of a f(a). `fixed` holds m_3..m_r.
ClosedFormResult limit_q2(int s, const std::vector<int>& fixed);

}  // namespace sizeramsey
