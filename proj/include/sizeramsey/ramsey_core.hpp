#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sizeramsey/exactnum.hpp"
#include "sizeramsey/simplex.hpp"

namespace sizeramsey {

/// K_{s, t n}: a forbidden graph whose larger side dilates with n.
struct DilatingGraph {
    int s = 1;
    Rational t = 1;

    friend bool operator==(const DilatingGraph&, const DilatingGraph&) = default;
};

/**
 * The forbidden family (K_{s_1,t_1 n}, ..., K_{s_q,t_q n}, K_{s_{q+1},t_{q+1}}, ..., K_{s_r,t_r}).
 *
 * Non-dilating graphs enter only through m_i = min(s_i, t_i).
 */
class ProblemSpec {
public:
    /// Throws std::invalid_argument unless q >= 1, every s_i >= 1, every t_i > 0 and every m_i >= 1.
    ProblemSpec(std::vector<DilatingGraph> dilating, std::vector<int> fixed = {});

    /// Reduces a fixed K_{s,t} to min(s, t).
    static int fixed_from_pair(int s, int t);

    int q() const { return static_cast<int>(dilating_.size()); }
    int r() const { return q() + static_cast<int>(fixed_.size()); }
    const std::vector<DilatingGraph>& dilating() const { return dilating_; }
    const std::vector<int>& fixed() const { return fixed_; }

    /// sum over fixed graphs of (m_i - 1): the frozen part of every composition.
    int frozen_sum() const;

    /// Same family with every t_i multiplied by `factor` (> 0).
    ProblemSpec scaled(const Rational& factor) const;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;

private:
    std::vector<DilatingGraph> dilating_;
    std::vector<int> fixed_;
};

/// sum_{i <= r} (s_i - 1), with s_i read as m_i for the fixed graphs.
int sigma(const ProblemSpec& spec);

/// sum of t_i over the dilating graphs; every arrowing weight has minimum degree at least this.
Rational t_min(const ProblemSpec& spec);

struct ComputeOptions {
    /// build_lp refuses L_s with more columns than this (InstanceTooLarge).
    std::size_t max_columns = 200000;
    /// Number of L_s solved concurrently; the result does not depend on it.
    unsigned jobs = 1;
};

/// L_s: max sum w_a  s.t.  sum_a w_a C(a_i, s_i) <= t_i C(s, s_i) for each dilating i.
/// Columns follow pi_s order. Throws std::invalid_argument when s <= sigma.
LpProblem build_lp(const ProblemSpec& spec, int s, const ComputeOptions& options = {});

/// Least t for which k_{s,t} arrows the family: the optimum of L_s.
Rational t_prime(const ProblemSpec& spec, int s, const ComputeOptions& options = {});

struct TableRow {
    int s = 0;
    Rational t_prime;
    Rational candidate;  // s * t_prime

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct LimitResult {
    Rational value;
    int argmin_s = 0;
    Rational t_prime_at_argmin;
    std::vector<TableRow> table;
    int terminated_at = 0;
};

/**
 * lim r^(F_n)/n as min over s > sigma of s * t'_s.
 *
 * Scans s = sigma+1, sigma+2, ... and stops at the first s (after at least one
 * evaluation) with s * t_min >= best; such s and everything above cannot
 * beat best because t'_s >= t_min. Ties report the smallest s.
 */
LimitResult compute_limit(const ProblemSpec& spec, const ComputeOptions& options = {});

/// (argmin_s, t'_{argmin_s}): K_{s, t n + O(1)} realizes the limit.
std::pair<int, Rational> witness(const ProblemSpec& spec, const ComputeOptions& options = {});

}  // namespace sizeramsey
