#pragma once

#include <cstddef>
#include <vector>

#include "sizeramsey/exactnum.hpp"

namespace sizeramsey {

/// max objective . x  subject to  A x <= rhs,  x >= 0, over the rationals.
class LpProblem {
public:
    /// Throws std::invalid_argument if a row length differs from the
    /// objective length or rhs length differs from the row count.
    LpProblem(std::vector<Rational> objective, std::vector<std::vector<Rational>> constraints,
              std::vector<Rational> rhs);

    std::size_t variable_count() const { return objective_.size(); }
    std::size_t constraint_count() const { return rows_.size(); }

    const std::vector<Rational>& objective() const { return objective_; }
    const std::vector<std::vector<Rational>>& constraints() const { return rows_; }
    const std::vector<Rational>& rhs() const { return rhs_; }

    /// Scales the right-hand side by `factor`.
    LpProblem with_scaled_rhs(const Rational& factor) const;

private:
    std::vector<Rational> objective_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Rational value;                  // meaningful iff optimal
    std::vector<Rational> solution;  // empty unless optimal
    std::size_t pivots = 0;
};

/**
 * Two-phase dense tableau simplex with Bland's least-index rule.
 *
 * Rows with negative rhs get an artificial variable and are made feasible in
 * phase I. Every optimal result is re-checked against the original problem
 * before it is returned; a failed check throws std::logic_error.
 */
LpOutcome solve_lp(const LpProblem& lp);

/// True iff point >= 0 and A point <= rhs, exactly. Throws on length mismatch.
bool check_feasible(const LpProblem& lp, const std::vector<Rational>& point);

/// objective . point
Rational objective_value(const LpProblem& lp, const std::vector<Rational>& point);

}  // namespace sizeramsey
