#include "sizeramsey/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace sizeramsey {

LpProblem::LpProblem(std::vector<Rational> objective, std::vector<std::vector<Rational>> constraints,
                     std::vector<Rational> rhs)
    : objective_(std::move(objective)), rows_(std::move(constraints)), rhs_(std::move(rhs)) {
    if (rhs_.size() != rows_.size()) throw std::invalid_argument("LpProblem: rhs length != row count");
    for (const auto& row : rows_) {
        if (row.size() != objective_.size()) {
            throw std::invalid_argument("LpProblem: row length != variable count");
        }
    }
}

LpProblem LpProblem::with_scaled_rhs(const Rational& factor) const {
    auto rhs = rhs_;
    for (auto& b : rhs) b *= factor;
    return LpProblem(objective_, rows_, std::move(rhs));
}

namespace {

// Dense tableau. Column layout: originals, slacks, artificials, then rhs.
// The objective row holds reduced costs of "z + sum cost_j x_j = value".
class Tableau {
public:
    explicit Tableau(const LpProblem& lp)
        : originals_(lp.variable_count()), rows_count_(lp.constraint_count()) {
        std::size_t artificials = 0;
        for (const auto& b : lp.rhs()) {
            if (b.sign() < 0) ++artificials;
        }
        first_artificial_ = originals_ + rows_count_;
        width_ = first_artificial_ + artificials;
        rows_.assign(rows_count_, std::vector<Rational>(width_ + 1));
        basis_.resize(rows_count_);

        std::size_t next_artificial = first_artificial_;
        for (std::size_t i = 0; i < rows_count_; ++i) {
            auto& row = rows_[i];
            const bool negate = lp.rhs()[i].sign() < 0;
            for (std::size_t j = 0; j < originals_; ++j) {
                row[j] = negate ? -lp.constraints()[i][j] : lp.constraints()[i][j];
            }
            row[originals_ + i] = negate ? -1 : 1;
            row[width_] = negate ? -lp.rhs()[i] : lp.rhs()[i];
            if (negate) {
                row[next_artificial] = 1;
                basis_[i] = next_artificial++;
            } else {
                basis_[i] = originals_ + i;
            }
        }
    }

    bool has_artificials() const { return width_ > first_artificial_; }

    // Phase I: maximize minus the sum of artificials. Returns false if the
    // original problem is infeasible.
    bool phase_one() {
        cost_.assign(width_ + 1, Rational{});
        for (std::size_t j = first_artificial_; j < width_; ++j) cost_[j] = 1;
        canonicalize_cost();
        run(width_);
        if (cost_[width_].sign() != 0) return false;
        drive_out_artificials();
        return true;
    }

    // Phase II on the original objective; false means unbounded.
    bool phase_two(const LpProblem& lp) {
        cost_.assign(width_ + 1, Rational{});
        for (std::size_t j = 0; j < originals_; ++j) cost_[j] = -lp.objective()[j];
        canonicalize_cost();
        return run(first_artificial_);
    }

    Rational value() const { return cost_[width_]; }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(originals_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < originals_) x[basis_[i]] = rows_[i][width_];
        }
        return x;
    }

    std::size_t pivots() const { return pivots_; }

private:
    void canonicalize_cost() {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational factor = cost_[basis_[i]];
            if (factor.sign() == 0) continue;
            for (std::size_t j = 0; j <= width_; ++j) {
                if (rows_[i][j].sign() != 0) cost_[j] -= factor * rows_[i][j];
            }
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        ++pivots_;
        auto& prow = rows_[r];
        const Rational inv = Rational(1) / prow[c];
        for (auto& x : prow) {
            if (x.sign() != 0) x *= inv;
        }
        auto eliminate = [&](std::vector<Rational>& row) {
            const Rational factor = row[c];
            if (factor.sign() == 0) return;
            for (std::size_t j = 0; j <= width_; ++j) {
                if (prow[j].sign() != 0) row[j] -= factor * prow[j];
            }
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != r) eliminate(rows_[i]);
        }
        eliminate(cost_);
        basis_[r] = c;
    }

    // Bland's rule over columns [0, limit). Returns false when unbounded.
    bool run(std::size_t limit) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < limit; ++j) {
                if (cost_[j].sign() < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) return true;
            const std::size_t c = *entering;

            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][c].sign() <= 0) continue;
                Rational ratio = rows_[i][width_] / rows_[i][c];
                if (!leaving || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leaving) return false;
            pivot(*leaving, c);
        }
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            std::optional<std::size_t> column;
            for (std::size_t j = 0; j < first_artificial_; ++j) {
                if (rows_[i][j].sign() != 0) {
                    column = j;
                    break;
                }
            }
            if (column) {
                pivot(i, *column);
                ++i;
            } else {
                // redundant row
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::size_t originals_;
    std::size_t rows_count_;
    std::size_t first_artificial_ = 0;
    std::size_t width_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

}  // namespace

Rational objective_value(const LpProblem& lp, const std::vector<Rational>& point) {
    if (point.size() != lp.variable_count()) throw std::invalid_argument("point length mismatch");
    Rational total;
    for (std::size_t j = 0; j < point.size(); ++j) total += lp.objective()[j] * point[j];
    return total;
}

bool check_feasible(const LpProblem& lp, const std::vector<Rational>& point) {
    if (point.size() != lp.variable_count()) throw std::invalid_argument("point length mismatch");
    for (const auto& x : point) {
        if (x.sign() < 0) return false;
    }
    for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
        Rational lhs;
        const auto& row = lp.constraints()[i];
        for (std::size_t j = 0; j < point.size(); ++j) {
            if (row[j].sign() != 0 && point[j].sign() != 0) lhs += row[j] * point[j];
        }
        if (lhs > lp.rhs()[i]) return false;
    }
    return true;
}

LpOutcome solve_lp(const LpProblem& lp) {
    Tableau tableau(lp);
    LpOutcome outcome;
    if (tableau.has_artificials() && !tableau.phase_one()) {
        outcome.status = LpStatus::infeasible;
        outcome.pivots = tableau.pivots();
        return outcome;
    }
    if (!tableau.phase_two(lp)) {
        outcome.status = LpStatus::unbounded;
        outcome.pivots = tableau.pivots();
        return outcome;
    }
    outcome.status = LpStatus::optimal;
    outcome.solution = tableau.solution();
    outcome.value = tableau.value();
    outcome.pivots = tableau.pivots();
    if (!check_feasible(lp, outcome.solution) || objective_value(lp, outcome.solution) != outcome.value) {
        throw std::logic_error("simplex produced an unsound certificate");
    }
    return outcome;
}

}  // namespace sizeramsey
