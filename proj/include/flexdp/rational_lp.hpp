#pragma once

#include "flexdp/rational.hpp"

#include <optional>
#include <vector>

namespace flexdp {

enum class Relation { less_equal, equal, greater_equal };

struct LpConstraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::less_equal;
    Rational rhs;
};

/// maximize objective . x subject to the rows, x_j >= lower_bounds[j]
/// (nullopt = free variable). Missing lower bounds default to 0.
struct LinearProgram {
    int variable_count = 0;
    std::vector<Rational> objective;
    std::vector<LpConstraint> constraints;
    std::vector<std::optional<Rational>> lower_bounds;

    explicit LinearProgram(int variables = 0);

    /// Appends a row; throws InputError if its width differs from variable_count.
    void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

/// Dual multipliers follow the maximization convention: y >= 0 on <= rows,
/// y <= 0 on >= rows, free on = rows, and A^T y >= c (with equality on free
/// variables). Dual objective is y.b + sum_j l_j (c_j - (A^T y)_j).
struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> primal;
    Rational objective_value;
    std::vector<Rational> dual;
};

/// Two-phase exact simplex with Bland's rule. Every optimal outcome is checked
/// for primal feasibility, dual feasibility and strong duality; a failed check
/// throws std::logic_error.
LpOutcome solve(const LinearProgram & lp);

/// Exact verification used by solve and by tests. Returns an empty string on
/// success, otherwise a description of the first failure.
std::string check_certificate(const LinearProgram & lp, const LpOutcome & outcome);

} // namespace flexdp
