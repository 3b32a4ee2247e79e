#include "flexdp/rational_lp.hpp"

#include "flexdp/errors.hpp"

#include <stdexcept>
#include <string>

namespace flexdp {

LinearProgram::LinearProgram(int variables)
    : variable_count(variables), objective(static_cast<std::size_t>(variables)),
      lower_bounds(static_cast<std::size_t>(variables), Rational(0))
{
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs)
{
    if (static_cast<int>(coefficients.size()) != variable_count)
        throw InputError("constraint width does not match the variable count");
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t columns)
        : rows_(rows), columns_(columns), cells_(rows, std::vector<Rational>(columns + 1)), basis_(rows)
    {
    }

    Rational & at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    Rational & rhs(std::size_t r) { return cells_[r][columns_]; }
    std::size_t & basic(std::size_t r) { return basis_[r]; }
    std::size_t rows() const { return rows_; }
    std::size_t columns() const { return columns_; }

    void pivot(std::size_t p, std::size_t j, std::vector<Rational> & reduced)
    {
        auto & prow = cells_[p];
        const Rational inv = 1 / prow[j];
        std::vector<std::size_t> nonzero;
        for (std::size_t k = 0; k <= columns_; ++k)
            if (sgn(prow[k]) != 0) {
                prow[k] *= inv;
                nonzero.push_back(k);
            }
        Rational factor;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == p || sgn(cells_[r][j]) == 0)
                continue;
            factor = cells_[r][j];
            for (std::size_t k : nonzero)
                cells_[r][k] -= factor * prow[k];
        }
        if (sgn(reduced[j]) != 0) {
            factor = reduced[j];
            for (std::size_t k : nonzero)
                if (k < columns_)
                    reduced[k] -= factor * prow[k];
        }
        basis_[p] = j;
    }

    std::vector<Rational> reduced_costs(const std::vector<Rational> & cost)
    {
        std::vector<Rational> d(cost.begin(), cost.end());
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational & cb = cost[basis_[r]];
            if (sgn(cb) == 0)
                continue;
            for (std::size_t k = 0; k < columns_; ++k)
                if (sgn(cells_[r][k]) != 0)
                    d[k] -= cb * cells_[r][k];
        }
        return d;
    }

    /// Maximizes cost over the current basis. Returns false if unbounded.
    bool optimize(const std::vector<Rational> & cost, std::size_t allowed_columns)
    {
        auto d = reduced_costs(cost);
        while (true) {
            std::size_t entering = columns_;
            for (std::size_t k = 0; k < allowed_columns; ++k)
                if (sgn(d[k]) > 0) {
                    entering = k;
                    break;
                }
            if (entering == columns_)
                return true;

            std::size_t leaving = rows_;
            Rational best, ratio;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (sgn(cells_[r][entering]) <= 0)
                    continue;
                ratio = cells_[r][columns_] / cells_[r][entering];
                if (leaving == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best = ratio;
                }
            }
            if (leaving == rows_)
                return false;
            pivot(leaving, entering, d);
        }
    }

private:
    std::size_t rows_, columns_;
    std::vector<std::vector<Rational>> cells_;
    std::vector<std::size_t> basis_;
};

Rational lower_of(const LinearProgram & lp, std::size_t j)
{
    if (j < lp.lower_bounds.size())
        return lp.lower_bounds[j] ? *lp.lower_bounds[j] : Rational(0);
    return 0;
}

bool is_free(const LinearProgram & lp, std::size_t j)
{
    return j < lp.lower_bounds.size() && !lp.lower_bounds[j];
}

} // namespace

std::string check_certificate(const LinearProgram & lp, const LpOutcome & outcome)
{
    if (outcome.status != LpStatus::optimal)
        return {};
    const std::size_t n = static_cast<std::size_t>(lp.variable_count);
    const auto & x = outcome.primal;
    const auto & y = outcome.dual;
    if (x.size() != n || y.size() != lp.constraints.size())
        return "certificate has the wrong shape";

    for (std::size_t j = 0; j < n; ++j)
        if (!is_free(lp, j) && x[j] < lower_of(lp, j))
            return "primal violates a lower bound";

    Rational dual_objective = 0;
    std::vector<Rational> aty(n);
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        const auto & row = lp.constraints[i];
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(row.coefficients[j]) != 0) {
                lhs += row.coefficients[j] * x[j];
                aty[j] += row.coefficients[j] * y[i];
            }
        switch (row.relation) {
        case Relation::less_equal:
            if (lhs > row.rhs)
                return "primal violates row " + std::to_string(i);
            if (sgn(y[i]) < 0)
                return "dual sign wrong on row " + std::to_string(i);
            break;
        case Relation::greater_equal:
            if (lhs < row.rhs)
                return "primal violates row " + std::to_string(i);
            if (sgn(y[i]) > 0)
                return "dual sign wrong on row " + std::to_string(i);
            break;
        case Relation::equal:
            if (lhs != row.rhs)
                return "primal violates row " + std::to_string(i);
            break;
        }
        dual_objective += y[i] * row.rhs;
    }

    Rational primal_objective = 0;
    for (std::size_t j = 0; j < n; ++j) {
        primal_objective += lp.objective[j] * x[j];
        Rational slack = lp.objective[j] - aty[j];
        if (is_free(lp, j)) {
            if (sgn(slack) != 0)
                return "dual infeasible on free variable " + std::to_string(j);
        }
        else {
            if (sgn(slack) > 0)
                return "dual infeasible on variable " + std::to_string(j);
            dual_objective += lower_of(lp, j) * slack;
        }
    }
    if (primal_objective != outcome.objective_value)
        return "reported objective differs from c.x";
    if (primal_objective != dual_objective)
        return "strong duality fails";
    return {};
}

LpOutcome solve(const LinearProgram & lp)
{
    const std::size_t n = static_cast<std::size_t>(lp.variable_count);
    const std::size_t m = lp.constraints.size();
    if (lp.objective.size() != n)
        throw InputError("objective width does not match the variable count");
    if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n)
        throw InputError("lower bound count does not match the variable count");

    // Structural columns: x_j - l_j, or x+ and x- for free variables.
    std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
    std::size_t structural = 0;
    for (std::size_t j = 0; j < n; ++j) {
        pos_col[j] = structural++;
        if (is_free(lp, j))
            neg_col[j] = structural++;
    }
    std::size_t slack_count = 0;
    for (const auto & row : lp.constraints) {
        if (static_cast<int>(row.coefficients.size()) != lp.variable_count)
            throw InputError("constraint width does not match the variable count");
        if (row.relation != Relation::equal)
            ++slack_count;
    }
    const std::size_t first_artificial = structural + slack_count;
    const std::size_t columns = first_artificial + m;

    Tableau t(m, columns);
    std::vector<bool> negated(m, false);
    std::size_t slack = structural;
    for (std::size_t i = 0; i < m; ++i) {
        const auto & row = lp.constraints[i];
        Rational b = row.rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(row.coefficients[j]) == 0)
                continue;
            t.at(i, pos_col[j]) = row.coefficients[j];
            if (neg_col[j] != SIZE_MAX)
                t.at(i, neg_col[j]) = -row.coefficients[j];
            else
                b -= row.coefficients[j] * lower_of(lp, j);
        }
        if (row.relation == Relation::less_equal)
            t.at(i, slack++) = 1;
        else if (row.relation == Relation::greater_equal)
            t.at(i, slack++) = -1;
        t.rhs(i) = b;
        if (sgn(b) < 0) {
            negated[i] = true;
            for (std::size_t k = 0; k < first_artificial; ++k)
                t.at(i, k) = -t.at(i, k);
            t.rhs(i) = -b;
        }
        t.at(i, first_artificial + i) = 1;
        t.basic(i) = first_artificial + i;
    }

    // Phase 1: drive the artificial sum to zero.
    std::vector<Rational> cost(columns);
    for (std::size_t k = first_artificial; k < columns; ++k)
        cost[k] = -1;
    t.optimize(cost, columns);
    for (std::size_t r = 0; r < m; ++r)
        if (t.basic(r) >= first_artificial && sgn(t.rhs(r)) != 0)
            return LpOutcome{LpStatus::infeasible, {}, 0, {}};

    std::vector<Rational> unused(columns);
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basic(r) < first_artificial)
            continue;
        for (std::size_t k = 0; k < first_artificial; ++k)
            if (sgn(t.at(r, k)) != 0) {
                t.pivot(r, k, unused);
                break;
            }
        // A row with no structural or slack entry is redundant; its artificial
        // stays basic at zero and never moves.
    }

    // Phase 2 over structural and slack columns only.
    std::fill(cost.begin(), cost.end(), Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        cost[pos_col[j]] = lp.objective[j];
        if (neg_col[j] != SIZE_MAX)
            cost[neg_col[j]] = -lp.objective[j];
    }
    if (!t.optimize(cost, first_artificial))
        return LpOutcome{LpStatus::unbounded, {}, 0, {}};

    std::vector<Rational> value(columns);
    for (std::size_t r = 0; r < m; ++r)
        value[t.basic(r)] = t.rhs(r);

    LpOutcome out;
    out.status = LpStatus::optimal;
    out.primal.resize(n);
    out.objective_value = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (neg_col[j] != SIZE_MAX)
            out.primal[j] = value[pos_col[j]] - value[neg_col[j]];
        else
            out.primal[j] = value[pos_col[j]] + lower_of(lp, j);
        out.objective_value += lp.objective[j] * out.primal[j];
    }
    out.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational y = 0;
        for (std::size_t r = 0; r < m; ++r)
            if (sgn(cost[t.basic(r)]) != 0 && sgn(t.at(r, first_artificial + i)) != 0)
                y += cost[t.basic(r)] * t.at(r, first_artificial + i);
        out.dual[i] = negated[i] ? -y : y;
    }

    if (auto problem = check_certificate(lp, out); !problem.empty())
        throw std::logic_error("simplex certificate check failed: " + problem);
    return out;
}

} // namespace flexdp
