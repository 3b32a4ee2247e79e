#include "flexdp/flexibility.hpp"

#include "flexdp/errors.hpp"
#include "flexdp/rational_lp.hpp"

#include <map>

namespace flexdp {

namespace {

void check_inputs(const Multigraph & g, const Cover & cover, const ListAssignment & lists)
{
    require_valid(g, cover);
    if (lists.size() != g.vertex_count())
        throw InputError("list assignment size does not match the graph");
}

/// Coefficient row selecting the colorings with phi(v) = c, padded to `width`.
std::vector<Rational> indicator_row(const std::vector<Coloring> & colorings, Vertex v, int c, std::size_t offset,
                                    std::size_t width)
{
    std::vector<Rational> row(width);
    for (std::size_t k = 0; k < colorings.size(); ++k)
        if (colorings[k][static_cast<std::size_t>(v)] == c)
            row[offset + k] = 1;
    return row;
}

ColoringDistribution support_of(const std::vector<Coloring> & colorings, const std::vector<Rational> & x,
                                std::size_t offset = 0)
{
    ColoringDistribution dist;
    for (std::size_t k = 0; k < colorings.size(); ++k)
        if (sgn(x[offset + k]) > 0)
            dist.entries.push_back({colorings[k], x[offset + k]});
    return dist;
}

/// Feasibility LP over distributions on `colorings` with per-(v,c) bounds.
struct MarginalBound {
    Vertex vertex;
    int color;
    Relation relation;
    Rational value;
};

std::optional<ColoringDistribution> feasible_distribution(const std::vector<Coloring> & colorings,
                                                          const std::vector<MarginalBound> & bounds)
{
    if (colorings.empty())
        return std::nullopt;
    const std::size_t k = colorings.size();
    LinearProgram lp(static_cast<int>(k));
    lp.add_constraint(std::vector<Rational>(k, Rational(1)), Relation::equal, 1);
    for (const auto & b : bounds)
        lp.add_constraint(indicator_row(colorings, b.vertex, b.color, 0, k), b.relation, b.value);
    auto out = solve(lp);
    if (out.status != LpStatus::optimal)
        return std::nullopt;
    return support_of(colorings, out.primal);
}

} // namespace

FlexReport epsilon_star(const Multigraph & g, const Cover & cover, const ListAssignment & lists)
{
    check_inputs(g, cover, lists);
    const auto colorings = enumerate_colorings(g, cover, lists);
    FlexReport report;
    report.epsilon_star = 0;
    if (colorings.empty())
        return report;
    report.colorable = true;

    const std::size_t k = colorings.size();
    const std::size_t eps = k;
    LinearProgram lp(static_cast<int>(k + 1));
    lp.objective[eps] = 1;
    std::vector<std::pair<Vertex, int>> listed;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (int c = 0; c < 3; ++c)
            if (lists.contains(v, c)) {
                auto row = indicator_row(colorings, v, c, 0, k + 1);
                row[eps] = -1;
                lp.add_constraint(std::move(row), Relation::greater_equal, 0);
                listed.emplace_back(v, c);
            }
    std::vector<Rational> total(k + 1, Rational(1));
    total[eps] = 0;
    lp.add_constraint(std::move(total), Relation::equal, 1);

    auto out = solve(lp);
    if (out.status != LpStatus::optimal)
        throw std::logic_error("flexibility LP is not optimal");
    report.epsilon_star = out.objective_value;
    report.distribution = support_of(colorings, out.primal);

    // Marginal rows are >= rows, so their multipliers are <= 0; negate and
    // normalize to a request of total weight 1.
    Rational mass = 0;
    for (std::size_t i = 0; i < listed.size(); ++i)
        mass -= out.dual[i];
    if (sgn(mass) > 0)
        for (std::size_t i = 0; i < listed.size(); ++i) {
            Rational w = -out.dual[i] / mass;
            if (sgn(w) != 0)
                report.worst_request.push_back({listed[i].first, listed[i].second, w});
        }
    return report;
}

FlexReport epsilon_star(const Multigraph & g, const Cover & cover)
{
    return epsilon_star(g, cover, ListAssignment::full(g.vertex_count()));
}

std::optional<ColoringDistribution> fractional_packing(const Multigraph & g, const Cover & cover)
{
    const auto lists = ListAssignment::full(g.vertex_count());
    check_inputs(g, cover, lists);
    std::vector<MarginalBound> bounds;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (int c = 0; c < 3; ++c)
            bounds.push_back({v, c, Relation::equal, Rational(1, 3)});
    return feasible_distribution(enumerate_colorings(g, cover, lists), bounds);
}

std::optional<ColoringDistribution> box_distribution(const Multigraph & g, const Cover & cover,
                                                     const ListAssignment & lists, const Rational & lower,
                                                     const Rational & upper, const std::vector<Pin> & pins)
{
    check_inputs(g, cover, lists);
    if (lower > upper)
        throw InputError("box lower bound exceeds upper bound");
    std::map<std::pair<Vertex, int>, Rational> pinned;
    for (const auto & pin : pins) {
        if (!g.has_vertex(pin.vertex) || pin.color < 0 || pin.color > 2 || !lists.contains(pin.vertex, pin.color))
            throw InputError("pin names a colour outside the lists");
        auto [it, inserted] = pinned.emplace(std::make_pair(pin.vertex, pin.color), pin.value);
        if (!inserted && it->second != pin.value)
            throw InputError("colour pinned to two different values");
    }

    std::vector<MarginalBound> bounds;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (int c = 0; c < 3; ++c) {
            if (!lists.contains(v, c))
                continue;
            if (auto it = pinned.find({v, c}); it != pinned.end())
                bounds.push_back({v, c, Relation::equal, it->second});
            else {
                bounds.push_back({v, c, Relation::greater_equal, lower});
                bounds.push_back({v, c, Relation::less_equal, upper});
            }
        }
    return feasible_distribution(enumerate_colorings(g, cover, lists), bounds);
}

std::vector<Pin> basepoint_pins(const PotentialAssignment & rho, const Rational & epsilon)
{
    std::vector<Pin> pins;
    for (Vertex v = 0; v < rho.size(); ++v)
        if (rho.rho(v) == 4)
            for (int c = 0; c < 3; ++c) {
                Rational value = c == rho.basepoint(v) ? Rational(2 * epsilon) : Rational(Rational(1, 2) - epsilon);
                pins.push_back({v, c, value});
            }
    return pins;
}

FrameworkResult framework_feasible(const Multigraph & g, const PotentialAssignment & rho, const Cover & cover,
                                   const ListDistribution & d, const Rational & epsilon)
{
    require_valid(g, cover);
    const int n = g.vertex_count();
    if (rho.size() != n)
        throw InputError("potential assignment size does not match the graph");
    if (sgn(epsilon) <= 0 || epsilon >= 1)
        throw InputError("epsilon must lie in (0, 1)");

    std::vector<ListOutcome> outcomes = d.outcomes;
    if (outcomes.empty()) {
        for (Vertex v = 0; v < n; ++v)
            if (rho.rho(v) == 3)
                throw InputError("an empty list distribution needs rho without 3-vertices");
        outcomes.push_back({ListAssignment::full(n), Rational(1)});
    }
    Rational total = 0;
    for (const auto & o : outcomes) {
        if (sgn(o.probability) < 0)
            throw InputError("negative probability in list distribution");
        if (!o.lists.conforms_to(rho))
            throw InputError("list distribution outcome does not match the list sizes of rho");
        total += o.probability;
    }
    if (total != 1)
        throw InputError("list distribution probabilities do not sum to 1");

    FrameworkResult result;
    for (Vertex v = 0; v < n; ++v) {
        if (rho.rho(v) != 3)
            continue;
        for (int c = 0; c < 3; ++c) {
            Rational forbidden = 0;
            for (const auto & o : outcomes)
                if (!o.lists.contains(v, c))
                    forbidden += o.probability;
            if (forbidden < epsilon) {
                result.status = FrameworkStatus::not_admissible;
                result.inadmissible_at = std::make_pair(v, c);
                return result;
            }
        }
    }

    std::vector<std::vector<Coloring>> colorings;
    std::vector<std::size_t> offset;
    std::size_t width = 0;
    for (const auto & o : outcomes) {
        colorings.push_back(enumerate_colorings(g, cover, o.lists));
        offset.push_back(width);
        width += colorings.back().size();
        if (colorings.back().empty() && sgn(o.probability) > 0) {
            result.status = FrameworkStatus::infeasible;
            return result;
        }
    }

    LinearProgram lp(static_cast<int>(width));
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        std::vector<Rational> row(width);
        for (std::size_t k = 0; k < colorings[i].size(); ++k)
            row[offset[i] + k] = 1;
        lp.add_constraint(std::move(row), Relation::equal, outcomes[i].probability);
    }
    for (Vertex v = 0; v < n; ++v)
        for (int c = 0; c < 3; ++c) {
            std::vector<Rational> row(width);
            for (std::size_t i = 0; i < outcomes.size(); ++i)
                for (std::size_t k = 0; k < colorings[i].size(); ++k)
                    if (colorings[i][k][static_cast<std::size_t>(v)] == c)
                        row[offset[i] + k] = 1;
            if (rho.rho(v) == 4)
                lp.add_constraint(row, Relation::equal,
                                  c == rho.basepoint(v) ? Rational(2 * epsilon) : Rational(Rational(1, 2) - epsilon));
            lp.add_constraint(std::move(row), Relation::greater_equal, epsilon);
        }

    auto out = solve(lp);
    if (out.status != LpStatus::optimal) {
        result.status = FrameworkStatus::infeasible;
        return result;
    }
    result.status = FrameworkStatus::feasible;
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        result.per_outcome.push_back(support_of(colorings[i], out.primal, offset[i]));
    return result;
}

} // namespace flexdp
