#pragma once

#include "flexdp/coloring.hpp"
#include "flexdp/cover.hpp"
#include "flexdp/multigraph.hpp"
#include "flexdp/rational.hpp"

#include <optional>
#include <vector>

namespace flexdp {

struct RequestWeight {
    Vertex vertex = 0;
    int color = 0;
    Rational weight;
};

/// Optimal flexibility of one (G, H, L') instance.
///  - every marginal of `distribution` is at least epsilon_star;
///  - `worst_request` is a weighted request with total weight 1 such that
///    sum_v w(v, phi(v)) <= epsilon_star for every coloring phi, with equality
///    on the support of `distribution`.
/// An uncolorable instance has epsilon_star = 0, colorable = false and both
/// lists empty.
struct FlexReport {
    Rational epsilon_star;
    bool colorable = false;
    ColoringDistribution distribution;
    std::vector<RequestWeight> worst_request;
};

/// max eps s.t. every listed (v, c) has marginal >= eps, over all colorings.
/// Throws InputError on an invalid cover or mismatched lists.
FlexReport epsilon_star(const Multigraph & g, const Cover & cover, const ListAssignment & lists);
FlexReport epsilon_star(const Multigraph & g, const Cover & cover);

/// Distribution with every marginal exactly 1/3 over full lists, if one exists.
std::optional<ColoringDistribution> fractional_packing(const Multigraph & g, const Cover & cover);

struct Pin {
    Vertex vertex = 0;
    int color = 0;
    Rational value;
};

/// lower <= marginal <= upper for every listed colour, marginal = value for pinned
/// colours. Throws InputError if lower > upper, a pin names an unlisted colour,
/// or one colour is pinned to two different values.
std::optional<ColoringDistribution> box_distribution(const Multigraph & g, const Cover & cover,
                                                     const ListAssignment & lists, const Rational & lower,
                                                     const Rational & upper, const std::vector<Pin> & pins);

/// Pins for rho = 4 vertices: basepoint at 2 eps, other colours at 1/2 - eps.
std::vector<Pin> basepoint_pins(const PotentialAssignment & rho, const Rational & epsilon);

enum class FrameworkStatus { feasible, infeasible, not_admissible };

struct FrameworkResult {
    FrameworkStatus status = FrameworkStatus::infeasible;
    /// One distribution per outcome of D, weights summing to Pr(outcome).
    std::vector<ColoringDistribution> per_outcome;
    /// For not_admissible: the first (vertex, colour) forbidden with probability < eps.
    std::optional<std::pair<Vertex, int>> inadmissible_at;
};

/// Checks eps-admissibility of D, then looks for a joint distribution on
/// (outcome, coloring) pairs with outcome masses Pr(L_D), every marginal over the
/// full 3-lists >= eps, and rho = 4 marginals pinned to 2 eps at the basepoint and
/// 1/2 - eps elsewhere. An empty D means full lists with probability 1 and needs
/// rho to have no 3-vertices.
/// Throws InputError when eps is outside (0, 1), D does not sum to 1, or an
/// outcome does not match the list sizes required by rho.
FrameworkResult framework_feasible(const Multigraph & g, const PotentialAssignment & rho, const Cover & cover,
                                   const ListDistribution & d, const Rational & epsilon);

} // namespace flexdp
