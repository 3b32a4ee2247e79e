#pragma once

#include "flexdp/cover.hpp"
#include "flexdp/multigraph.hpp"
#include "flexdp/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace flexdp {

/// Runs body(i) for i in [0, count) on `jobs` threads. Callers write results by
/// index, so the outcome never depends on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> & body);

struct SearchOptions {
    /// Cap on cover classes evaluated per graph.
    std::uint64_t budget = 1'000'000;
    int jobs = 1;
    bool keep_per_class = false;
};

struct ClassValue {
    Cover cover;
    Rational epsilon;
};

struct WorstCoverReport {
    Rational epsilon_min;
    Cover witness_cover;
    std::vector<ClassValue> per_class_values;
    /// False when the budget cut the enumeration short; epsilon_min is then
    /// only an upper bound on the true minimum.
    bool complete = true;
    std::uint64_t classes_evaluated = 0;
    std::uint64_t classes_total = 0;
};

/// Minimum of epsilon_star over enumerate_covers(g) with full lists. The witness
/// is the first class attaining the minimum in enumeration order. Stops early at
/// zero unless per-class values are requested. Throws InputError on a
/// disconnected graph.
WorstCoverReport min_epsilon_over_covers(const Multigraph & g, const SearchOptions & options = {});

/// Minimum over vertex permutations of the upper-triangle multiplicity string,
/// prefixed with "n:". Isomorphic graphs share a code. Practical up to ~8 vertices.
std::string canonical_code(const Multigraph & g);

/// Connected multigraphs on exactly n vertices with multiplicities <= max_mult,
/// one per isomorphism class, sorted by canonical code.
std::vector<Multigraph> connected_multigraphs(int n, int max_mult);

enum class CheckStatus { pass, flagged, counterexample, skipped };
std::string_view status_name(CheckStatus status);

struct GraphCheck {
    std::string code;
    Multigraph graph;
    Rational mad;
    bool has_i_subgraph = false;
    Rational epsilon_min;
    std::string witness_hash;
    CheckStatus status = CheckStatus::pass;
};

struct TheoremCheckOptions {
    int min_vertices = 1;
    int max_vertices = 3;
    int max_multiplicity = 2;
    std::uint64_t budget = 1'000'000;
    int jobs = 1;
    int desk_cap = 5;
};

struct TheoremCheckReport {
    std::vector<GraphCheck> graphs; ///< mad < 3 only, sorted by canonical code
    std::size_t enumerated = 0;     ///< connected graphs before the mad filter
    std::size_t passed = 0, flagged = 0, counterexamples = 0, skipped = 0;

    bool ok() const { return counterexamples == 0 && skipped == 0; }
};

/// For each connected graph in range with mad < 3: flagged if it contains an
/// I-subgraph, otherwise pass when the minimum over covers is >= 1/5 and
/// counterexample when below. Budget overruns are reported as skipped.
/// Throws InputError when max_vertices exceeds desk_cap or max_multiplicity > 2.
TheoremCheckReport theorem_check(const TheoremCheckOptions & options);

/// Tab-separated: code, mad, I-flag, epsilon_min, witness cover hash, status.
std::string theorem_check_tsv(const TheoremCheckReport & report);

enum class Criticality { critical, flexible, non_minimal };
std::string_view criticality_name(Criticality verdict);

/// Flexibility of (G, rho) at eps with the empty list distribution, over every
/// cover class of every component. Throws BudgetExceeded if a component has more
/// than `budget` cover classes.
bool flexible_at(const Multigraph & g, const PotentialAssignment & rho, const Rational & epsilon,
                 std::uint64_t budget = 1'000'000);

/// flexible if G passes; critical if G fails but every single-edge and
/// single-vertex deletion passes; non-minimal otherwise.
Criticality criticality_check(const Multigraph & g, const PotentialAssignment & rho, const Rational & epsilon,
                              std::uint64_t budget = 1'000'000);

/// Nonempty subsets S with potential(S) <= |E(S, V \ S)|, ordered by size then
/// lexicographically. Throws InputError above 20 vertices.
std::vector<std::vector<Vertex>> gap_audit(const Multigraph & g, const PotentialAssignment & rho);

} // namespace flexdp
