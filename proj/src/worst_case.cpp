#include "flexdp/worst_case.hpp"

#include "flexdp/errors.hpp"
#include "flexdp/flexibility.hpp"
#include "flexdp/mad.hpp"
#include "flexdp/structure.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace flexdp {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> & body)
{
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next.store(count);
                }
            }
        });
    for (auto & t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

WorstCoverReport min_epsilon_over_covers(const Multigraph & g, const SearchOptions & options)
{
    WorstCoverReport report;
    report.classes_total = cover_class_count(g);
    const std::size_t batch_size = 1024;
    std::vector<Cover> batch;
    bool have_min = false;
    bool hit_zero = false;

    auto flush = [&] {
        std::vector<Rational> values(batch.size());
        parallel_for(batch.size(), options.jobs,
                     [&](std::size_t i) { values[i] = epsilon_star(g, batch[i]).epsilon_star; });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!have_min || values[i] < report.epsilon_min) {
                report.epsilon_min = values[i];
                report.witness_cover = batch[i];
                have_min = true;
            }
            if (options.keep_per_class)
                report.per_class_values.push_back({batch[i], values[i]});
        }
        report.classes_evaluated += batch.size();
        batch.clear();
        hit_zero = have_min && sgn(report.epsilon_min) == 0;
    };

    enumerate_covers(g, [&](const Cover & cover) {
        if (report.classes_evaluated + batch.size() >= options.budget) {
            report.complete = false;
            return false;
        }
        batch.push_back(cover);
        if (batch.size() == batch_size) {
            flush();
            if (hit_zero && !options.keep_per_class)
                return false;
        }
        return true;
    });
    flush();
    if (!report.complete && report.classes_evaluated == report.classes_total)
        report.complete = true;
    return report;
}

std::string_view status_name(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::flagged:
        return "flagged";
    case CheckStatus::counterexample:
        return "counterexample";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "?";
}

TheoremCheckReport theorem_check(const TheoremCheckOptions & options)
{
    if (options.max_vertices > options.desk_cap)
        throw InputError("max vertices exceeds the desk cap of " + std::to_string(options.desk_cap));
    if (options.max_multiplicity < 1 || options.max_multiplicity > 2)
        throw InputError("max multiplicity must be 1 or 2");
    if (options.min_vertices < 1 || options.min_vertices > options.max_vertices)
        throw InputError("vertex range is empty");

    TheoremCheckReport report;
    std::vector<Multigraph> candidates;
    std::vector<Rational> mads;
    for (int n = options.min_vertices; n <= options.max_vertices; ++n)
        for (auto & g : connected_multigraphs(n, options.max_multiplicity)) {
            ++report.enumerated;
            Rational value = mad(g);
            if (value < 3) {
                candidates.push_back(std::move(g));
                mads.push_back(value);
            }
        }

    std::vector<GraphCheck> checks(candidates.size());
    const Rational threshold(1, 5);
    parallel_for(candidates.size(), options.jobs, [&](std::size_t i) {
        GraphCheck & c = checks[i];
        c.graph = candidates[i];
        c.code = canonical_code(c.graph);
        c.mad = mads[i];
        c.has_i_subgraph = find_i_subgraph(c.graph).has_value();
        auto worst = min_epsilon_over_covers(c.graph, {options.budget, 1, false});
        c.epsilon_min = worst.epsilon_min;
        c.witness_hash = cover_hash(worst.witness_cover);
        if (c.has_i_subgraph)
            c.status = CheckStatus::flagged;
        else if (!worst.complete)
            c.status = CheckStatus::skipped;
        else
            c.status = c.epsilon_min >= threshold ? CheckStatus::pass : CheckStatus::counterexample;
    });
    std::sort(checks.begin(), checks.end(), [](const GraphCheck & a, const GraphCheck & b) {
        return a.code.size() != b.code.size() ? a.code.size() < b.code.size() : a.code < b.code;
    });

    for (const auto & c : checks)
        switch (c.status) {
        case CheckStatus::pass:
            ++report.passed;
            break;
        case CheckStatus::flagged:
            ++report.flagged;
            break;
        case CheckStatus::counterexample:
            ++report.counterexamples;
            break;
        case CheckStatus::skipped:
            ++report.skipped;
            break;
        }
    report.graphs = std::move(checks);
    return report;
}

std::string theorem_check_tsv(const TheoremCheckReport & report)
{
    std::ostringstream out;
    out << "code\tmad\ti_subgraph\tepsilon_min\twitness_cover\tstatus\n";
    for (const auto & c : report.graphs)
        out << c.code << "\t" << to_string(c.mad) << "\t" << (c.has_i_subgraph ? "yes" : "no") << "\t"
            << to_string(c.epsilon_min) << "\t" << c.witness_hash << "\t" << status_name(c.status) << "\n";
    return out.str();
}

std::string_view criticality_name(Criticality verdict)
{
    switch (verdict) {
    case Criticality::critical:
        return "critical";
    case Criticality::flexible:
        return "flexible";
    case Criticality::non_minimal:
        return "non-minimal";
    }
    return "?";
}

bool flexible_at(const Multigraph & g, const PotentialAssignment & rho, const Rational & epsilon,
                 std::uint64_t budget)
{
    if (rho.size() != g.vertex_count())
        throw InputError("potential assignment size does not match the graph");
    // Product distributions combine components, so each is checked on its own.
    for (const auto & component : g.components()) {
        Multigraph part = g.induced(component);
        PotentialAssignment part_rho = rho.restricted(component);
        if (cover_class_count(part) > budget)
            throw BudgetExceeded("component has more than " + std::to_string(budget) + " cover classes");
        bool ok = true;
        enumerate_covers(part, [&](const Cover & cover) {
            ok = framework_feasible(part, part_rho, cover, {}, epsilon).status == FrameworkStatus::feasible;
            return ok;
        });
        if (!ok)
            return false;
    }
    return true;
}

Criticality criticality_check(const Multigraph & g, const PotentialAssignment & rho, const Rational & epsilon,
                              std::uint64_t budget)
{
    if (flexible_at(g, rho, epsilon, budget))
        return Criticality::flexible;
    for (const auto & [pair, mult] : g.pairs())
        if (!flexible_at(g.without_edge(pair.lo, pair.hi), rho, epsilon, budget))
            return Criticality::non_minimal;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!flexible_at(g.without_vertex(v), rho.without_vertex(v), epsilon, budget))
            return Criticality::non_minimal;
    return Criticality::critical;
}

std::vector<std::vector<Vertex>> gap_audit(const Multigraph & g, const PotentialAssignment & rho)
{
    const int n = g.vertex_count();
    if (n > 20)
        throw InputError("gap audit supports at most 20 vertices");
    if (rho.size() != n)
        throw InputError("potential assignment size does not match the graph");

    // potential(S) <= boundary(S)  <=>  sum_{v in S} (rho(v) - d(v)) <= 2 e(S)
    const std::uint32_t full = n == 0 ? 0u : (1u << n);
    std::vector<int> inner(full, 0), slack(full, 0);
    std::vector<std::vector<std::pair<Vertex, int>>> adjacency(static_cast<std::size_t>(n));
    for (const auto & [pair, mult] : g.pairs()) {
        adjacency[static_cast<std::size_t>(pair.lo)].emplace_back(pair.hi, mult);
        adjacency[static_cast<std::size_t>(pair.hi)].emplace_back(pair.lo, mult);
    }
    std::vector<std::vector<Vertex>> out;
    for (std::uint32_t s = 1; s < full; ++s) {
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        int added = 0;
        for (auto [w, mult] : adjacency[static_cast<std::size_t>(v)])
            if ((rest >> w) & 1u)
                added += mult;
        inner[s] = inner[rest] + added;
        slack[s] = slack[rest] + rho.rho(v) - g.degree(v);
        if (slack[s] <= 2 * inner[s]) {
            std::vector<Vertex> subset;
            for (int u = 0; u < n; ++u)
                if ((s >> u) & 1u)
                    subset.push_back(u);
            out.push_back(std::move(subset));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto & a, const auto & b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

} // namespace flexdp
