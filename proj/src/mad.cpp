#include "flexdp/mad.hpp"

#include "flexdp/errors.hpp"
#include "max_flow.hpp"

#include <algorithm>

namespace flexdp {

namespace {

struct ClosureResult {
    // max over U of (q |E(U)| - p |U|), empty U allowed
    std::int64_t value;
    std::vector<Vertex> maximizer;
};

// Max-weight closure: one node per vertex pair (profit q * mult) that requires
// both endpoints (cost p each).
ClosureResult best_closure(const Multigraph & g, std::int64_t p, std::int64_t q)
{
    const int n = g.vertex_count();
    const int pair_count = static_cast<int>(g.pairs().size());
    const int source = n + pair_count;
    const int sink = source + 1;
    detail::MaxFlow flow(sink + 1);

    std::int64_t total_profit = 0;
    for (const auto & [pair, mult] : g.pairs())
        total_profit += q * mult;
    const std::int64_t infinite = total_profit + 1;

    int node = n;
    for (const auto & [pair, mult] : g.pairs()) {
        flow.add_edge(source, node, q * mult);
        flow.add_edge(node, pair.lo, infinite);
        flow.add_edge(node, pair.hi, infinite);
        ++node;
    }
    for (Vertex v = 0; v < n; ++v)
        flow.add_edge(v, sink, p);

    std::int64_t cut = flow.run(source, sink);
    auto side = flow.source_side(source);
    ClosureResult result{total_profit - cut, {}};
    for (Vertex v = 0; v < n; ++v)
        if (side[v])
            result.maximizer.push_back(v);
    return result;
}

} // namespace

DensestSubgraph densest_subgraph(const Multigraph & g)
{
    const int n = g.vertex_count();
    if (n == 0)
        throw InputError("maximum average degree of the empty graph is undefined");

    // Every subgraph density is p/q with 1 <= q <= n and 0 <= p <= |E|.
    std::vector<Rational> candidates;
    for (int q = 1; q <= n; ++q)
        for (int p = 0; p <= g.edge_count(); ++p)
            candidates.emplace_back(p, q);
    for (auto & c : candidates)
        c.canonicalize();
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto closure_at = [&](const Rational & density) {
        return best_closure(g, density.get_num().get_si(), density.get_den().get_si());
    };

    // The maximum density is the first candidate at which no nonempty set has
    // positive excess |E(U)| - density |U|.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (closure_at(candidates[mid]).value == 0)
            hi = mid;
        else
            lo = mid + 1;
    }

    DensestSubgraph result{candidates[lo], {}};
    if (lo == 0) {
        result.vertices = {0};
        return result;
    }
    // Just below the optimum, the closure maximizer has density strictly above
    // the previous candidate and hence exactly the optimum.
    result.vertices = closure_at(candidates[lo - 1]).maximizer;
    return result;
}

Rational mad(const Multigraph & g)
{
    return 2 * densest_subgraph(g).density;
}

} // namespace flexdp
