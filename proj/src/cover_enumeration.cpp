#include "flexdp/cover.hpp"

#include "flexdp/errors.hpp"

#include <queue>
#include <set>

namespace flexdp {

namespace {

/// Increasing k-subsets of `pool`.
void combinations(const std::vector<int> & pool, int k, std::vector<int> & current, std::size_t start,
                  std::vector<std::vector<int>> & out)
{
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        combinations(pool, k, current, i + 1, out);
        current.pop_back();
    }
}

struct PairChoices {
    VertexPair pair;
    std::vector<std::vector<Permutation>> options;
};

std::set<VertexPair> bfs_tree_pairs(const Multigraph & g)
{
    std::set<VertexPair> tree;
    if (g.vertex_count() == 0)
        return tree;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                tree.insert(make_vertex_pair(u, w));
                queue.push(w);
            }
    }
    return tree;
}

std::vector<PairChoices> pair_choices(const Multigraph & g)
{
    if (!g.is_connected())
        throw InputError("cover enumeration needs a connected graph");
    const auto tree = bfs_tree_pairs(g);
    const auto & perms = all_permutations();

    std::vector<PairChoices> result;
    for (const auto & [pair, mult] : g.pairs()) {
        const int k = std::min(mult, 6);
        const bool pinned = tree.count(pair) > 0;
        std::vector<int> pool;
        for (int i = pinned ? 1 : 0; i < 6; ++i)
            pool.push_back(i);
        std::vector<std::vector<int>> subsets;
        std::vector<int> current;
        combinations(pool, pinned ? k - 1 : k, current, 0, subsets);

        PairChoices pc{pair, {}};
        for (const auto & subset : subsets) {
            std::vector<Permutation> option;
            if (pinned)
                option.push_back(identity_permutation);
            for (int i : subset)
                option.push_back(perms[static_cast<std::size_t>(i)]);
            pc.options.push_back(std::move(option));
        }
        result.push_back(std::move(pc));
    }
    return result;
}

} // namespace

std::uint64_t enumerate_covers(const Multigraph & g, const std::function<bool(const Cover &)> & visit)
{
    const auto choices = pair_choices(g);
    std::vector<std::size_t> digit(choices.size(), 0);
    std::uint64_t visited = 0;
    while (true) {
        Cover cover;
        for (std::size_t i = 0; i < choices.size(); ++i)
            for (const auto & p : choices[i].options[digit[i]])
                cover.add_matching(choices[i].pair.lo, choices[i].pair.hi, p);
        ++visited;
        if (!visit(cover))
            return visited;

        // Odometer with the last pair varying fastest.
        std::size_t i = choices.size();
        while (i > 0) {
            --i;
            if (++digit[i] < choices[i].options.size())
                break;
            digit[i] = 0;
            if (i == 0)
                return visited;
        }
        if (choices.empty())
            return visited;
    }
}

std::vector<Cover> all_covers(const Multigraph & g)
{
    std::vector<Cover> out;
    enumerate_covers(g, [&](const Cover & c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::uint64_t cover_class_count(const Multigraph & g)
{
    std::uint64_t total = 1;
    for (const auto & pc : pair_choices(g))
        total *= pc.options.size();
    return total;
}

} // namespace flexdp
