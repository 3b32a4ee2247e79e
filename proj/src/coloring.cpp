#include "flexdp/coloring.hpp"

#include "flexdp/errors.hpp"

#include <algorithm>
#include <queue>

namespace flexdp {

namespace {

struct Constraint {
    std::size_t earlier; // position in the search order
    std::uint16_t mask;  // conflict bits, oriented earlier -> current
};

class Search {
public:
    Search(const Multigraph & g, const Cover & cover, const ListAssignment & lists) : lists_(lists)
    {
        const int n = g.vertex_count();
        if (lists.size() != n)
            throw InputError("list assignment size does not match the graph");
        std::vector<int> position(static_cast<std::size_t>(n), -1);
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (Vertex start = 0; start < n; ++start) {
            if (seen[static_cast<std::size_t>(start)])
                continue;
            std::queue<Vertex> queue;
            queue.push(start);
            seen[static_cast<std::size_t>(start)] = true;
            while (!queue.empty()) {
                Vertex u = queue.front();
                queue.pop();
                order_.push_back(u);
                for (Vertex w : g.neighbors(u))
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = true;
                        queue.push(w);
                    }
            }
        }
        for (std::size_t i = 0; i < order_.size(); ++i)
            position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);

        constraints_.resize(order_.size());
        for (const auto & [pair, perms] : cover.slots()) {
            if (perms.empty())
                continue;
            int pa = position[static_cast<std::size_t>(pair.lo)], pb = position[static_cast<std::size_t>(pair.hi)];
            Vertex earlier = pa < pb ? pair.lo : pair.hi, later = pa < pb ? pair.hi : pair.lo;
            constraints_[static_cast<std::size_t>(std::max(pa, pb))].push_back(
                {static_cast<std::size_t>(std::min(pa, pb)), cover.conflict_mask(earlier, later)});
        }
        chosen_.assign(order_.size(), 0);
    }

    template <typename Visit>
    void run(Visit && visit)
    {
        descend(0, visit);
    }

    const std::vector<Vertex> & order() const { return order_; }
    const std::vector<std::uint8_t> & chosen() const { return chosen_; }

private:
    template <typename Visit>
    void descend(std::size_t depth, Visit & visit)
    {
        if (depth == order_.size()) {
            visit();
            return;
        }
        const Vertex v = order_[depth];
        for (std::uint8_t c = 0; c < 3; ++c) {
            if (!lists_.contains(v, c))
                continue;
            bool ok = true;
            for (const auto & con : constraints_[depth])
                if ((con.mask >> (chosen_[con.earlier] * 3 + c)) & 1u) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen_[depth] = c;
            descend(depth + 1, visit);
        }
    }

    const ListAssignment & lists_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Constraint>> constraints_;
    std::vector<std::uint8_t> chosen_;
};

} // namespace

bool is_valid_coloring(const Multigraph & g, const Cover & cover, const ListAssignment & lists,
                       const Coloring & coloring)
{
    const int n = g.vertex_count();
    if (static_cast<int>(coloring.size()) != n || lists.size() != n)
        return false;
    for (Vertex v = 0; v < n; ++v)
        if (coloring[static_cast<std::size_t>(v)] > 2 || !lists.contains(v, coloring[static_cast<std::size_t>(v)]))
            return false;
    for (const auto & [pair, perms] : cover.slots())
        for (const auto & p : perms)
            if (p[coloring[static_cast<std::size_t>(pair.lo)]] == coloring[static_cast<std::size_t>(pair.hi)])
                return false;
    return true;
}

std::vector<Coloring> enumerate_colorings(const Multigraph & g, const Cover & cover, const ListAssignment & lists)
{
    Search search(g, cover, lists);
    std::vector<Coloring> out;
    const auto & order = search.order();
    search.run([&] {
        Coloring c(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            c[static_cast<std::size_t>(order[i])] = search.chosen()[i];
        out.push_back(std::move(c));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Coloring> enumerate_colorings(const Multigraph & g, const Cover & cover)
{
    return enumerate_colorings(g, cover, ListAssignment::full(g.vertex_count()));
}

std::uint64_t count_colorings(const Multigraph & g, const Cover & cover, const ListAssignment & lists)
{
    Search search(g, cover, lists);
    std::uint64_t count = 0;
    search.run([&] { ++count; });
    return count;
}

std::pair<Coloring, Coloring> tree_pack_2cover(const Multigraph & tree, const Cover & cover,
                                               const ListAssignment & lists)
{
    const int n = tree.vertex_count();
    if (lists.size() != n)
        throw InputError("list assignment size does not match the tree");
    if (n == 0)
        return {};
    if (!tree.is_simple() || !tree.is_connected() || tree.edge_count() != n - 1)
        throw InputError("tree_pack_2cover needs a tree");
    for (Vertex v = 0; v < n; ++v)
        if (lists.list_size(v) != 2)
            throw InputError("tree_pack_2cover needs lists of size 2");
    for (const auto & [pair, perms] : cover.slots())
        if (perms.size() > 1)
            throw InputError("tree_pack_2cover allows one matching per edge");

    auto colors_of = [&](Vertex v) {
        std::array<std::uint8_t, 2> c{};
        int k = 0;
        for (std::uint8_t i = 0; i < 3; ++i)
            if (lists.contains(v, i))
                c[static_cast<std::size_t>(k++)] = i;
        return c;
    };
    // Image of colour c at u across the uw matching, or 3 if the slot is empty.
    auto image = [&](Vertex u, std::uint8_t c, Vertex w) -> std::uint8_t {
        const auto & perms = cover.matchings(u, w);
        if (perms.empty())
            return 3;
        return u < w ? perms[0][c] : inverse(perms[0])[c];
    };

    Coloring first(static_cast<std::size_t>(n)), second(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    auto root = colors_of(0);
    first[0] = root[0];
    second[0] = root[1];
    seen[0] = true;
    std::queue<Vertex> queue;
    queue.push(0);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex w : tree.neighbors(u)) {
            if (seen[static_cast<std::size_t>(w)])
                continue;
            seen[static_cast<std::size_t>(w)] = true;
            auto [a, b] = colors_of(w);
            std::uint8_t blocked1 = image(u, first[static_cast<std::size_t>(u)], w);
            std::uint8_t blocked2 = image(u, second[static_cast<std::size_t>(u)], w);
            // The two blocked colours differ, so one of the two orders avoids both.
            if (a != blocked1 && b != blocked2) {
                first[static_cast<std::size_t>(w)] = a;
                second[static_cast<std::size_t>(w)] = b;
            }
            else {
                first[static_cast<std::size_t>(w)] = b;
                second[static_cast<std::size_t>(w)] = a;
            }
            queue.push(w);
        }
    }
    return {first, second};
}

std::vector<std::array<Rational, 3>> marginals(const ColoringDistribution & dist, int vertex_count)
{
    std::vector<std::array<Rational, 3>> m(static_cast<std::size_t>(vertex_count));
    for (const auto & entry : dist.entries) {
        if (static_cast<int>(entry.coloring.size()) != vertex_count)
            throw InputError("coloring size does not match the vertex count");
        for (std::size_t v = 0; v < entry.coloring.size(); ++v)
            m[v][entry.coloring[v]] += entry.weight;
    }
    return m;
}

std::vector<Coloring> distribution_to_multiset(const ColoringDistribution & dist, std::uint64_t max_size)
{
    Rational total = 0;
    std::vector<Rational> weights;
    for (const auto & entry : dist.entries) {
        if (entry.weight < 0)
            throw InputError("negative weight in coloring distribution");
        total += entry.weight;
        weights.push_back(entry.weight);
    }
    if (total != 1)
        throw InputError("coloring distribution weights do not sum to 1");

    const Integer n = lcm_of_denominators(weights);
    if (n > Integer(std::to_string(max_size)))
        throw BudgetExceeded("multiset size " + n.get_str() + " exceeds the cap");

    std::vector<Coloring> out;
    for (const auto & entry : dist.entries) {
        Rational copies = entry.weight * n;
        for (unsigned long k = 0; k < copies.get_num().get_ui(); ++k)
            out.push_back(entry.coloring);
    }
    return out;
}

std::string to_string(const Coloring & coloring)
{
    std::string s;
    for (std::size_t i = 0; i < coloring.size(); ++i) {
        if (i)
            s += ' ';
        s += static_cast<char>('0' + coloring[i]);
    }
    return s;
}

} // namespace flexdp
