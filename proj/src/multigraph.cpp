#include "flexdp/multigraph.hpp"

#include "flexdp/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace flexdp {

VertexPair make_vertex_pair(Vertex u, Vertex v) noexcept
{
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

Multigraph::Multigraph(int vertex_count, const std::vector<EdgeSpec> & edges) :
    vertex_count_(vertex_count)
{
    if (vertex_count < 0)
        throw InputError("negative vertex count");
    for (const auto & e : edges) {
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has an endpoint out of range");
        if (e.u == e.v)
            throw InputError("loop at vertex " + std::to_string(e.u));
        if (e.multiplicity < 1)
            throw InputError("edge multiplicity must be at least 1");
        pairs_[make_vertex_pair(e.u, e.v)] += e.multiplicity;
    }

    degree_.assign(static_cast<std::size_t>(vertex_count), 0);
    neighbors_.assign(static_cast<std::size_t>(vertex_count), {});
    for (const auto & [pair, mult] : pairs_) {
        degree_[pair.lo] += mult;
        degree_[pair.hi] += mult;
        neighbors_[pair.lo].push_back(pair.hi);
        neighbors_[pair.hi].push_back(pair.lo);
        edge_count_ += mult;
    }
    for (auto & n : neighbors_)
        std::sort(n.begin(), n.end());
}

int Multigraph::multiplicity(Vertex u, Vertex v) const
{
    if (!has_vertex(u) || !has_vertex(v))
        throw InputError("vertex index out of range");
    auto it = pairs_.find(make_vertex_pair(u, v));
    return it == pairs_.end() ? 0 : it->second;
}

int Multigraph::degree(Vertex v) const
{
    if (!has_vertex(v))
        throw InputError("vertex index out of range");
    return degree_[v];
}

const std::vector<Vertex> & Multigraph::neighbors(Vertex v) const
{
    if (!has_vertex(v))
        throw InputError("vertex index out of range");
    return neighbors_[v];
}

bool Multigraph::is_simple() const noexcept
{
    return std::all_of(pairs_.begin(), pairs_.end(), [](const auto & p) { return p.second == 1; });
}

std::vector<std::vector<Vertex>> Multigraph::components() const
{
    std::vector<std::vector<Vertex>> result;
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    for (Vertex s = 0; s < vertex_count_; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> queue;
        queue.push(s);
        seen[s] = 1;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            comp.push_back(x);
            for (Vertex y : neighbors_[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool Multigraph::is_connected() const
{
    return vertex_count_ <= 1 || components().size() == 1;
}

Multigraph Multigraph::without_edge(Vertex u, Vertex v) const
{
    if (multiplicity(u, v) == 0)
        throw InputError("no edge to delete");
    std::vector<EdgeSpec> edges;
    for (const auto & [pair, mult] : pairs_) {
        int m = pair == make_vertex_pair(u, v) ? mult - 1 : mult;
        if (m > 0)
            edges.push_back({pair.lo, pair.hi, m});
    }
    return Multigraph(vertex_count_, edges);
}

Multigraph Multigraph::without_vertex(Vertex v) const
{
    if (!has_vertex(v))
        throw InputError("vertex index out of range");
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < vertex_count_; ++x)
        if (x != v)
            keep.push_back(x);
    return induced(keep);
}

Multigraph Multigraph::induced(std::span<const Vertex> keep) const
{
    std::vector<int> position(static_cast<std::size_t>(vertex_count_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (!has_vertex(keep[i]) || position[keep[i]] != -1)
            throw InputError("induced subgraph needs distinct in-range vertices");
        position[keep[i]] = static_cast<int>(i);
    }
    std::vector<EdgeSpec> edges;
    for (const auto & [pair, mult] : pairs_)
        if (position[pair.lo] >= 0 && position[pair.hi] >= 0)
            edges.push_back({position[pair.lo], position[pair.hi], mult});
    return Multigraph(static_cast<int>(keep.size()), edges);
}

std::vector<EdgeSpec> Multigraph::edge_list() const
{
    std::vector<EdgeSpec> edges;
    for (const auto & [pair, mult] : pairs_)
        edges.push_back({pair.lo, pair.hi, mult});
    return edges;
}

PotentialAssignment::PotentialAssignment(std::vector<int> rho, std::vector<int> basepoint) :
    rho_(std::move(rho)),
    basepoint_(std::move(basepoint))
{
    if (basepoint_.empty())
        basepoint_.assign(rho_.size(), 0);
    if (basepoint_.size() != rho_.size())
        throw InputError("rho and basepoint sizes differ");
    for (int r : rho_)
        if (r != 3 && r != 4 && r != 6)
            throw InputError("rho values must be 3, 4 or 6");
    for (int b : basepoint_)
        if (b < 0 || b > 2)
            throw InputError("basepoint colours must be 0, 1 or 2");
}

PotentialAssignment PotentialAssignment::uniform(int vertex_count, int rho)
{
    return PotentialAssignment(std::vector<int>(static_cast<std::size_t>(vertex_count), rho));
}

void PotentialAssignment::set_rho(Vertex v, int value)
{
    if (value != 3 && value != 4 && value != 6)
        throw InputError("rho values must be 3, 4 or 6");
    rho_.at(static_cast<std::size_t>(v)) = value;
}

void PotentialAssignment::set_basepoint(Vertex v, int color)
{
    if (color < 0 || color > 2)
        throw InputError("basepoint colours must be 0, 1 or 2");
    basepoint_.at(static_cast<std::size_t>(v)) = color;
}

PotentialAssignment PotentialAssignment::restricted(std::span<const Vertex> keep) const
{
    std::vector<int> r, b;
    for (Vertex v : keep) {
        r.push_back(rho(v));
        b.push_back(basepoint(v));
    }
    return PotentialAssignment(std::move(r), std::move(b));
}

PotentialAssignment PotentialAssignment::without_vertex(Vertex v) const
{
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < size(); ++x)
        if (x != v)
            keep.push_back(x);
    return restricted(keep);
}

namespace {

void check_assignment(const Multigraph & g, const PotentialAssignment & rho)
{
    if (rho.size() != g.vertex_count())
        throw InputError("potential assignment does not match the vertex set");
}

} // namespace

int potential(const Multigraph & g, const PotentialAssignment & rho, std::span<const Vertex> subset)
{
    check_assignment(g, rho);
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    int total = 0;
    for (Vertex v : subset) {
        if (!g.has_vertex(v))
            throw InputError("subset vertex " + std::to_string(v) + " is not in the graph");
        if (!in[v]) {
            in[v] = 1;
            total += rho.rho(v);
        }
    }
    for (const auto & [pair, mult] : g.pairs())
        if (in[pair.lo] && in[pair.hi])
            total -= 4 * mult;
    return total;
}

int potential(const Multigraph & g, const PotentialAssignment & rho)
{
    check_assignment(g, rho);
    int total = -4 * g.edge_count();
    for (int r : rho.rho_values())
        total += r;
    return total;
}

int sigma(const Multigraph & g, const PotentialAssignment & rho, Vertex v)
{
    check_assignment(g, rho);
    return rho.rho(v) - 2 * g.degree(v);
}

int edges_between(const Multigraph & g, std::span<const Vertex> a, std::span<const Vertex> b)
{
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : a) {
        if (!g.has_vertex(v))
            throw InputError("vertex index out of range");
        side[v] = 1;
    }
    for (Vertex v : b) {
        if (!g.has_vertex(v))
            throw InputError("vertex index out of range");
        if (side[v] == 1)
            throw InputError("edges_between needs disjoint sets");
        side[v] = 2;
    }
    int count = 0;
    for (const auto & [pair, mult] : g.pairs())
        if (side[pair.lo] && side[pair.hi] && side[pair.lo] != side[pair.hi])
            count += mult;
    return count;
}

} // namespace flexdp
