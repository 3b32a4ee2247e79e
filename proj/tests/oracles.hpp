#pragma once

// Independent brute-force reference implementations and random generators
// used by the unit and acceptance tests. Nothing here calls the search or LP
// code under test.

#include "flexdp/coloring.hpp"
#include "flexdp/cover.hpp"
#include "flexdp/flexibility.hpp"
#include "flexdp/multigraph.hpp"
#include "flexdp/rational.hpp"
#include "flexdp/rational_lp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using flexdp::Cover;
using flexdp::Multigraph;
using flexdp::Rational;
using flexdp::Vertex;

/// mad by enumerating every nonempty vertex subset.
inline Rational mad_by_subsets(const Multigraph & g)
{
    const int n = g.vertex_count();
    Rational best = 0;
    for (unsigned s = 1; s < (1u << n); ++s) {
        int edges = 0;
        for (const auto & [pair, mult] : g.pairs())
            if ((s >> pair.lo & 1u) && (s >> pair.hi & 1u))
                edges += mult;
        Rational avg(2 * edges, std::popcount(s));
        avg.canonicalize();
        best = std::max(best, avg);
    }
    return best;
}

inline int potential_by_definition(const Multigraph & g, const flexdp::PotentialAssignment & rho)
{
    int total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        total += rho.rho(v);
    for (const auto & [pair, mult] : g.pairs())
        total -= 4 * mult;
    return total;
}

/// Every assignment in {0,1,2}^n that respects the lists and the matchings.
inline std::vector<flexdp::Coloring> brute_colorings(const Multigraph & g, const Cover & cover,
                                                     const flexdp::ListAssignment & lists)
{
    const int n = g.vertex_count();
    std::vector<flexdp::Coloring> out;
    int total = 1;
    for (int i = 0; i < n; ++i)
        total *= 3;
    for (int code = 0; code < total; ++code) {
        flexdp::Coloring c(static_cast<std::size_t>(n));
        int x = code;
        for (int i = n - 1; i >= 0; --i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x % 3);
            x /= 3;
        }
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            ok = lists.contains(v, c[static_cast<std::size_t>(v)]);
        for (const auto & [pair, perms] : cover.slots())
            for (const auto & p : perms)
                if (p[c[static_cast<std::size_t>(pair.lo)]] == c[static_cast<std::size_t>(pair.hi)])
                    ok = false;
        if (ok)
            out.push_back(c);
    }
    return out;
}

/// Proper 3-colorings of the underlying simple graph.
inline long proper_colorings(const Multigraph & g)
{
    const int n = g.vertex_count();
    long count = 0;
    int total = 1;
    for (int i = 0; i < n; ++i)
        total *= 3;
    for (int code = 0; code < total; ++code) {
        std::vector<int> c(static_cast<std::size_t>(n));
        int x = code;
        for (int i = 0; i < n; ++i) {
            c[static_cast<std::size_t>(i)] = x % 3;
            x /= 3;
        }
        bool ok = true;
        for (const auto & [pair, mult] : g.pairs())
            if (c[static_cast<std::size_t>(pair.lo)] == c[static_cast<std::size_t>(pair.hi)])
                ok = false;
        count += ok;
    }
    return count;
}

/// Weak-duality check of a flexibility report against brute-force colorings:
/// the distribution's marginals reach eps on every listed colour, and the
/// request gives every coloring weight at most eps. Together they prove eps optimal.
inline bool certifies_optimum(const Multigraph & g, const Cover & cover, const flexdp::ListAssignment & lists,
                              const flexdp::FlexReport & report)
{
    const auto all = brute_colorings(g, cover, lists);
    if (all.empty())
        return !report.colorable && report.epsilon_star == 0;
    std::set<flexdp::Coloring> valid(all.begin(), all.end());
    Rational mass = 0;
    std::vector<std::array<Rational, 3>> marg(static_cast<std::size_t>(g.vertex_count()));
    for (const auto & e : report.distribution.entries) {
        if (!valid.count(e.coloring) || e.weight < 0)
            return false;
        mass += e.weight;
        for (std::size_t v = 0; v < e.coloring.size(); ++v)
            marg[v][e.coloring[v]] += e.weight;
    }
    if (mass != 1)
        return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (int c = 0; c < 3; ++c)
            if (lists.contains(v, c) && marg[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] < report.epsilon_star)
                return false;
    Rational request_mass = 0;
    std::map<std::pair<Vertex, int>, Rational> w;
    for (const auto & r : report.worst_request) {
        if (r.weight < 0 || !lists.contains(r.vertex, r.color))
            return false;
        request_mass += r.weight;
        w[{r.vertex, r.color}] += r.weight;
    }
    if (request_mass != 1)
        return false;
    for (const auto & c : all) {
        Rational hit = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (auto it = w.find({v, c[static_cast<std::size_t>(v)]}); it != w.end())
                hit += it->second;
        if (hit > report.epsilon_star)
            return false;
    }
    return true;
}

/// Brute-force I_m containment: ordered sequences of distinct vertices forming
/// the cycle with doubled odd-position pairs.
inline bool has_i_subgraph(const Multigraph & g)
{
    const int n = g.vertex_count();
    std::vector<Vertex> seq;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> extend = [&](int length) -> bool {
        const int k = static_cast<int>(seq.size());
        if (k == length) {
            return g.multiplicity(seq.back(), seq.front()) >= 1;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            if (k > 0) {
                // pair (seq[k-1], v) is position k (1-based): doubled when k is odd
                const int need = (k % 2 == 1) ? 2 : 1;
                if (g.multiplicity(seq.back(), v) < need)
                    continue;
            }
            used[static_cast<std::size_t>(v)] = true;
            seq.push_back(v);
            bool found = extend(length);
            seq.pop_back();
            used[static_cast<std::size_t>(v)] = false;
            if (found)
                return true;
        }
        return false;
    };
    for (int length = 3; length <= n; length += 2)
        if (extend(length))
            return true;
    return false;
}

/// Maximization LP oracle by vertex enumeration, for tiny LPs with x >= 0.
/// Boundedness is decided by boxing with M and 2M.
struct TinyLpResult {
    flexdp::LpStatus status;
    Rational value;
};

inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

inline std::optional<Rational> boxed_optimum(const flexdp::LinearProgram & lp, const Rational & box)
{
    const std::size_t n = static_cast<std::size_t>(lp.variable_count);
    // All constraints as a.x (rel) b, plus x_j >= 0 and x_j <= box.
    struct Row {
        std::vector<Rational> a;
        flexdp::Relation rel;
        Rational b;
    };
    std::vector<Row> rows;
    for (const auto & c : lp.constraints)
        rows.push_back({c.coefficients, c.relation, c.rhs});
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n);
        e[j] = 1;
        rows.push_back({e, flexdp::Relation::greater_equal, 0});
        rows.push_back({e, flexdp::Relation::less_equal, box});
    }
    auto feasible = [&](const std::vector<Rational> & x) {
        for (const auto & r : rows) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < n; ++j)
                lhs += r.a[j] * x[j];
            if ((r.rel == flexdp::Relation::less_equal && lhs > r.b) ||
                (r.rel == flexdp::Relation::greater_equal && lhs < r.b) ||
                (r.rel == flexdp::Relation::equal && lhs != r.b))
                return false;
        }
        return true;
    };
    std::optional<Rational> best;
    std::vector<std::size_t> pick(n);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
        if (depth == n) {
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (auto i : pick) {
                a.push_back(rows[i].a);
                b.push_back(rows[i].b);
            }
            auto x = solve_square(a, b);
            if (!x || !feasible(*x))
                return;
            Rational value = 0;
            for (std::size_t j = 0; j < n; ++j)
                value += lp.objective[j] * (*x)[j];
            if (!best || value > *best)
                best = value;
            return;
        }
        for (std::size_t i = start; i < rows.size(); ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    return best;
}

inline TinyLpResult tiny_lp(const flexdp::LinearProgram & lp)
{
    const Rational m(1000000);
    auto small = boxed_optimum(lp, m);
    if (!small)
        return {flexdp::LpStatus::infeasible, 0};
    auto large = boxed_optimum(lp, 2 * m);
    if (*large != *small)
        return {flexdp::LpStatus::unbounded, 0};
    return {flexdp::LpStatus::optimal, *small};
}

/// Orbit label of every cover of `g` whose pairs carry exactly min(mult, 6)
/// distinct matchings, under independent relabelling of each vertex's list.
/// Returns cover key -> orbit id; keys are per-pair 6-bit permutation sets.
using CoverKey = std::vector<unsigned>;

inline CoverKey key_of(const Multigraph & g, const Cover & cover)
{
    CoverKey key;
    for (const auto & [pair, mult] : g.pairs()) {
        unsigned bits = 0;
        for (const auto & p : cover.matchings(pair.lo, pair.hi))
            bits |= 1u << flexdp::permutation_index(p);
        key.push_back(bits);
    }
    return key;
}

inline std::map<CoverKey, int> relabel_orbits(const Multigraph & g)
{
    const auto & perms = flexdp::all_permutations();
    std::vector<flexdp::VertexPair> pairs;
    std::vector<int> sizes;
    for (const auto & [pair, mult] : g.pairs()) {
        pairs.push_back(pair);
        sizes.push_back(std::min(mult, 6));
    }
    // All keys.
    std::vector<std::vector<unsigned>> options(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (unsigned bits = 0; bits < 64; ++bits)
            if (std::popcount(bits) == sizes[i])
                options[i].push_back(bits);
    std::vector<CoverKey> keys{{}};
    for (const auto & opt : options) {
        std::vector<CoverKey> next;
        for (const auto & k : keys)
            for (unsigned bits : opt) {
                auto e = k;
                e.push_back(bits);
                next.push_back(e);
            }
        keys = std::move(next);
    }

    const int n = g.vertex_count();
    auto relabel = [&](const CoverKey & key, const std::vector<int> & sigma) {
        CoverKey out(key.size());
        for (std::size_t i = 0; i < key.size(); ++i)
            for (int b = 0; b < 6; ++b)
                if (key[i] >> b & 1u) {
                    const auto & su = perms[static_cast<std::size_t>(sigma[static_cast<std::size_t>(pairs[i].lo)])];
                    const auto & sv = perms[static_cast<std::size_t>(sigma[static_cast<std::size_t>(pairs[i].hi)])];
                    auto q = flexdp::compose(sv, flexdp::compose(perms[static_cast<std::size_t>(b)], flexdp::inverse(su)));
                    out[i] |= 1u << flexdp::permutation_index(q);
                }
        return out;
    };

    std::map<CoverKey, int> orbit;
    int next_id = 0;
    for (const auto & k : keys) {
        if (orbit.count(k))
            continue;
        const int id = next_id++;
        std::vector<int> sigma(static_cast<std::size_t>(n), 0);
        while (true) {
            orbit.emplace(relabel(k, sigma), id);
            std::size_t i = 0;
            while (i < sigma.size() && sigma[i] == 5)
                sigma[i++] = 0;
            if (i == sigma.size())
                break;
            ++sigma[i];
        }
    }
    return orbit;
}

// ---- random generators ----

inline Multigraph random_connected_multigraph(std::mt19937_64 & rng, int n, int max_mult, double extra_density)
{
    std::vector<flexdp::EdgeSpec> edges;
    std::uniform_int_distribution<int> mult(1, max_mult);
    std::bernoulli_distribution extra(extra_density);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back({parent(rng), v, mult(rng)});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (extra(rng))
                edges.push_back({u, v, 1});
    Multigraph g(n, edges);
    // cap multiplicities again after merging duplicates
    std::vector<flexdp::EdgeSpec> capped;
    for (const auto & [pair, m] : g.pairs())
        capped.push_back({pair.lo, pair.hi, std::min(m, max_mult)});
    return Multigraph(n, capped);
}

inline Multigraph random_tree(std::mt19937_64 & rng, int n)
{
    std::vector<flexdp::EdgeSpec> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back({parent(rng), v, 1});
    }
    return Multigraph(n, edges);
}

inline flexdp::Permutation random_permutation(std::mt19937_64 & rng)
{
    std::uniform_int_distribution<int> pick(0, 5);
    return flexdp::all_permutations()[static_cast<std::size_t>(pick(rng))];
}

/// min(mult, 3) distinct random matchings per pair.
inline Cover random_cover(std::mt19937_64 & rng, const Multigraph & g)
{
    Cover cover;
    for (const auto & [pair, mult] : g.pairs()) {
        std::vector<int> idx{0, 1, 2, 3, 4, 5};
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int i = 0; i < std::min(mult, 3); ++i)
            cover.add_matching(pair.lo, pair.hi, flexdp::all_permutations()[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
    }
    return cover;
}

inline flexdp::PotentialAssignment random_rho(std::mt19937_64 & rng, int n)
{
    std::uniform_int_distribution<int> pick(0, 2), color(0, 2);
    std::vector<int> rho, base;
    for (int i = 0; i < n; ++i) {
        rho.push_back(std::array{3, 4, 6}[static_cast<std::size_t>(pick(rng))]);
        base.push_back(color(rng));
    }
    return flexdp::PotentialAssignment(rho, base);
}

inline bool is_two_connected(const Multigraph & g)
{
    if (g.vertex_count() < 3 || !g.is_connected())
        return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!g.without_vertex(v).is_connected())
            return false;
    return true;
}

/// Simple 2-connected graph with max degree 3 and at least two 2-vertices.
inline Multigraph random_subcubic_two_connected(std::mt19937_64 & rng, int max_n)
{
    std::uniform_int_distribution<int> size(3, max_n);
    while (true) {
        const int n = size(rng);
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        std::vector<flexdp::EdgeSpec> edges;
        std::uniform_int_distribution<int> target(n, n + n / 2);
        const int want = target(rng);
        for (auto [u, v] : all) {
            if (static_cast<int>(edges.size()) >= want)
                break;
            if (deg[static_cast<std::size_t>(u)] < 3 && deg[static_cast<std::size_t>(v)] < 3) {
                edges.push_back({u, v, 1});
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
            }
        }
        Multigraph g(n, edges);
        int twos = 0;
        for (Vertex v = 0; v < n; ++v)
            twos += g.degree(v) == 2;
        if (twos >= 2 && is_two_connected(g))
            return g;
    }
}

inline Rational random_rational(std::mt19937_64 & rng, int range, int max_den)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace oracle
