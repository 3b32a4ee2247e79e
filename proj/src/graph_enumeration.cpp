#include "flexdp/errors.hpp"
#include "flexdp/worst_case.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace flexdp {

namespace {

std::string code_under(const std::vector<int> & matrix, int n, const std::vector<int> & perm)
{
    std::string s = std::to_string(n) + ":";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s += static_cast<char>('0' + matrix[static_cast<std::size_t>(perm[i] * n + perm[j])]);
    return s;
}

} // namespace

std::string canonical_code(const Multigraph & g)
{
    const int n = g.vertex_count();
    std::vector<int> matrix(static_cast<std::size_t>(n * n), 0);
    for (const auto & [pair, mult] : g.pairs()) {
        if (mult > 9)
            throw InputError("canonical codes support multiplicity <= 9");
        matrix[static_cast<std::size_t>(pair.lo * n + pair.hi)] = mult;
        matrix[static_cast<std::size_t>(pair.hi * n + pair.lo)] = mult;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = code_under(matrix, n, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, code_under(matrix, n, perm));
    return best;
}

std::vector<Multigraph> connected_multigraphs(int n, int max_mult)
{
    if (n < 1)
        throw InputError("graph enumeration needs at least one vertex");
    if (max_mult < 1)
        throw InputError("maximum multiplicity must be positive");
    std::vector<VertexPair> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.push_back({i, j});

    std::map<std::string, Multigraph> seen;
    std::vector<int> mult(pairs.size(), 0);
    while (true) {
        std::vector<EdgeSpec> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mult[k] > 0)
                edges.push_back({pairs[k].lo, pairs[k].hi, mult[k]});
        // A connected graph needs at least n - 1 distinct pairs.
        if (static_cast<int>(edges.size()) >= n - 1) {
            Multigraph g(n, edges);
            if (g.is_connected())
                seen.try_emplace(canonical_code(g), g);
        }
        std::size_t k = 0;
        while (k < mult.size() && mult[k] == max_mult)
            mult[k++] = 0;
        if (k == mult.size())
            break;
        ++mult[k];
    }

    std::vector<Multigraph> out;
    for (auto & [code, g] : seen)
        out.push_back(std::move(g));
    return out;
}

} // namespace flexdp
