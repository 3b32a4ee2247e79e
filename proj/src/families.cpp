#include "flexdp/families.hpp"

#include "flexdp/errors.hpp"

#include <string>

namespace flexdp {

FamilyInstance gen_im(int m)
{
    if (m < 1)
        throw InputError("I_m needs m >= 1");
    const int n = 2 * m + 1;
    std::vector<EdgeSpec> edges;
    for (int k = 0; k < n; ++k) {
        // v_{k+1} v_{k+2}; doubled when k+1 is odd and k+1 < 2m+1
        bool doubled = k % 2 == 0 && k + 1 < n;
        edges.push_back({k, (k + 1) % n, doubled ? 2 : 1});
    }
    return {Multigraph(n, edges), PotentialAssignment::uniform(n)};
}

FamilyInstance gen_jm(int m)
{
    if (m < 1)
        throw InputError("J_m needs m >= 1");
    const int cycle = 2 * m + 1;
    const int w_first = cycle, w_last = cycle + 1;
    std::vector<EdgeSpec> edges;
    for (int k = 0; k < cycle; ++k) {
        // v_i v_{i+1} with i = k + 1
        int i = k + 1;
        bool doubled = i % 2 == 0 && i >= 2 && i <= 2 * m - 2;
        edges.push_back({k, (k + 1) % cycle, doubled ? 2 : 1});
    }
    edges.push_back({0, w_first, 2});
    edges.push_back({2 * m - 1, w_last, 2});
    return {Multigraph(cycle + 2, edges), PotentialAssignment::uniform(cycle + 2)};
}

FamilyInstance gen_s(const std::vector<int> & chains)
{
    if (chains.empty())
        throw InputError("S needs at least one diamond chain");
    for (int t : chains)
        if (t < 1)
            throw InputError("diamond chains need length >= 1");

    const int m = static_cast<int>(chains.size());
    const int cycle = 2 * m + 1;
    std::vector<EdgeSpec> edges;
    for (int k = 0; k < cycle; ++k)
        edges.push_back({k, (k + 1) % cycle, 1});

    int next = cycle;
    for (int j = 0; j < m; ++j) {
        // odd position 2j+1 (1-based) is index 2j
        Vertex anchor = 2 * j;
        for (int d = 0; d < chains[j]; ++d) {
            Vertex c = next++, e = next++, tip = next++;
            edges.push_back({anchor, c, 1});
            edges.push_back({anchor, e, 1});
            edges.push_back({c, e, 1});
            edges.push_back({c, tip, 1});
            edges.push_back({e, tip, 1});
            anchor = tip;
        }
        edges.push_back({anchor, 2 * j + 1, 1});
    }
    return {Multigraph(next, edges), PotentialAssignment::uniform(next)};
}

FamilyInstance gen_house()
{
    std::vector<EdgeSpec> edges{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 2}};
    return {Multigraph(5, edges), PotentialAssignment::uniform(5)};
}

FamilyInstance gen_k4()
{
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            edges.push_back({u, v, 1});
    return {Multigraph(4, edges), PotentialAssignment::uniform(4)};
}

FamilyInstance gen_exceptional_c2()
{
    return {Multigraph(2, {{0, 1, 2}}), PotentialAssignment({4, 6})};
}

FamilyInstance gen_family(const FamilyMember & member)
{
    switch (member.kind) {
    case Family::im:
        return gen_im(member.m);
    case Family::jm:
        return gen_jm(member.m);
    case Family::s:
        return gen_s(member.chains);
    case Family::h5:
        return gen_house();
    case Family::k4:
        return gen_k4();
    case Family::c2:
        return gen_exceptional_c2();
    }
    throw InputError("unknown family");
}

Family parse_family(std::string_view name)
{
    if (name == "im" || name == "Im")
        return Family::im;
    if (name == "jm" || name == "Jm")
        return Family::jm;
    if (name == "s" || name == "S")
        return Family::s;
    if (name == "h5" || name == "H5")
        return Family::h5;
    if (name == "k4" || name == "K4")
        return Family::k4;
    if (name == "c2" || name == "C2")
        return Family::c2;
    throw InputError("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family kind)
{
    switch (kind) {
    case Family::im:
        return "im";
    case Family::jm:
        return "jm";
    case Family::s:
        return "s";
    case Family::h5:
        return "h5";
    case Family::k4:
        return "k4";
    case Family::c2:
        return "c2";
    }
    return "?";
}

} // namespace flexdp
