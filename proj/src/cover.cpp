#include "flexdp/cover.hpp"

#include "flexdp/errors.hpp"
#include "flexdp/graph_io.hpp"
#include "text_lines.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>

namespace flexdp {

const std::array<Permutation, 6> & all_permutations()
{
    static const std::array<Permutation, 6> perms{{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    return perms;
}

int permutation_index(const Permutation & p)
{
    const auto & perms = all_permutations();
    auto it = std::find(perms.begin(), perms.end(), p);
    if (it == perms.end())
        throw InputError("not a permutation of {0,1,2}");
    return static_cast<int>(it - perms.begin());
}

bool is_bijection(const Permutation & p)
{
    unsigned seen = 0;
    for (auto c : p) {
        if (c > 2)
            return false;
        seen |= 1u << c;
    }
    return seen == 7u;
}

Permutation inverse(const Permutation & p)
{
    Permutation r{};
    for (std::uint8_t i = 0; i < 3; ++i)
        r[p[i]] = i;
    return r;
}

Permutation compose(const Permutation & outer, const Permutation & inner)
{
    Permutation r{};
    for (int i = 0; i < 3; ++i)
        r[i] = outer[inner[i]];
    return r;
}

void Cover::add_matching(Vertex u, Vertex v, const Permutation & p)
{
    if (u == v)
        throw InputError("matching on a loop");
    slots_[make_vertex_pair(u, v)].push_back(u < v ? p : inverse(p));
}

const std::vector<Permutation> & Cover::matchings(Vertex u, Vertex v) const
{
    static const std::vector<Permutation> none;
    auto it = slots_.find(make_vertex_pair(u, v));
    return it == slots_.end() ? none : it->second;
}

bool Cover::adjacent(Vertex u, int cu, Vertex v, int cv) const
{
    if (u > v) {
        std::swap(u, v);
        std::swap(cu, cv);
    }
    for (const auto & p : matchings(u, v))
        if (p[cu] == cv)
            return true;
    return false;
}

std::uint16_t Cover::conflict_mask(Vertex u, Vertex v) const
{
    std::uint16_t mask = 0;
    for (int cu = 0; cu < 3; ++cu)
        for (int cv = 0; cv < 3; ++cv)
            if (adjacent(u, cu, v, cv))
                mask |= static_cast<std::uint16_t>(1u << (cu * 3 + cv));
    return mask;
}

std::vector<CoverViolation> validate(const Multigraph & g, const Cover & cover)
{
    std::vector<CoverViolation> out;
    for (const auto & [pair, perms] : cover.slots()) {
        if (!g.has_vertex(pair.lo) || !g.has_vertex(pair.hi)) {
            out.push_back({pair, "vertex out of range"});
            continue;
        }
        const int mult = g.multiplicity(pair.lo, pair.hi);
        if (mult == 0) {
            out.push_back({pair, "matching on a non-edge"});
            continue;
        }
        if (static_cast<int>(perms.size()) > mult)
            out.push_back({pair, "matching count exceeds multiplicity"});
        for (std::size_t i = 0; i < perms.size(); ++i) {
            if (!is_bijection(perms[i])) {
                out.push_back({pair, "matching is not a bijection"});
                continue;
            }
            for (std::size_t j = 0; j < i; ++j)
                if (perms[j] == perms[i])
                    out.push_back({pair, "duplicate matching"});
        }
    }
    return out;
}

void require_valid(const Multigraph & g, const Cover & cover)
{
    auto violations = validate(g, cover);
    if (violations.empty())
        return;
    std::string message = "invalid cover:";
    for (const auto & v : violations)
        message += " {" + std::to_string(v.pair.lo) + "," + std::to_string(v.pair.hi) + "}: " + v.reason + ";";
    throw InputError(message);
}

Cover straight_cover(const Multigraph & g)
{
    static constexpr Permutation swap12{0, 2, 1};
    Cover cover;
    for (const auto & [pair, mult] : g.pairs()) {
        cover.add_matching(pair.lo, pair.hi, identity_permutation);
        if (mult >= 2)
            cover.add_matching(pair.lo, pair.hi, swap01_permutation);
        if (mult >= 3)
            cover.add_matching(pair.lo, pair.hi, swap12);
    }
    return cover;
}

namespace {

/// Identity on every pair, swap(0 1) added on every pair in `doubled`.
Cover identity_with_swaps(const Multigraph & g, bool (*doubled)(int mult))
{
    Cover cover;
    for (const auto & [pair, mult] : g.pairs()) {
        cover.add_matching(pair.lo, pair.hi, identity_permutation);
        if (doubled(mult))
            cover.add_matching(pair.lo, pair.hi, swap01_permutation);
    }
    return cover;
}

bool is_double(int mult) { return mult >= 2; }

} // namespace

Cover paper_cover(const FamilyMember & member, const Multigraph & g)
{
    if (member.kind == Family::k4)
        throw InputError("no adversarial cover is defined for K4");
    if (!(gen_family(member).graph == g))
        throw InputError("graph does not match the requested family member");

    switch (member.kind) {
    case Family::im:
    case Family::jm:
    case Family::h5:
    case Family::c2:
        // Every doubled pair in these layouts carries identity + swap(0 1).
        return identity_with_swaps(g, is_double);
    case Family::s: {
        const int m = static_cast<int>(member.chains.size());
        const int cycle = 2 * m + 1;
        // Chain j ends at the vertex joined to cycle index 2j+1; that edge is the
        // only one leaving the chain towards the cycle other than at its anchor.
        std::vector<VertexPair> swapped;
        int next = cycle;
        for (int j = 0; j < m; ++j) {
            next += 3 * member.chains[static_cast<std::size_t>(j)];
            swapped.push_back(make_vertex_pair(next - 1, 2 * j + 1));
        }
        Cover cover;
        for (const auto & [pair, mult] : g.pairs()) {
            bool swap = std::find(swapped.begin(), swapped.end(), pair) != swapped.end();
            cover.add_matching(pair.lo, pair.hi, swap ? swap01_permutation : identity_permutation);
        }
        return cover;
    }
    case Family::k4:
        break;
    }
    throw InputError("unknown family");
}

ListAssignment::ListAssignment(std::vector<std::uint8_t> masks) : masks_(std::move(masks))
{
    for (auto m : masks_)
        if (m > 7)
            throw InputError("list mask out of range");
}

ListAssignment ListAssignment::full(int vertex_count)
{
    return ListAssignment(std::vector<std::uint8_t>(static_cast<std::size_t>(vertex_count), 7));
}

int ListAssignment::list_size(Vertex v) const
{
    return std::popcount(static_cast<unsigned>(mask(v)));
}

void ListAssignment::set_mask(Vertex v, std::uint8_t mask)
{
    if (mask > 7)
        throw InputError("list mask out of range");
    masks_.at(static_cast<std::size_t>(v)) = mask;
}

void ListAssignment::forbid(Vertex v, int color)
{
    if (color < 0 || color > 2)
        throw InputError("colour out of range");
    masks_.at(static_cast<std::size_t>(v)) &= static_cast<std::uint8_t>(~(1u << color) & 7u);
}

bool ListAssignment::conforms_to(const PotentialAssignment & rho) const
{
    if (rho.size() != size())
        return false;
    for (Vertex v = 0; v < size(); ++v)
        if (list_size(v) != rho.list_size(v))
            return false;
    return true;
}

std::string serialize_cover(const Cover & cover)
{
    std::ostringstream out;
    for (const auto & [pair, perms] : cover.slots())
        for (const auto & p : perms)
            out << "match " << pair.lo << " " << pair.hi << " " << int(p[0]) << " " << int(p[1]) << " "
                << int(p[2]) << "\n";
    return out.str();
}

Cover parse_cover(std::string_view text, const Multigraph & g)
{
    Cover cover;
    for (const auto & line : detail::tokenized_lines(text)) {
        const auto & t = line.tokens;
        auto fail = [&](const std::string & what) {
            return InputError("line " + std::to_string(line.number) + ": " + what);
        };
        if (t[0] != "match" || t.size() != 6)
            throw fail("expected 'match U V P0 P1 P2'");
        int values[5];
        for (int i = 0; i < 5; ++i) {
            try {
                std::size_t used = 0;
                values[i] = std::stoi(t[static_cast<std::size_t>(i + 1)], &used);
                if (used != t[static_cast<std::size_t>(i + 1)].size())
                    throw fail("malformed integer");
            }
            catch (const std::logic_error &) {
                throw fail("malformed integer");
            }
        }
        if (!g.has_vertex(values[0]) || !g.has_vertex(values[1]) || values[0] == values[1])
            throw fail("bad vertex pair");
        Permutation p{};
        for (int i = 0; i < 3; ++i) {
            if (values[2 + i] < 0 || values[2 + i] > 2)
                throw fail("colour out of range");
            p[i] = static_cast<std::uint8_t>(values[2 + i]);
        }
        if (!is_bijection(p))
            throw fail("matching is not a bijection");
        // The line is already oriented min -> max.
        Vertex lo = std::min(values[0], values[1]), hi = std::max(values[0], values[1]);
        cover.add_matching(lo, hi, p);
    }
    require_valid(g, cover);
    return cover;
}

Cover read_cover_file(const std::string & path, const Multigraph & g)
{
    return parse_cover(read_text_file(path), g);
}

std::string cover_hash(const Cover & cover)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_cover(cover)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace flexdp
