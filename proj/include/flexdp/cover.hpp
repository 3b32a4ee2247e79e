#pragma once

#include "flexdp/families.hpp"
#include "flexdp/multigraph.hpp"
#include "flexdp/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flexdp {

/// Bijection on {0,1,2}: colour i at the lower endpoint is matched to colour p[i]
/// at the higher endpoint.
using Permutation = std::array<std::uint8_t, 3>;

inline constexpr Permutation identity_permutation{0, 1, 2};
inline constexpr Permutation swap01_permutation{1, 0, 2};

/// The six permutations in lexicographic order; index 0 is the identity.
const std::array<Permutation, 6> & all_permutations();
int permutation_index(const Permutation & p);
Permutation inverse(const Permutation & p);
Permutation compose(const Permutation & outer, const Permutation & inner);
bool is_bijection(const Permutation & p);

/// DP 3-cover: for each vertex pair an ordered list of matching slots. Every
/// vertex carries the full list {0,1,2}; list restriction lives in ListAssignment.
class Cover {
public:
    /// Appends a matching oriented from u to v; stored oriented lo -> hi.
    void add_matching(Vertex u, Vertex v, const Permutation & p);

    /// Matchings of the pair, oriented lo -> hi. Empty if none.
    const std::vector<Permutation> & matchings(Vertex u, Vertex v) const;
    const std::map<VertexPair, std::vector<Permutation>> & slots() const noexcept { return slots_; }

    /// True if colour cu at u and colour cv at v are joined in H.
    bool adjacent(Vertex u, int cu, Vertex v, int cv) const;

    /// 9-bit mask over (cu * 3 + cv) of joined colour pairs, oriented u -> v.
    std::uint16_t conflict_mask(Vertex u, Vertex v) const;

    friend bool operator==(const Cover &, const Cover &) = default;

private:
    std::map<VertexPair, std::vector<Permutation>> slots_;
};

struct CoverViolation {
    VertexPair pair;
    std::string reason;
};

/// Checks matching count <= multiplicity, bijectivity, pairwise-distinct
/// matchings per pair and vertex range. Empty result means valid.
std::vector<CoverViolation> validate(const Multigraph & g, const Cover & cover);
/// Throws InputError listing the violations.
void require_valid(const Multigraph & g, const Cover & cover);

/// Identity on single edges; identity plus swap(0 1) on doubled pairs, plus
/// swap(1 2) on pairs of multiplicity >= 3.
Cover straight_cover(const Multigraph & g);

/// Adversarial covers of the tight families; C2 is the C_2 + C_4 cover of the
/// exceptional C_2. Throws InputError if `g` is not the generated member or
/// the family has no such cover (K4).
Cover paper_cover(const FamilyMember & member, const Multigraph & g);

/// Enumerates covers with every pair carrying exactly min(mult, 6) distinct
/// matchings, one representative per choice after pinning the first matching of
/// every BFS spanning-tree pair to the identity. Every cover of G is equivalent
/// under per-vertex list relabelling to some enumerated cover. Matching sets
/// are unordered (increasing permutation index). Deterministic order.
/// `visit` returns false to stop early. Returns the number of covers visited.
/// Throws InputError on a disconnected graph.
std::uint64_t enumerate_covers(const Multigraph & g, const std::function<bool(const Cover &)> & visit);
std::vector<Cover> all_covers(const Multigraph & g);
/// Number of covers enumerate_covers would produce (no materialization).
std::uint64_t cover_class_count(const Multigraph & g);

/// Per-vertex colour subset, stored as a 3-bit mask.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::uint8_t> masks);

    static ListAssignment full(int vertex_count);

    int size() const noexcept { return static_cast<int>(masks_.size()); }
    std::uint8_t mask(Vertex v) const { return masks_.at(static_cast<std::size_t>(v)); }
    bool contains(Vertex v, int color) const { return (mask(v) >> color) & 1; }
    int list_size(Vertex v) const;
    void set_mask(Vertex v, std::uint8_t mask);
    /// Removes one colour from v's list.
    void forbid(Vertex v, int color);

    /// True when sizes match h_rho: two colours on rho = 3, three elsewhere.
    bool conforms_to(const PotentialAssignment & rho) const;

    friend auto operator<=>(const ListAssignment &, const ListAssignment &) = default;

private:
    std::vector<std::uint8_t> masks_;
};

struct ListOutcome {
    ListAssignment lists;
    Rational probability;
};

/// Finite distribution over list assignments. An empty outcome list stands for
/// the trivial distribution (full lists with probability 1).
struct ListDistribution {
    std::vector<ListOutcome> outcomes;
};

/// Text format: one line per matching slot, `match U V P0 P1 P2`, meaning colour i
/// at min(U,V) is adjacent to colour P_i at max(U,V).
std::string serialize_cover(const Cover & cover);
/// Parses and validates against `g`. Throws InputError.
Cover parse_cover(std::string_view text, const Multigraph & g);
Cover read_cover_file(const std::string & path, const Multigraph & g);

/// 64-bit FNV-1a of serialize_cover, as 16 hex digits.
std::string cover_hash(const Cover & cover);

} // namespace flexdp
