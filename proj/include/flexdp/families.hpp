#pragma once

#include "flexdp/multigraph.hpp"

#include <string_view>
#include <vector>

namespace flexdp {

enum class Family { im, jm, s, h5, k4, c2 };

/// Selects one member of a named family.
struct FamilyMember {
    Family kind = Family::k4;
    /// Index m >= 1 for I_m and J_m.
    int m = 1;
    /// Diamond-chain lengths t_j >= 1 for the S family, one per odd cycle position.
    std::vector<int> chains;
};

struct FamilyInstance {
    Multigraph graph;
    PotentialAssignment rho;
};

/// Vertex layouts:
///   I_m  cycle v_1..v_{2m+1} at indices 0..2m; (v_{2i-1}, v_{2i}) doubled.
///   J_m  cycle at 0..2m, w_1 = 2m+1 doubled to v_1, w_{2m} = 2m+2 doubled to v_{2m},
///        (v_i, v_{i+1}) doubled for even i in 2..2m-2.
///   S    cycle of length 2m+1 at 0..2m (m = chains.size()), then each diamond chain
///        in order; chain j starts at v_j and ends at w_j, which is joined to v_{j+1}.
///   H5   0 = apex, 1 = u', 2 = v', 3 = u, 4 = v; u and v doubled.
///   C2   two vertices joined twice, rho = (4, 6), the exceptional C_2.
/// rho is 6 everywhere except on C2. Throws InputError on invalid parameters.
FamilyInstance gen_family(const FamilyMember & member);

FamilyInstance gen_im(int m);
FamilyInstance gen_jm(int m);
FamilyInstance gen_s(const std::vector<int> & chains);
FamilyInstance gen_house();
FamilyInstance gen_k4();
FamilyInstance gen_exceptional_c2();

Family parse_family(std::string_view name);
std::string_view family_name(Family kind);

} // namespace flexdp
