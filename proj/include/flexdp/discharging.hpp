#pragma once

#include "flexdp/multigraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flexdp {

enum class VertexClass { positive, conductive, insulated, unclassified };
std::string_view class_name(VertexClass c);

/// positive: sigma >= 1; insulated: sigma <= -2; conductive: d in {2,3} with
/// rho = 2d, or d = 2 with rho = 3. A vertex is negative when sigma < 0.
struct VertexClassification {
    std::vector<VertexClass> classes;
    std::vector<int> sigma;

    bool negative(Vertex v) const { return sigma.at(static_cast<std::size_t>(v)) < 0; }
};

VertexClassification classify(const Multigraph & g, const PotentialAssignment & rho);

/// True iff some u-v path has only conductive internal vertices. Adjacent
/// vertices are always connected. Requires u != v.
bool conductively_connected(const Multigraph & g, const PotentialAssignment & rho, Vertex u, Vertex v);

struct DischargeReport {
    VertexClassification classification;
    std::vector<int> sent, received, final_charge;
    /// Vertices whose final charge is positive.
    std::vector<Vertex> ending_positive;
    /// Sum of final charges equals the potential of V(G).
    bool conserved = false;
    /// Structural facts a minimal counterexample would satisfy, each reported
    /// when it fails. Together they imply every final charge is <= 0.
    std::vector<std::string> assumption_violations;

    bool assumptions_hold() const { return assumption_violations.empty(); }
};

/// Every vertex with sigma >= 1 sends charge 1 to each negative vertex it is
/// conductively connected with.
DischargeReport run_discharging(const Multigraph & g, const PotentialAssignment & rho);

} // namespace flexdp
