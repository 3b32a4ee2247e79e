#pragma once

#include "flexdp/flexibility.hpp"
#include "flexdp/worst_case.hpp"

#include <string>

namespace flexdp {

/// {"epsilon_star": "p/q", "colorable": bool,
///  "distribution": [[coloring, "p/q"], ...], "worst_request": [[v, c, "p/q"], ...]}
/// A coloring is an array of colour indices in vertex order.
std::string flex_report_json(const FlexReport & report);

/// {"epsilon_min": "p/q", "complete": bool, "classes_evaluated": n,
///  "classes_total": n, "witness_cover": [[u, v, [p0, p1, p2]], ...]}
std::string worst_report_json(const WorstCoverReport & report);

/// {"graphs": [{"code", "mad", "i_subgraph", "epsilon_min", "witness_cover", "status"}, ...],
///  "enumerated", "passed", "flagged", "counterexamples", "skipped"}
std::string theorem_report_json(const TheoremCheckReport & report);

} // namespace flexdp
