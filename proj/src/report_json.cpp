#include "flexdp/report_json.hpp"

#include <json.hpp>

namespace flexdp {

using nlohmann::json;

std::string flex_report_json(const FlexReport & report)
{
    json distribution = json::array();
    for (const auto & entry : report.distribution.entries) {
        json colors = json::array();
        for (auto c : entry.coloring)
            colors.push_back(static_cast<int>(c));
        distribution.push_back(json::array({colors, to_string(entry.weight)}));
    }
    json request = json::array();
    for (const auto & w : report.worst_request)
        request.push_back(json::array({w.vertex, w.color, to_string(w.weight)}));
    json out = {
        {"epsilon_star", to_string(report.epsilon_star)},
        {"colorable", report.colorable},
        {"distribution", distribution},
        {"worst_request", request},
    };
    return out.dump();
}

namespace {

json cover_json(const Cover & cover)
{
    json slots = json::array();
    for (const auto & [pair, perms] : cover.slots())
        for (const auto & p : perms)
            slots.push_back(json::array({pair.lo, pair.hi, json::array({p[0], p[1], p[2]})}));
    return slots;
}

} // namespace

std::string worst_report_json(const WorstCoverReport & report)
{
    json out = {
        {"epsilon_min", to_string(report.epsilon_min)},
        {"complete", report.complete},
        {"classes_evaluated", report.classes_evaluated},
        {"classes_total", report.classes_total},
        {"witness_cover", cover_json(report.witness_cover)},
    };
    return out.dump();
}

std::string theorem_report_json(const TheoremCheckReport & report)
{
    json graphs = json::array();
    for (const auto & c : report.graphs)
        graphs.push_back({
            {"code", c.code},
            {"mad", to_string(c.mad)},
            {"i_subgraph", c.has_i_subgraph},
            {"epsilon_min", to_string(c.epsilon_min)},
            {"witness_cover", c.witness_hash},
            {"status", std::string(status_name(c.status))},
        });
    json out = {
        {"graphs", graphs},
        {"enumerated", report.enumerated},
        {"passed", report.passed},
        {"flagged", report.flagged},
        {"counterexamples", report.counterexamples},
        {"skipped", report.skipped},
    };
    return out.dump();
}

} // namespace flexdp
