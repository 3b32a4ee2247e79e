#include "flexdp/coloring.hpp"
#include "flexdp/cover.hpp"
#include "flexdp/discharging.hpp"
#include "flexdp/errors.hpp"
#include "flexdp/families.hpp"
#include "flexdp/flexibility.hpp"
#include "flexdp/gadgets.hpp"
#include "flexdp/graph_io.hpp"
#include "flexdp/mad.hpp"
#include "flexdp/report_json.hpp"
#include "flexdp/worst_case.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace flexdp;

namespace {

std::vector<int> parse_int_list(const std::string & text)
{
    std::vector<int> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw InputError("malformed integer list '" + text + "'");
        }
        catch (const std::logic_error &) {
            throw InputError("malformed integer list '" + text + "'");
        }
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string & text)
{
    std::vector<Rational> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        out.push_back(parse_rational(item));
    return out;
}

std::string vertex_list(const std::vector<Vertex> & vs)
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
}

Cover load_cover(const std::string & path, const Multigraph & g)
{
    return path.empty() ? straight_cover(g) : read_cover_file(path, g);
}

/// Lists: "full" by default; otherwise a comma-separated mask per vertex (1..7).
ListAssignment load_lists(const std::string & text, const Multigraph & g)
{
    if (text.empty())
        return ListAssignment::full(g.vertex_count());
    std::vector<std::uint8_t> masks;
    for (int m : parse_int_list(text)) {
        if (m < 0 || m > 7)
            throw InputError("list masks must lie in 0..7");
        masks.push_back(static_cast<std::uint8_t>(m));
    }
    if (static_cast<int>(masks.size()) != g.vertex_count())
        throw InputError("need one list mask per vertex");
    return ListAssignment(masks);
}

void print_distribution(std::ostream & out, const ColoringDistribution & dist)
{
    for (const auto & e : dist.entries)
        out << "  " << to_string(e.coloring) << "  " << to_string(e.weight) << "\n";
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Flexible DP 3-coloring toolkit"};
    app.require_subcommand(1);

    bool json_out = false;
    int jobs = 1;
    std::uint64_t budget = 1'000'000;

    // mad
    std::string graph_path;
    auto * mad_cmd = app.add_subcommand("mad", "maximum average degree and a densest subgraph");
    mad_cmd->add_option("graph", graph_path, "graph file")->required();
    mad_cmd->add_flag("--json", json_out);

    // potential
    std::string subset_text;
    auto * pot_cmd = app.add_subcommand("potential", "potential of a vertex set and per-vertex sigma");
    pot_cmd->add_option("graph", graph_path, "graph file")->required();
    pot_cmd->add_option("--subset", subset_text, "comma-separated vertices (default: all)");
    pot_cmd->add_flag("--json", json_out);

    // flex
    std::string cover_path, lists_text;
    auto * flex_cmd = app.add_subcommand("flex", "optimal flexibility for one cover");
    flex_cmd->add_option("graph", graph_path, "graph file")->required();
    flex_cmd->add_option("--cover", cover_path, "cover file (default: straight cover)");
    flex_cmd->add_option("--lists", lists_text, "comma-separated colour masks per vertex");
    flex_cmd->add_flag("--json", json_out);

    // packing
    auto * pack_cmd = app.add_subcommand("packing", "fractional packing (all marginals 1/3)");
    pack_cmd->add_option("graph", graph_path, "graph file")->required();
    pack_cmd->add_option("--cover", cover_path, "cover file (default: straight cover)");
    pack_cmd->add_flag("--json", json_out);

    // worst
    auto * worst_cmd = app.add_subcommand("worst", "minimum flexibility over all cover classes");
    worst_cmd->add_option("graph", graph_path, "graph file")->required();
    worst_cmd->add_option("--budget", budget, "cap on cover classes");
    worst_cmd->add_option("--jobs", jobs, "worker threads")->envname("FLEXDP_JOBS");
    worst_cmd->add_flag("--json", json_out);

    // gen
    std::string family_text, chains_text, out_path, cover_out_path;
    int family_m = 1;
    auto * gen_cmd = app.add_subcommand("gen", "generate a family member and its adversarial cover");
    gen_cmd->add_option("family", family_text, "im | jm | s | h5 | k4 | c2")->required();
    gen_cmd->add_option("--m", family_m, "index m for im / jm");
    gen_cmd->add_option("--chains", chains_text, "diamond chain lengths for s, comma-separated");
    gen_cmd->add_option("--out", out_path, "graph output file (default: stdout)");
    gen_cmd->add_option("--cover-out", cover_out_path, "cover output file");

    // theorem-check
    TheoremCheckOptions tc;
    std::string tsv_path;
    auto * tc_cmd = app.add_subcommand("theorem-check", "exhaustive desk-scale check of the 1/5 bound");
    tc_cmd->add_option("--min-vertices", tc.min_vertices);
    tc_cmd->add_option("--max-vertices", tc.max_vertices)->required();
    tc_cmd->add_option("--max-mult", tc.max_multiplicity)->required();
    tc_cmd->add_option("--budget", tc.budget, "cap on cover classes per graph");
    tc_cmd->add_option("--desk-cap", tc.desk_cap, "largest allowed vertex count");
    tc_cmd->add_option("--jobs", tc.jobs, "worker threads")->envname("FLEXDP_JOBS");
    tc_cmd->add_option("--tsv", tsv_path, "write the per-graph table here");
    tc_cmd->add_flag("--json", json_out);

    // discharge
    auto * dis_cmd = app.add_subcommand("discharge", "run the discharging procedure");
    dis_cmd->add_option("graph", graph_path, "graph file")->required();
    dis_cmd->add_flag("--json", json_out);

    // gadgets
    bool selftest = false;
    int samples = 1000;
    std::uint64_t seed = 1;
    std::string gadget_name, gadget_input;
    auto * gad_cmd = app.add_subcommand("gadgets", "conditional-probability gadgets");
    gad_cmd->add_flag("--selftest", selftest, "check all gadget identities on random inputs");
    gad_cmd->add_option("--samples", samples);
    gad_cmd->add_option("--seed", seed);
    gad_cmd->add_option("--eval", gadget_name, "pendent | butterfly | parallel3 | one-positive");
    gad_cmd->add_option("--p", gadget_input, "comma-separated rational input vector");

    // gap-audit
    auto * gap_cmd = app.add_subcommand("gap-audit", "subsets with potential <= boundary size");
    gap_cmd->add_option("graph", graph_path, "graph file")->required();
    gap_cmd->add_flag("--json", json_out);

    // critical
    std::string epsilon_text = "1/5";
    auto * crit_cmd = app.add_subcommand("critical", "criticality with the empty list distribution");
    crit_cmd->add_option("graph", graph_path, "graph file")->required();
    crit_cmd->add_option("--epsilon", epsilon_text, "p/q");
    crit_cmd->add_option("--budget", budget, "cap on cover classes");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        auto & out = std::cout;
        if (mad_cmd->parsed()) {
            auto file = read_graph_file(graph_path);
            auto dense = densest_subgraph(file.graph);
            if (json_out)
                out << nlohmann::json{{"mad", to_string(2 * dense.density)}, {"densest", dense.vertices}}.dump()
                    << "\n";
            else
                out << "mad = " << to_string(2 * dense.density) << "\ndensest = " << vertex_list(dense.vertices)
                    << "\n";
            return 0;
        }
        if (pot_cmd->parsed()) {
            auto file = read_graph_file(graph_path);
            std::vector<Vertex> subset;
            if (subset_text.empty())
                for (Vertex v = 0; v < file.graph.vertex_count(); ++v)
                    subset.push_back(v);
            else
                subset = parse_int_list(subset_text);
            int value = potential(file.graph, file.rho, subset);
            std::vector<int> sigmas;
            for (Vertex v = 0; v < file.graph.vertex_count(); ++v)
                sigmas.push_back(sigma(file.graph, file.rho, v));
            if (json_out)
                out << nlohmann::json{{"potential", value}, {"subset", subset}, {"sigma", sigmas}}.dump() << "\n";
            else {
                out << "potential = " << value << "\n";
                for (Vertex v = 0; v < file.graph.vertex_count(); ++v)
                    out << "sigma " << v << " = " << sigmas[static_cast<std::size_t>(v)] << "\n";
            }
            return 0;
        }
        if (flex_cmd->parsed()) {
            auto file = read_graph_file(graph_path);
            auto cover = load_cover(cover_path, file.graph);
            auto report = epsilon_star(file.graph, cover, load_lists(lists_text, file.graph));
            if (json_out)
                out << flex_report_json(report) << "\n";
            else {
                out << "epsilon_star = " << to_string(report.epsilon_star) << "\n";
                out << "colorable = " << (report.colorable ? "yes" : "no") << "\n";
                out << "distribution:\n";
                print_distribution(out, report.distribution);
                out << "worst_request:\n";
                for (const auto & w : report.worst_request)
                    out << "  " << w.vertex << " " << w.color << "  " << to_string(w.weight) << "\n";
            }
            return 0;
        }
        if (pack_cmd->parsed()) {
            auto file = read_graph_file(graph_path);
            auto packing = fractional_packing(file.graph, load_cover(cover_path, file.graph));
            if (json_out) {
                nlohmann::json j{{"exists", packing.has_value()}};
                if (packing) {
                    nlohmann::json d = nlohmann::json::array();
                    for (const auto & e : packing->entries)
                        d.push_back(nlohmann::json::array(
                            {std::vector<int>(e.coloring.begin(), e.coloring.end()), to_string(e.weight)}));
                    j["distribution"] = d;
                }
                out << j.dump() << "\n";
            }
            else {
                out << "packing = " << (packing ? "exists" : "none") << "\n";
                if (packing)
                    print_distribution(out, *packing);
            }
            return 0;
        }
        if (worst_cmd->parsed()) {
            auto file = read_graph_file(graph_path);
            auto report = min_epsilon_over_covers(file.graph, {budget, jobs, false});
            if (json_out)
                out << worst_report_json(report) << "\n";
            else {
                out << "epsilon_min = " << to_string(report.epsilon_min) << "\n";
                out << "classes = " << report.classes_evaluated << " / " << report.classes_total << "\n";
                out << "complete = " << (report.complete ? "yes" : "no") << "\n";
                out << "witness cover:\n" << serialize_cover(report.witness_cover);
            }
            return report.complete ? 0 : 1;
        }
        if (gen_cmd->parsed()) {
            FamilyMember member{parse_family(family_text), family_m, {}};
            if (!chains_text.empty())
                member.chains = parse_int_list(chains_text);
            else if (member.kind == Family::s)
                member.chains = std::vector<int>(static_cast<std::size_t>(family_m), 1);
            auto inst = gen_family(member);
            auto text = serialize_graph(inst.graph, inst.rho);
            if (out_path.empty())
                out << text;
            else
                write_text_file(out_path, text);
            if (!cover_out_path.empty())
                write_text_file(cover_out_path, serialize_cover(paper_cover(member, inst.graph)));
            return 0;
        }
        if (tc_cmd->parsed()) {
            auto report = theorem_check(tc);
            if (!tsv_path.empty())
                write_text_file(tsv_path, theorem_check_tsv(report));
            if (json_out)
                out << theorem_report_json(report) << "\n";
            else {
                out << "enumerated = " << report.enumerated << "\n";
                out << "mad < 3 = " << report.graphs.size() << "\n";
                out << "passed = " << report.passed << "\n";
                out << "flagged = " << report.flagged << "\n";
                out << "counterexamples = " << report.counterexamples << "\n";
                out << "skipped = " << report.skipped << "\n";
                for (const auto & c : report.graphs)
                    if (c.status != CheckStatus::pass)
                        out << status_name(c.status) << " " << c.code << " epsilon_min = "
                            << to_string(c.epsilon_min) << "\n";
            }
            return report.ok() ? 0 : 1;
        }
        if (dis_cmd->parsed()) {
            auto file = read_graph_file(graph_path);
            auto report = run_discharging(file.graph, file.rho);
            const auto & cls = report.classification;
            if (json_out) {
                nlohmann::json rows = nlohmann::json::array();
                for (std::size_t v = 0; v < cls.sigma.size(); ++v)
                    rows.push_back({{"vertex", v},
                                    {"class", std::string(class_name(cls.classes[v]))},
                                    {"sigma", cls.sigma[v]},
                                    {"sent", report.sent[v]},
                                    {"received", report.received[v]},
                                    {"final", report.final_charge[v]}});
                out << nlohmann::json{{"negative", "sigma < 0"},
                                      {"vertices", rows},
                                      {"conserved", report.conserved},
                                      {"ending_positive", report.ending_positive},
                                      {"assumption_violations", report.assumption_violations}}
                           .dump()
                    << "\n";
            }
            else {
                out << "negative means sigma < 0\n";
                out << "vertex\tclass\tsigma\tsent\treceived\tfinal\n";
                for (std::size_t v = 0; v < cls.sigma.size(); ++v)
                    out << v << "\t" << class_name(cls.classes[v]) << "\t" << cls.sigma[v] << "\t" << report.sent[v]
                        << "\t" << report.received[v] << "\t" << report.final_charge[v] << "\n";
                out << "conserved = " << (report.conserved ? "yes" : "no") << "\n";
                out << "ending positive = " << vertex_list(report.ending_positive) << "\n";
                for (const auto & a : report.assumption_violations)
                    out << "assumption fails: " << a << "\n";
            }
            return report.conserved ? 0 : 1;
        }
        if (gad_cmd->parsed()) {
            if (!gadget_name.empty()) {
                auto p = parse_rational_list(gadget_input);
                GadgetMatrix a;
                std::string label;
                auto three = [&] {
                    if (p.size() != 3)
                        throw InputError("this gadget takes 3 input probabilities");
                    return std::array<Rational, 3>{p[0], p[1], p[2]};
                };
                if (gadget_name == "pendent")
                    a = gadget_pendent(three());
                else if (gadget_name == "butterfly")
                    a = gadget_butterfly(three());
                else if (gadget_name == "one-positive")
                    a = gadget_one_positive(three());
                else if (gadget_name == "parallel3") {
                    if (p.size() != 6)
                        throw InputError("parallel3 takes 6 input probabilities");
                    auto r = gadget_parallel3({p[0], p[1], p[2], p[3], p[4], p[5]});
                    a = r.matrix;
                    label = r.case_label;
                }
                else
                    throw InputError("unknown gadget '" + gadget_name + "'");
                if (!label.empty())
                    out << "case = " << label << "\n";
                for (std::size_t r = 0; r < a.rows(); ++r) {
                    out << a.row_labels[r] << ":";
                    for (const auto & x : a.entries[r])
                        out << " " << to_string(x);
                    out << "\n";
                }
                out << "output =";
                for (const auto & x : a.apply(p))
                    out << " " << to_string(x);
                out << "\n";
                return 0;
            }
            if (!selftest)
                throw InputError("gadgets needs --selftest or --eval");
            if (samples < 1)
                throw InputError("--samples must be positive");
            bool ok = true;
            for (const auto & t : gadget_selftest(samples, seed)) {
                out << t.name << ": " << t.passed << "/" << t.samples << " passed";
                if (!t.first_failure.empty())
                    out << " (first failure: " << t.first_failure << ")";
                out << "\n";
                ok = ok && t.passed == t.samples;
            }
            return ok ? 0 : 1;
        }
        if (gap_cmd->parsed()) {
            auto file = read_graph_file(graph_path);
            auto subsets = gap_audit(file.graph, file.rho);
            if (json_out)
                out << nlohmann::json{{"violations", subsets}}.dump() << "\n";
            else {
                out << "violations = " << subsets.size() << "\n";
                for (const auto & s : subsets)
                    out << "  {" << vertex_list(s) << "} potential " << potential(file.graph, file.rho, s) << "\n";
            }
            return 0;
        }
        if (crit_cmd->parsed()) {
            auto file = read_graph_file(graph_path);
            auto verdict = criticality_check(file.graph, file.rho, parse_rational(epsilon_text), budget);
            out << "verdict = " << criticality_name(verdict) << "\n";
            return 0;
        }
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
