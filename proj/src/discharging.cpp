#include "flexdp/discharging.hpp"

#include "flexdp/errors.hpp"

#include <queue>

namespace flexdp {

std::string_view class_name(VertexClass c)
{
    switch (c) {
    case VertexClass::positive:
        return "positive";
    case VertexClass::conductive:
        return "conductive";
    case VertexClass::insulated:
        return "insulated";
    case VertexClass::unclassified:
        return "unclassified";
    }
    return "?";
}

VertexClassification classify(const Multigraph & g, const PotentialAssignment & rho)
{
    if (rho.size() != g.vertex_count())
        throw InputError("potential assignment size does not match the graph");
    VertexClassification out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int s = sigma(g, rho, v);
        const int d = g.degree(v);
        const int r = rho.rho(v);
        VertexClass c = VertexClass::unclassified;
        if (s >= 1)
            c = VertexClass::positive;
        else if (s <= -2)
            c = VertexClass::insulated;
        else if (((d == 2 || d == 3) && r == 2 * d) || (d == 2 && r == 3))
            c = VertexClass::conductive;
        out.classes.push_back(c);
        out.sigma.push_back(s);
    }
    return out;
}

namespace {

/// Vertices reachable from u along paths whose internal vertices are conductive.
std::vector<bool> conductive_reach(const Multigraph & g, const VertexClassification & cls, Vertex u)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<bool> reached(n, false), expanded(n, false);
    std::queue<Vertex> queue;
    queue.push(u);
    expanded[static_cast<std::size_t>(u)] = true;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(x)) {
            if (w == u)
                continue;
            reached[static_cast<std::size_t>(w)] = true;
            if (!expanded[static_cast<std::size_t>(w)] &&
                cls.classes[static_cast<std::size_t>(w)] == VertexClass::conductive) {
                expanded[static_cast<std::size_t>(w)] = true;
                queue.push(w);
            }
        }
    }
    return reached;
}

} // namespace

bool conductively_connected(const Multigraph & g, const PotentialAssignment & rho, Vertex u, Vertex v)
{
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
        throw InputError("conductive connectivity needs two distinct vertices");
    return conductive_reach(g, classify(g, rho), u)[static_cast<std::size_t>(v)];
}

DischargeReport run_discharging(const Multigraph & g, const PotentialAssignment & rho)
{
    DischargeReport report;
    report.classification = classify(g, rho);
    const auto & cls = report.classification;
    const int n = g.vertex_count();
    const auto un = static_cast<std::size_t>(n);
    report.sent.assign(un, 0);
    report.received.assign(un, 0);

    std::vector<std::vector<bool>> reach(un);
    for (Vertex v = 0; v < n; ++v)
        reach[static_cast<std::size_t>(v)] = conductive_reach(g, cls, v);
    auto connected = [&](Vertex a, Vertex b) {
        return reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };

    for (Vertex v = 0; v < n; ++v) {
        if (cls.sigma[static_cast<std::size_t>(v)] < 1)
            continue;
        for (Vertex w = 0; w < n; ++w)
            if (w != v && cls.negative(w) && connected(v, w)) {
                ++report.sent[static_cast<std::size_t>(v)];
                ++report.received[static_cast<std::size_t>(w)];
            }
    }

    int total = 0;
    for (std::size_t v = 0; v < un; ++v) {
        int f = cls.sigma[v] - report.sent[v] + report.received[v];
        report.final_charge.push_back(f);
        total += f;
        if (f > 0)
            report.ending_positive.push_back(static_cast<Vertex>(v));
    }
    report.conserved = total == potential(g, rho);

    auto name = [](Vertex v) { return "vertex " + std::to_string(v); };
    for (Vertex v = 0; v < n; ++v) {
        const int s = cls.sigma[static_cast<std::size_t>(v)];
        if (s > 2)
            report.assumption_violations.push_back(name(v) + " has sigma " + std::to_string(s) + " > 2");
        if (s >= 1) {
            bool insulated = false;
            int negatives = 0;
            for (Vertex w = 0; w < n; ++w) {
                if (w == v || !connected(v, w))
                    continue;
                if (w > v && cls.sigma[static_cast<std::size_t>(w)] >= 1)
                    report.assumption_violations.push_back(name(v) + " and " + name(w) +
                                                           " are positive and conductively connected");
                if (cls.classes[static_cast<std::size_t>(w)] == VertexClass::insulated)
                    insulated = true;
                if (cls.negative(w))
                    ++negatives;
            }
            if (!insulated)
                report.assumption_violations.push_back(name(v) +
                                                       " is positive but reaches no insulated vertex");
            if (s == 2 && negatives < 2)
                report.assumption_violations.push_back(name(v) +
                                                       " has sigma 2 but reaches fewer than two negative vertices");
        }
        if (s < 0 && report.received[static_cast<std::size_t>(v)] > -s)
            report.assumption_violations.push_back(name(v) + " is reached by more than " + std::to_string(-s) +
                                                   " positive vertices");
    }
    return report;
}

} // namespace flexdp
