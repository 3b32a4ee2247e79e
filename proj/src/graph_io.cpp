#include "flexdp/graph_io.hpp"

#include "flexdp/errors.hpp"
#include "text_lines.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace flexdp {

GraphFile parse_graph(std::string_view text)
{
    std::optional<int> vertex_count;
    std::vector<EdgeSpec> edges;
    std::vector<std::pair<Vertex, int>> rho_lines, basepoint_lines;

    for (const auto & line : detail::tokenized_lines(text)) {
        const auto & t = line.tokens;
        auto fail = [&](const std::string & what) {
            return InputError("line " + std::to_string(line.number) + ": " + what);
        };
        auto integer = [&](std::size_t i) {
            try {
                std::size_t used = 0;
                int value = std::stoi(t[i], &used);
                if (used != t[i].size())
                    throw fail("malformed integer '" + t[i] + "'");
                return value;
            }
            catch (const std::logic_error &) {
                throw fail("malformed integer '" + t[i] + "'");
            }
        };

        if (t[0] == "vertices") {
            if (t.size() != 2)
                throw fail("expected 'vertices N'");
            if (vertex_count)
                throw fail("duplicate 'vertices' line");
            vertex_count = integer(1);
            if (*vertex_count < 0)
                throw fail("negative vertex count");
        }
        else if (t[0] == "edge") {
            if (t.size() != 4 && t.size() != 3)
                throw fail("expected 'edge U V MULT'");
            edges.push_back({integer(1), integer(2), t.size() == 4 ? integer(3) : 1});
        }
        else if (t[0] == "rho") {
            if (t.size() != 3)
                throw fail("expected 'rho V VALUE'");
            rho_lines.emplace_back(integer(1), integer(2));
        }
        else if (t[0] == "basepoint") {
            if (t.size() != 3)
                throw fail("expected 'basepoint V COLOR'");
            basepoint_lines.emplace_back(integer(1), integer(2));
        }
        else
            throw fail("unknown directive '" + t[0] + "'");
    }

    if (!vertex_count)
        throw InputError("missing 'vertices N' line");

    GraphFile result{Multigraph(*vertex_count, edges), PotentialAssignment::uniform(*vertex_count)};
    for (auto [v, value] : rho_lines) {
        if (!result.graph.has_vertex(v))
            throw InputError("rho line names vertex " + std::to_string(v) + " out of range");
        result.rho.set_rho(v, value);
    }
    for (auto [v, color] : basepoint_lines) {
        if (!result.graph.has_vertex(v))
            throw InputError("basepoint line names vertex " + std::to_string(v) + " out of range");
        result.rho.set_basepoint(v, color);
    }
    return result;
}

std::string read_text_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string & path, std::string_view contents)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << contents;
}

GraphFile read_graph_file(const std::string & path)
{
    return parse_graph(read_text_file(path));
}

std::string serialize_graph(const Multigraph & g, const PotentialAssignment & rho)
{
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto & [pair, mult] : g.pairs())
        out << "edge " << pair.lo << " " << pair.hi << " " << mult << "\n";
    for (Vertex v = 0; v < rho.size(); ++v)
        if (rho.rho(v) != 6)
            out << "rho " << v << " " << rho.rho(v) << "\n";
    for (Vertex v = 0; v < rho.size(); ++v)
        if (rho.basepoint(v) != 0)
            out << "basepoint " << v << " " << rho.basepoint(v) << "\n";
    return out.str();
}

std::string serialize_graph(const Multigraph & g)
{
    return serialize_graph(g, PotentialAssignment::uniform(g.vertex_count()));
}

} // namespace flexdp
