#pragma once

#include "flexdp/multigraph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace flexdp {

struct GraphFile {
    Multigraph graph;
    PotentialAssignment rho;
};

/// Line-oriented format:
///   vertices N
///   edge U V MULT        (repeated lines add up)
///   rho V {3|4|6}        (default 6)
///   basepoint V {0|1|2}  (default 0)
/// '#' starts a comment. Throws InputError with the offending line number.
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string & path);

std::string serialize_graph(const Multigraph & g, const PotentialAssignment & rho);
std::string serialize_graph(const Multigraph & g);

/// Whole-file read helper shared by the parsers. Throws InputError.
std::string read_text_file(const std::string & path);
void write_text_file(const std::string & path, std::string_view contents);

} // namespace flexdp
