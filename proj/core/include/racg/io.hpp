#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// Graph file: `#` comment lines, one `vertices n1 n2 ...` line, then
/// `edge u v` lines. Errors are ParseErrors with 1-based positions.
PresentationGraph parse_graph(std::string_view text);

/// Canonical text: the vertices line followed by edges in index order.
std::string serialize_graph(const PresentationGraph& graph);

/// Built-in graphs: C4, C5, C6, K3, P3, BOWTIE, SUS4, G7.
const std::vector<std::string>& fixture_names();
/// Throws InputError for an unknown name.
PresentationGraph fixture(std::string_view name);

}  // namespace racg
