#include "racg/io.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "racg/errors.hpp"

namespace racg {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace

PresentationGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::vector<Token>, int>> edge_lines;
  int vertices_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    const std::vector<Token> tokens = split(line);
    if (tokens.empty() || tokens[0].text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens[0].text == "vertices") {
      if (vertices_line != 0) {
        throw ParseError("second vertices line (first on line " + std::to_string(vertices_line) + ")", line_no,
                         tokens[0].column);
      }
      vertices_line = line_no;
      std::set<std::string_view> seen;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!seen.insert(tokens[i].text).second) {
          throw ParseError("duplicate vertex '" + std::string(tokens[i].text) + "'", line_no, tokens[i].column);
        }
        names.emplace_back(tokens[i].text);
      }
      try {
        PresentationGraph probe(names);
      } catch (const InputError& e) {
        throw ParseError(e.what(), line_no, tokens[0].column);
      }
    } else if (tokens[0].text == "edge") {
      if (vertices_line == 0) throw ParseError("edge before the vertices line", line_no, tokens[0].column);
      if (tokens.size() != 3) {
        throw ParseError("edge needs exactly two vertices", line_no, tokens[0].column);
      }
      edge_lines.emplace_back(tokens, line_no);
    } else {
      throw ParseError("unknown directive '" + std::string(tokens[0].text) + "'", line_no, tokens[0].column);
    }
    if (end == text.size()) break;
  }
  if (vertices_line == 0) throw ParseError("missing vertices line", line_no, 1);

  PresentationGraph graph(names);
  for (const auto& [tokens, line] : edge_lines) {
    int ends[2];
    for (int k = 0; k < 2; ++k) {
      const Token& t = tokens[static_cast<std::size_t>(k) + 1];
      ends[k] = graph.index_of(t.text);
      if (ends[k] < 0) throw ParseError("unknown vertex '" + std::string(t.text) + "'", line, t.column);
    }
    if (ends[0] == ends[1]) throw ParseError("self-loop on '" + std::string(tokens[1].text) + "'", line, tokens[2].column);
    if (graph.adjacent(ends[0], ends[1])) {
      throw ParseError("duplicate edge " + std::string(tokens[1].text) + " " + std::string(tokens[2].text), line,
                       tokens[0].column);
    }
    graph.add_edge(ends[0], ends[1]);
  }
  return graph;
}

std::string serialize_graph(const PresentationGraph& graph) {
  std::string out = "vertices";
  for (const std::string& n : graph.names()) out += " " + n;
  out += "\n";
  for (const auto& [u, v] : graph.edges()) out += "edge " + graph.name(u) + " " + graph.name(v) + "\n";
  return out;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"C4", "C5", "C6", "K3", "P3", "BOWTIE", "SUS4", "G7"};
  return names;
}

PresentationGraph fixture(std::string_view name) {
  if (name == "C4") return parse_graph("vertices a b c d\nedge a b\nedge b c\nedge c d\nedge a d\n");
  if (name == "C5") return parse_graph("vertices a b c d e\nedge a b\nedge b c\nedge c d\nedge d e\nedge a e\n");
  if (name == "C6") {
    return parse_graph("vertices a b c d e f\nedge a b\nedge b c\nedge c d\nedge d e\nedge e f\nedge a f\n");
  }
  if (name == "K3") return parse_graph("vertices a b c\nedge a b\nedge a c\nedge b c\n");
  if (name == "P3") return parse_graph("vertices a b c\nedge a b\nedge b c\n");
  if (name == "BOWTIE") {
    return parse_graph("vertices a b z c d\nedge a b\nedge a z\nedge b z\nedge c d\nedge c z\nedge d z\n");
  }
  if (name == "SUS4") {
    return parse_graph(
        "vertices a b c d s t\nedge a b\nedge b c\nedge c d\nedge a d\n"
        "edge a s\nedge b s\nedge c s\nedge d s\nedge a t\nedge b t\nedge c t\nedge d t\n");
  }
  if (name == "G7") {
    return parse_graph(
        "vertices c1 c2 k1 k2 x y z\n"
        "edge c1 k1\nedge c1 k2\nedge c2 k1\nedge c2 k2\n"
        "edge x c1\nedge x c2\nedge y c1\nedge y c2\nedge z k1\nedge z k2\n");
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace racg
