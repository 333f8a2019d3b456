#include "md/io.hpp"

#include <algorithm>
#include <sstream>

#include "md/errors.hpp"

namespace md {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string text;
};

// Data lines with comments ("#" to end of line) and blanks stripped.
std::vector<Line> data_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::size_t last = line.find_last_not_of(" \t\r");
    out.push_back({number, line.substr(first, last - first + 1)});
  }
  return out;
}

int parse_int_field(const std::string& token, const Line& line) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line.number) +
                         ": expected an integer, got \"" + token + "\"",
                     line.number);
  }
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct ParsedDocument {
  Graph graph;
  std::vector<std::pair<int, int>> edge_color_lines;  // (edge index, color)
  bool has_colors = false;
};

ParsedDocument parse_document(const std::string& text) {
  const std::vector<Line> lines = data_lines(text);
  if (lines.empty()) throw ParseError("empty graph document", 1);

  const std::vector<std::string> head = split_fields(lines[0].text);
  if (head.size() != 2 || head[0] != "n") {
    throw ParseError("line " + std::to_string(lines[0].number) +
                         ": expected header \"n <count>\"",
                     lines[0].number);
  }
  const int n = parse_int_field(head[1], lines[0]);
  if (n < 0) {
    throw ParseError("line " + std::to_string(lines[0].number) +
                         ": negative vertex count",
                     lines[0].number);
  }

  std::vector<std::pair<int, int>> edges;
  ParsedDocument doc;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::vector<std::string> fields = split_fields(line.text);
    if (!fields.empty() && fields[0] == "e") {
      if (fields.size() != 3) {
        throw ParseError("line " + std::to_string(line.number) +
                             ": expected \"e <edge-index> <color>\"",
                         line.number);
      }
      doc.has_colors = true;
      doc.edge_color_lines.emplace_back(parse_int_field(fields[1], line),
                                        parse_int_field(fields[2], line));
      continue;
    }
    if (doc.has_colors) {
      throw ParseError("line " + std::to_string(line.number) +
                           ": edge line after coloring lines",
                       line.number);
    }
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line.number) +
                           ": expected \"u v\"",
                       line.number);
    }
    const int u = parse_int_field(fields[0], line);
    const int v = parse_int_field(fields[1], line);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line.number) +
                           ": endpoint out of range [0, " +
                           std::to_string(n) + ")",
                       line.number);
    }
    if (u == v) {
      throw ParseError("line " + std::to_string(line.number) + ": self-loop",
                       line.number);
    }
    for (const auto& [a, b] : edges) {
      if (std::minmax(u, v) == std::minmax(a, b)) {
        throw ParseError("line " + std::to_string(line.number) +
                             ": duplicate edge",
                         line.number);
      }
    }
    edges.emplace_back(u, v);
  }
  doc.graph = Graph(n, edges);
  return doc;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  ParsedDocument doc = parse_document(text);
  if (doc.has_colors) {
    throw ParseError("unexpected coloring lines in an edge-list document", 1);
  }
  return std::move(doc.graph);
}

std::string emit_edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (const auto& [u, v] : edges) out << u << " " << v << "\n";
  return out.str();
}

ColoredGraph parse_colored_graph(const std::string& text) {
  ParsedDocument doc = parse_document(text);
  const Graph& g = doc.graph;
  EdgeColoring c;
  c.colors.assign(g.m(), 0);
  for (const auto& [index, color] : doc.edge_color_lines) {
    if (index < 0 || index >= g.m()) {
      throw ParseError("coloring references edge " + std::to_string(index) +
                           " outside [0, " + std::to_string(g.m()) + ")",
                       1);
    }
    if (c.colors[index] != 0) {
      throw ParseError("edge " + std::to_string(index) + " colored twice", 1);
    }
    if (color <= 0) {
      throw ParseError("edge " + std::to_string(index) +
                           " given non-positive color",
                       1);
    }
    c.colors[index] = color;
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (c.colors[e] == 0) {
      throw ParseError("edge " + std::to_string(e) + " has no color line", 1);
    }
  }
  return {std::move(doc.graph), std::move(c)};
}

std::string emit_colored_graph(const Graph& g, const EdgeColoring& c) {
  validate_coloring(g, c);
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  for (EdgeId e = 0; e < g.m(); ++e) {
    out << "e " << e << " " << c.colors[e] << "\n";
  }
  return out.str();
}

}  // namespace md
