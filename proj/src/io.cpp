#include "idcode/io.hpp"

#include <charconv>
#include <fstream>
#include <string_view>
#include <vector>

#include "idcode/errors.hpp"

namespace idcode::io {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t number(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
  enum class Format { unknown, edge_list, dimacs };
  Format format = Format::unknown;
  std::size_t n = 0, m = 0, line_no = 0;
  std::vector<Edge> edges;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto tokens = split(view);
    if (tokens.empty()) continue;

    if (format == Format::unknown) {
      if (tokens[0] == "c") continue;
      if (tokens[0] == "p") {
        if (tokens.size() != 4 || tokens[1] != "edge") throw ParseError(line_no, "expected 'p edge n m'");
        format = Format::dimacs;
        n = number(tokens[2], line_no);
        m = number(tokens[3], line_no);
      } else {
        if (tokens.size() != 2) throw ParseError(line_no, "expected header 'n m'");
        format = Format::edge_list;
        n = number(tokens[0], line_no);
        m = number(tokens[1], line_no);
      }
      edges.reserve(m);
      continue;
    }

    if (format == Format::dimacs) {
      if (tokens[0] == "c") continue;
      if (tokens[0] != "e" || tokens.size() != 3) throw ParseError(line_no, "expected 'e u v'");
      const std::size_t u = number(tokens[1], line_no);
      const std::size_t v = number(tokens[2], line_no);
      if (u == 0 || v == 0) throw ParseError(line_no, "DIMACS ids are 1-based");
      edges.emplace_back(u - 1, v - 1);
    } else {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
      edges.emplace_back(number(tokens[0], line_no), number(tokens[1], line_no));
    }
  }

  if (format == Format::unknown) throw ParseError(line_no, "missing header");
  if (edges.size() != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return from_edge_list(n, edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_graph(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace idcode::io
