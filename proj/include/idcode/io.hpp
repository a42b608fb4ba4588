#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "idcode/graph.hpp"

// Graph files. Two input formats are accepted:
//   edge list: first line "n m", then m lines "u v" with 0-based ids;
//              '#' starts a comment
//   DIMACS:    "p edge n m", then "e u v" lines with 1-based ids;
//              lines starting with 'c' are comments
// The format is detected from the first non-comment line.
namespace idcode::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Throws ParseError on malformed input, PreconditionError on loops or
// out-of-range ids.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

// Edge-list format, edges ascending.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace idcode::io
