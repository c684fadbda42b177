#include "twopath/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "twopath/error.hpp"

namespace twopath {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

DiGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_data_line(in, line, line_no)) throw Error(ErrorKind::Parse, "missing 'n m' header");

  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string rest;
    if (!(hs >> n >> m) || (hs >> rest) || n < 0 || m < 0) parse_error(line_no, "expected 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no))
      throw Error(ErrorKind::Parse, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream es(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(es >> u >> v) || (es >> rest) || u < 0 || v < 0) parse_error(line_no, "expected 'u v'");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (next_data_line(in, line, line_no)) parse_error(line_no, "trailing data after the edge list");
  return build_graph(static_cast<std::size_t>(n), edges);
}

DiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const DiGraph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  out << g.size() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.source << ' ' << e.target << '\n';
}

void write_graph_file(const std::string& path, const DiGraph& g, const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  write_graph(out, g, comments);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

}  // namespace twopath
