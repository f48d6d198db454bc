#include "sigidx/errors.hpp"
#include "sigidx/graph.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace sigidx {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_vertex(const std::string& tok, unsigned long long& out) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception&) {
    return false;
  }
  return out <= 0xFFFFFFFEull;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<std::size_t> declared_n;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_seen;
  std::size_t max_id_plus_one = 0;
  bool saw_edge = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("n=", 0) == 0) {
        if (saw_edge) throw ParseError(line_no, "'# n=' header must precede all edges");
        if (declared_n) throw ParseError(line_no, "duplicate '# n=' header");
        unsigned long long n = 0;
        if (!parse_vertex(trim(body.substr(2)), n))
          throw ParseError(line_no, "malformed vertex count in header '" + line + "'");
        declared_n = static_cast<std::size_t>(n);
      }
      continue;
    }

    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra))
      throw ParseError(line_no, "expected exactly two vertex ids, got '" + line + "'");
    unsigned long long u = 0, v = 0;
    if (!parse_vertex(a, u) || !parse_vertex(b, v))
      throw ParseError(line_no, "vertex ids must be non-negative integers: '" + line + "'");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + a);
    if (declared_n && (u >= *declared_n || v >= *declared_n))
      throw ParseError(line_no, "vertex id out of range for n=" + std::to_string(*declared_n));

    Edge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
    if (auto [it, inserted] = first_seen.emplace(e, line_no); !inserted)
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " +
                                    std::to_string(e.v) + " (first on line " +
                                    std::to_string(it->second) + ")");
    edges.push_back(e);
    saw_edge = true;
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, e.v + 1);
  }
  return Graph(declared_n.value_or(max_id_plus_one), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace sigidx
