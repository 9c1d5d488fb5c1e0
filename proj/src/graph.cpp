#include "beepmis/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "beepmis/error.hpp"
#include "beepmis/probability.hpp"

namespace beepmis {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(node_count, 0);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw InvalidParameter("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") out of range for " + std::to_string(node_count) + " nodes");
    }
    if (e.u == e.v) throw InvalidParameter("self-loop at node " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[node_count]);

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      const auto a = std::min<std::size_t>(v, *dup);
      const auto b = std::max<std::size_t>(v, *dup);
      throw InvalidParameter("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < node_count(); ++v) best = std::max(best, degree(static_cast<NodeId>(v)));
  return best;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  auto nbrs = neighbours(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbours(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph complete_graph(std::size_t d) {
  if (d == 0) throw InvalidParameter("complete_graph: d must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(d * (d - 1) / 2);
  for (NodeId u = 0; u < d; ++u) {
    for (NodeId v = u + 1; v < d; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(d, edges);
}

Graph clique_family(std::size_t m) {
  if (m == 0) throw InvalidParameter("clique_family: m must be >= 1");
  std::vector<Edge> edges;
  NodeId base = 0;
  for (std::size_t d = 1; d <= m; ++d) {
    for (std::size_t copy = 0; copy < m; ++copy) {
      for (NodeId i = 0; i < d; ++i) {
        for (NodeId j = i + 1; j < d; ++j) edges.push_back({base + i, base + j});
      }
      base += static_cast<NodeId>(d);
    }
  }
  return Graph::from_edges(base, edges);
}

Graph erdos_renyi(std::size_t n, double p_edge, std::uint64_t seed) {
  if (n == 0) throw InvalidParameter("erdos_renyi: n must be >= 1");
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) {
    throw InvalidParameter("erdos_renyi: edge probability must be in [0,1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p_edge * static_cast<double>(n * (n - 1) / 2)) + 16);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p_edge) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidParameter("grid_graph: dimensions must be >= 1");
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw InvalidParameter("path_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack;
  std::size_t components = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

namespace {

// Splits a line into whitespace-separated unsigned decimal integers.
std::vector<std::uint64_t> parse_integers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    const std::string_view token = line.substr(i, j - i);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "malformed integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  if (lines.empty() || is_blank(lines[0])) throw ParseError(1, "missing header 'n m'");
  const auto header = parse_integers(lines[0], 1);
  if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  if (n > std::numeric_limits<NodeId>::max()) throw ParseError(1, "node count too large");

  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t line_no = 1;
  for (; line_no < lines.size() && edges.size() < m; ++line_no) {
    const std::size_t here = line_no + 1;
    const auto fields = parse_integers(lines[line_no], here);
    if (fields.size() != 2) throw ParseError(here, "edge line must be 'u v'");
    const std::uint64_t u = fields[0];
    const std::uint64_t v = fields[1];
    if (u >= n || v >= n) throw ParseError(here, "node index out of range");
    if (u == v) throw ParseError(here, "self-loop at node " + std::to_string(u));
    const auto a = static_cast<NodeId>(std::min(u, v));
    const auto b = static_cast<NodeId>(std::max(u, v));
    if (!seen.insert((std::uint64_t{a} << 32) | b).second) {
      throw ParseError(here, "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (edges.size() < m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  for (; line_no < lines.size(); ++line_no) {
    if (!is_blank(lines[line_no])) throw ParseError(line_no + 1, "unexpected content after edges");
  }
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write graph file '" + path + "'");
  out << write_edge_list(g);
}

}  // namespace beepmis
