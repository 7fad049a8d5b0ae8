#include "gstirling/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace gstirling {

Graph Graph::empty(int n) {
  Graph g;
  g.n = n;
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > n || v > n) {
    throw std::runtime_error("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
  }
  if (u == v) throw std::runtime_error("loop edge at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  edges.insert({u, v});
}

bool Graph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edges.count({u, v}) > 0;
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v || b == v) ++d;
  }
  return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<std::vector<int>> Graph::components() const {
  const auto adj = adjacency();
  std::vector<int> comp(n + 1, -1);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int v : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> index(n + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i + 1);
  Graph g = Graph::empty(static_cast<int>(sorted.size()));
  for (const auto& [u, v] : edges) {
    if (index[u] > 0 && index[v] > 0) g.add_edge(index[u], index[v]);
  }
  return g;
}

bool Graph::is_connected() const { return n <= 1 || components().size() == 1; }

bool Graph::is_acyclic() const {
  // A graph is a forest iff every component has |edges| = |vertices| - 1;
  // equivalently n - #components = #edges.
  return n - static_cast<int>(components().size()) == edge_count();
}

Graph parse_graph(std::istream& in) {
  std::string line;
  bool have_header = false;
  Graph g;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line
    if (!have_header) {
      int count;
      if (first != "n" || !(ls >> count) || count < 0) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected header \"n <count>\"");
      }
      g.n = count;
      have_header = true;
      continue;
    }
    int u, v;
    std::istringstream es(line);
    if (!(es >> u >> v)) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected edge \"u v\"");
    }
    g.add_edge(u, v);
  }
  if (!have_header) throw std::runtime_error("missing header \"n <count>\"");
  return g;
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.n) + "\n";
  for (const auto& [u, v] : g.edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

int BipartiteGraph::degree_left(int label) const {
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == label) ++d;
  }
  return d;
}

int BipartiteGraph::degree_right(int label) const {
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (b == label) ++d;
  }
  return d;
}

}  // namespace gstirling
