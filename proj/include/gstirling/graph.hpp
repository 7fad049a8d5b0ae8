#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gstirling {

// Simple finite undirected graph on vertices 1..n; edges stored as
// ordered pairs u < v.
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;

  static Graph empty(int n);

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  int edge_count() const { return static_cast<int>(edges.size()); }

  // Neighbor lists, 1-based (index 0 unused).
  std::vector<std::vector<int>> adjacency() const;
  // Connected components as sorted vertex lists, ordered by least vertex.
  std::vector<std::vector<int>> components() const;
  // Induced subgraph on the given vertices, relabeled 1..|S| in sorted order.
  Graph induced(const std::vector<int>& vertices) const;

  bool is_connected() const;
  bool is_acyclic() const;

  bool operator==(const Graph& o) const = default;
};

// Text format: header "n <count>", one edge per line "u v" (1-indexed),
// "#" starts a comment. Throws std::runtime_error on malformed input.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

// Bipartite graph with labeled sides; an edge (i, j) joins left label i
// to right label j.
struct BipartiteGraph {
  std::vector<int> left_labels;
  std::vector<int> right_labels;
  std::set<std::pair<int, int>> edges;

  int degree_left(int label) const;
  int degree_right(int label) const;
  int edge_count() const { return static_cast<int>(edges.size()); }
};

}  // namespace gstirling
