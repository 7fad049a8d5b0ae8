#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "gstirling/dyck.hpp"
#include "gstirling/graph.hpp"

namespace gstirling {

struct QtDecomposition;
using QtNode = std::shared_ptr<const QtDecomposition>;

// Construction term of a quasi-threshold graph: a single vertex, a
// dominating vertex added over a child term, or a disjoint union of two or
// more connected terms (never a union directly under a union). Vertex
// labels are recorded so the source graph can be rebuilt exactly.
struct QtDecomposition {
  struct Leaf {
    int vertex;
  };
  struct Dom {
    int vertex;
    QtNode child;
  };
  struct Union {
    std::vector<QtNode> children;
  };

  std::variant<Leaf, Dom, Union> node;

  int vertex_count() const;
  std::vector<int> vertices() const;  // sorted
  // Rebuilds the graph this term denotes, on 1..n.
  Graph to_graph(int n) const;
};

QtNode qt_leaf(int vertex);
QtNode qt_dom(int vertex, QtNode child);
QtNode qt_union(std::vector<QtNode> children);

// G_w plus its construction term. Vertex i is the i-th x of the word; a
// vertex is adjacent to exactly the vertices nested inside its x...D span.
std::pair<Graph, QtNode> word_to_graph(const DyckWord& w);

// Canonical word w with G_w isomorphic to g. Children of every union are
// ordered by ascending vertex count, then byte-lexicographic rendered
// sub-word; with several universal vertices the lowest label is peeled
// first. Throws NotQuasiThreshold.
DyckWord graph_to_word(const Graph& g);

// Decomposes g or throws NotQuasiThreshold with a witness component.
// Components become union children (ordered by least vertex); a connected
// graph on >= 2 vertices must have a universal vertex, peeled one at a time.
QtNode recognize_qt(const Graph& g);

// H_w on {1..n}: edge ij (i < j) iff (i, j) is below the path and above
// the diagonal.
Graph word_to_clique_union(const DyckWord& w);

// One vertex interval {c..r} per turning square (c, r); cliques on these
// intervals cover E(H_w) exactly.
std::vector<std::vector<int>> clique_cover_from_turns(const DyckWord& w);

// Gamma_w: left x_1..x_n, right y_1..y_n, edge (i, j) iff (i, j) in B_w.
BipartiteGraph word_to_bipartite(const DyckWord& w);

struct StripResult {
  BipartiteGraph graph;  // all isolated vertices removed, labels kept
  int ell;               // isolated right vertices (leading x-run of w)
  int m;                 // isolated left vertices (trailing D-run of w)
};

// Removes isolated vertices; the matching sequence is unchanged.
StripResult strip_isolated(const BipartiteGraph& g);

}  // namespace gstirling
