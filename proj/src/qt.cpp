#include "gstirling/qt.hpp"

#include <algorithm>
#include <stdexcept>

#include "gstirling/errors.hpp"

namespace gstirling {

NotQuasiThreshold::NotQuasiThreshold(std::vector<int> component)
    : std::runtime_error("not quasi-threshold: component {" + [&component] {
        std::string s;
        for (std::size_t i = 0; i < component.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(component[i]);
        }
        return s;
      }() + "} has no universal vertex"),
      witness(std::move(component)) {}

int QtDecomposition::vertex_count() const {
  if (std::holds_alternative<Leaf>(node)) return 1;
  if (const auto* d = std::get_if<Dom>(&node)) return 1 + d->child->vertex_count();
  int total = 0;
  for (const QtNode& c : std::get<Union>(node).children) total += c->vertex_count();
  return total;
}

std::vector<int> QtDecomposition::vertices() const {
  std::vector<int> out;
  if (const auto* l = std::get_if<Leaf>(&node)) {
    out.push_back(l->vertex);
  } else if (const auto* d = std::get_if<Dom>(&node)) {
    out = d->child->vertices();
    out.push_back(d->vertex);
  } else {
    for (const QtNode& c : std::get<Union>(node).children) {
      auto sub = c->vertices();
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph QtDecomposition::to_graph(int n) const {
  Graph g = Graph::empty(n);
  // A dominating vertex is adjacent to every vertex of its child term.
  auto walk = [&g](auto&& self, const QtDecomposition& t) -> std::vector<int> {
    if (const auto* l = std::get_if<Leaf>(&t.node)) return {l->vertex};
    if (const auto* d = std::get_if<Dom>(&t.node)) {
      std::vector<int> below = self(self, *d->child);
      for (int v : below) g.add_edge(d->vertex, v);
      below.push_back(d->vertex);
      return below;
    }
    std::vector<int> all;
    for (const QtNode& c : std::get<Union>(t.node).children) {
      auto sub = self(self, *c);
      all.insert(all.end(), sub.begin(), sub.end());
    }
    return all;
  };
  walk(walk, *this);
  return g;
}

QtNode qt_leaf(int vertex) {
  return std::make_shared<QtDecomposition>(QtDecomposition{QtDecomposition::Leaf{vertex}});
}

QtNode qt_dom(int vertex, QtNode child) {
  return std::make_shared<QtDecomposition>(
      QtDecomposition{QtDecomposition::Dom{vertex, std::move(child)}});
}

QtNode qt_union(std::vector<QtNode> children) {
  if (children.size() == 1) return children.front();
  return std::make_shared<QtDecomposition>(
      QtDecomposition{QtDecomposition::Union{std::move(children)}});
}

namespace {

// Term for the x-indexed forest spanned by word positions [from, to);
// xs counts x's seen before `from`. Returns the term and the vertex list.
struct WordParser {
  const std::vector<Step>& steps;
  int x_index = 0;

  // Parses one balanced factor x ... D starting at the current position.
  QtNode factor(std::size_t& pos) {
    const int v = ++x_index;  // the x opening this factor
    ++pos;                    // consume the x
    std::vector<QtNode> inner;
    while (steps[pos] != Step::D) inner.push_back(factor(pos));
    ++pos;  // consume the matching D
    if (inner.empty()) return qt_leaf(v);
    return qt_dom(v, qt_union(std::move(inner)));
  }
};

}  // namespace

std::pair<Graph, QtNode> word_to_graph(const DyckWord& w) {
  WordParser parser{w.steps()};
  std::vector<QtNode> roots;
  std::size_t pos = 0;
  while (pos < w.length()) roots.push_back(parser.factor(pos));
  QtNode term = qt_union(std::move(roots));
  return {term->to_graph(w.n()), term};
}

namespace {

std::vector<int> universal_vertices(const Graph& g, const std::vector<int>& comp,
                                    const std::vector<std::vector<int>>& adj) {
  std::vector<int> out;
  for (int v : comp) {
    std::size_t within = 0;
    for (int u : adj[v]) {
      if (std::binary_search(comp.begin(), comp.end(), u)) ++within;
    }
    if (within == comp.size() - 1) out.push_back(v);
  }
  return out;
}

QtNode decompose(const Graph& g, std::vector<int> comp,
                 const std::vector<std::vector<int>>& adj) {
  if (comp.size() == 1) return qt_leaf(comp.front());

  // Split into connected components inside `comp`.
  std::vector<char> in_comp(g.n + 1, 0), seen(g.n + 1, 0);
  for (int v : comp) in_comp[v] = 1;
  std::vector<std::vector<int>> parts;
  for (int s : comp) {
    if (seen[s]) continue;
    parts.emplace_back();
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      parts.back().push_back(u);
      for (int v : adj[u]) {
        if (in_comp[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(parts.back().begin(), parts.back().end());
  }

  if (parts.size() > 1) {
    std::vector<QtNode> children;
    children.reserve(parts.size());
    for (auto& p : parts) children.push_back(decompose(g, std::move(p), adj));
    return qt_union(std::move(children));
  }

  const std::vector<int> universal = universal_vertices(g, comp, adj);
  if (universal.empty()) throw NotQuasiThreshold(comp);
  const int v = universal.front();  // lowest label first
  std::vector<int> rest;
  rest.reserve(comp.size() - 1);
  for (int u : comp) {
    if (u != v) rest.push_back(u);
  }
  return qt_dom(v, decompose(g, std::move(rest), adj));
}

}  // namespace

QtNode recognize_qt(const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("recognize_qt: empty graph");
  std::vector<int> all(g.n);
  for (int v = 1; v <= g.n; ++v) all[v - 1] = v;
  return decompose(g, std::move(all), g.adjacency());
}

namespace {

// Canonical rendering: union children ordered by ascending vertex count,
// then byte-lexicographic rendered sub-word.
std::string render_canonical(const QtNode& t) {
  if (std::holds_alternative<QtDecomposition::Leaf>(t->node)) return "xD";
  if (const auto* d = std::get_if<QtDecomposition::Dom>(&t->node)) {
    return "x" + render_canonical(d->child) + "D";
  }
  std::vector<std::pair<int, std::string>> parts;
  for (const QtNode& c : std::get<QtDecomposition::Union>(t->node).children) {
    parts.emplace_back(c->vertex_count(), render_canonical(c));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto& [count, text] : parts) out += text;
  return out;
}

}  // namespace

DyckWord graph_to_word(const Graph& g) {
  return parse_word(render_canonical(recognize_qt(g)));
}

Graph word_to_clique_union(const DyckWord& w) {
  Graph g = Graph::empty(w.n());
  for (const SquareLabel& s : squares_below(w)) g.add_edge(s.col, s.row);
  return g;
}

std::vector<std::vector<int>> clique_cover_from_turns(const DyckWord& w) {
  std::vector<std::vector<int>> out;
  for (const SquareLabel& t : turning_squares(w)) {
    std::vector<int> interval;
    for (int v = t.col; v <= t.row; ++v) interval.push_back(v);
    out.push_back(std::move(interval));
  }
  return out;
}

BipartiteGraph word_to_bipartite(const DyckWord& w) {
  const int n = w.n();
  BipartiteGraph b;
  b.left_labels.resize(n);
  b.right_labels.resize(n);
  for (int i = 1; i <= n; ++i) {
    b.left_labels[i - 1] = i;
    b.right_labels[i - 1] = i;
  }
  const std::vector<int> ph = crossing_heights(w);
  for (int i = 1; i <= n; ++i) {
    for (int j = ph[i - 1] + 1; j <= n; ++j) b.edges.insert({i, j});
  }
  return b;
}

StripResult strip_isolated(const BipartiteGraph& g) {
  std::set<int> left_used, right_used;
  for (const auto& [i, j] : g.edges) {
    left_used.insert(i);
    right_used.insert(j);
  }
  StripResult r;
  for (int i : g.left_labels) {
    if (left_used.count(i)) r.graph.left_labels.push_back(i);
  }
  for (int j : g.right_labels) {
    if (right_used.count(j)) r.graph.right_labels.push_back(j);
  }
  r.graph.edges = g.edges;
  r.m = static_cast<int>(g.left_labels.size() - r.graph.left_labels.size());
  r.ell = static_cast<int>(g.right_labels.size() - r.graph.right_labels.size());
  return r;
}

}  // namespace gstirling
