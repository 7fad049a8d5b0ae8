#include "gstirling/chromatic.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gstirling/errors.hpp"

namespace gstirling {

namespace {

std::string graph_key(const Graph& g) {
  std::string key = std::to_string(g.n) + ";";
  for (const auto& [u, v] : g.edges) {
    key += std::to_string(u) + "," + std::to_string(v) + ";";
  }
  return key;
}

Graph delete_edge(const Graph& g, int u, int v) {
  Graph h = g;
  if (u > v) std::swap(u, v);
  h.edges.erase({u, v});
  return h;
}

// Contract v into u, relabel to 1..n-1 (labels above v shift down), and
// drop any parallel edges.
Graph contract_edge(const Graph& g, int u, int v) {
  Graph h = Graph::empty(g.n - 1);
  auto relabel = [v](int w) { return w > v ? w - 1 : w; };
  for (const auto& [a, b] : g.edges) {
    int x = (a == v) ? u : a;
    int y = (b == v) ? u : b;
    if (x == y) continue;
    h.add_edge(relabel(x), relabel(y));
  }
  return h;
}

struct DelCon {
  std::map<std::string, Polynomial> memo;

  Polynomial chrom(const Graph& g) {
    if (g.edges.empty()) return Polynomial::monomial(1, g.n);

    const std::string key = graph_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Polynomial result;
    const auto comps = g.components();
    if (comps.size() > 1) {
      result = Polynomial::constant(1);
      for (const auto& c : comps) result *= chrom(g.induced(c));
    } else if (g.edge_count() == g.n - 1) {
      // Connected tree: q (q-1)^(n-1).
      Polynomial p = Polynomial({BigInt(0), BigInt(1)});
      const Polynomial qm1({BigInt(-1), BigInt(1)});
      for (int i = 1; i < g.n; ++i) p *= qm1;
      result = p;
    } else {
      int universal = 0;
      std::vector<int> deg(g.n + 1, 0);
      for (const auto& [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
      }
      for (int v = 1; v <= g.n; ++v) {
        if (deg[v] == g.n - 1) {
          universal = v;
          break;
        }
      }
      if (universal > 0) {
        std::vector<int> rest;
        for (int v = 1; v <= g.n; ++v) {
          if (v != universal) rest.push_back(v);
        }
        const Polynomial sub = chrom(g.induced(rest));
        result = Polynomial({BigInt(0), BigInt(1)}) * sub.shifted_arg(-1);
      } else {
        // Deletion-contraction on an edge with the largest degree sum.
        std::pair<int, int> best = *g.edges.begin();
        int best_score = -1;
        for (const auto& e : g.edges) {
          const int score = deg[e.first] + deg[e.second];
          if (score > best_score) {
            best_score = score;
            best = e;
          }
        }
        result = chrom(delete_edge(g, best.first, best.second)) -
                 chrom(contract_edge(g, best.first, best.second));
      }
    }
    memo.emplace(key, result);
    return result;
  }
};

}  // namespace

Polynomial chromatic_polynomial(const Graph& g, const Caps& caps) {
  if (g.n > caps.chromatic_max_vertices) {
    throw TooLarge("chromatic_polynomial: " + std::to_string(g.n) + " vertices exceeds cap " +
                   std::to_string(caps.chromatic_max_vertices));
  }
  if (g.n < 1) throw std::invalid_argument("chromatic_polynomial: empty graph");
  DelCon dc;
  return dc.chrom(g);
}

Polynomial chromatic_polynomial(const QtNode& term) {
  const Polynomial q({BigInt(0), BigInt(1)});
  if (std::holds_alternative<QtDecomposition::Leaf>(term->node)) return q;
  if (const auto* d = std::get_if<QtDecomposition::Dom>(&term->node)) {
    return q * chromatic_polynomial(d->child).shifted_arg(-1);
  }
  Polynomial p = Polynomial::constant(1);
  for (const QtNode& c : std::get<QtDecomposition::Union>(term->node).children) {
    p *= chromatic_polynomial(c);
  }
  return p;
}

int chromatic_number(const Graph& g, const Caps& caps) {
  const Polynomial chi = chromatic_polynomial(g, caps);
  for (int q = 1; q <= g.n; ++q) {
    if (chi.eval(BigInt(q)) > 0) return q;
  }
  throw InternalInconsistency("chromatic polynomial positive nowhere on 1..n");
}

int chromatic_number(const QtNode& term) {
  if (std::holds_alternative<QtDecomposition::Leaf>(term->node)) return 1;
  if (const auto* d = std::get_if<QtDecomposition::Dom>(&term->node)) {
    return 1 + chromatic_number(d->child);
  }
  int best = 0;
  for (const QtNode& c : std::get<QtDecomposition::Union>(term->node).children) {
    best = std::max(best, chromatic_number(c));
  }
  return best;
}

bool co_chromatic(const Graph& a, const Graph& b, const Caps& caps) {
  return chromatic_polynomial(a, caps) == chromatic_polynomial(b, caps);
}

}  // namespace gstirling
