#include "gstirling/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "gstirling/chromatic.hpp"
#include "gstirling/errors.hpp"
#include "gstirling/qt.hpp"

namespace gstirling {

std::string method_name(Method m) {
  switch (m) {
    case Method::Enumerate: return "enumerate";
    case Method::Weyl: return "weyl";
    case Method::Rook: return "rook";
    case Method::Matching: return "matching";
    case Method::Chromatic: return "chromatic";
  }
  return "?";
}

BigInt CountSeq::at(int k) const {
  if (k < 0 || k >= static_cast<int>(values.size())) return 0;
  return values[k];
}

BigInt CountSeq::total() const {
  BigInt t = 0;
  for (const BigInt& v : values) t += v;
  return t;
}

int CountSeq::min_support() const {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] > 0) return static_cast<int>(k);
  }
  return -1;
}

int CountSeq::max_support() const {
  for (int k = static_cast<int>(values.size()) - 1; k >= 0; --k) {
    if (values[k] > 0) return k;
  }
  return -1;
}

bool CountSeq::same_values(const CountSeq& o) const {
  const int top = std::max(values.size(), o.values.size());
  for (int k = 0; k < top; ++k) {
    if (at(k) != o.at(k)) return false;
  }
  return true;
}

CountSeq stirling_enumerate(const Graph& g, const Caps& caps) {
  if (g.n > caps.enumerate_max_vertices || g.n > 25) {
    throw TooLarge("stirling_enumerate: " + std::to_string(g.n) + " vertices exceeds cap " +
                   std::to_string(caps.enumerate_max_vertices));
  }
  // Restricted-growth walk: vertex v joins an existing block whose members
  // avoid its neighborhood, or opens a new block. Blocks as bitmasks.
  std::vector<std::uint64_t> adj(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u - 1] |= std::uint64_t(1) << (v - 1);
    adj[v - 1] |= std::uint64_t(1) << (u - 1);
  }
  std::vector<unsigned long long> counts(g.n + 1, 0);
  std::vector<std::uint64_t> blocks;
  blocks.reserve(g.n);
  std::function<void(int)> walk = [&](int v) {
    if (v == g.n) {
      ++counts[blocks.size()];
      return;
    }
    const std::uint64_t bit = std::uint64_t(1) << v;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if ((blocks[b] & adj[v]) == 0) {
        blocks[b] |= bit;
        walk(v + 1);
        blocks[b] &= ~bit;
      }
    }
    blocks.push_back(bit);
    walk(v + 1);
    blocks.pop_back();
  };
  walk(0);
  CountSeq s;
  s.n = g.n;
  s.method = Method::Enumerate;
  s.values.assign(g.n + 1, BigInt(0));
  for (int k = 0; k <= g.n; ++k) s.values[k] = BigInt(static_cast<unsigned long>(counts[k]));
  return s;
}

WeylState normal_order(const std::vector<Step>& word) {
  std::map<std::pair<int, int>, BigInt> cur;
  cur[{0, 0}] = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::map<std::pair<int, int>, BigInt> next;
    for (const auto& [ab, c] : cur) {
      const auto [a, b] = ab;
      if (*it == Step::X) {
        next[{a + 1, b}] += c;
      } else {
        next[{a, b + 1}] += c;
        if (a > 0) next[{a - 1, b}] += a * c;
      }
    }
    cur = std::move(next);
  }
  return {std::move(cur)};
}

CountSeq stirling_weyl(const DyckWord& w) {
  const WeylState state = normal_order(w.steps());
  CountSeq s;
  s.n = w.n();
  s.method = Method::Weyl;
  s.values.assign(w.n() + 1, BigInt(0));
  for (const auto& [ab, c] : state.terms) {
    const auto [a, b] = ab;
    if (a != b || a > w.n()) {
      throw InternalInconsistency("normal form of a Dyck word has off-diagonal term x^" +
                                  std::to_string(a) + " D^" + std::to_string(b));
    }
    s.values[a] = c;
  }
  return s;
}

CountSeq rook_numbers(const FerrersBoard& b) {
  std::vector<int> heights = b.heights;
  std::sort(heights.begin(), heights.end());
  CountSeq s;
  s.n = b.n;
  s.method = Method::Rook;
  s.values.assign(b.n + 1, BigInt(0));
  if (b.n == 0) {
    s.values.assign(1, BigInt(1));
    return s;
  }
  s.values[0] = 1;
  int col = 0;
  for (int h : heights) {
    ++col;
    for (int k = std::min(col, b.n); k >= 1; --k) {
      const int free_rows = h - (k - 1);
      if (free_rows > 0) s.values[k] += free_rows * s.values[k - 1];
    }
  }
  return s;
}

CountSeq stirling_rook(const DyckWord& w) {
  const CountSeq r = rook_numbers(board_above(w));
  CountSeq s;
  s.n = w.n();
  s.method = Method::Rook;
  s.values.assign(w.n() + 1, BigInt(0));
  for (int k = 0; k <= w.n(); ++k) s.values[k] = r.at(w.n() - k);
  return s;
}

namespace {

// Matchings of a bipartite graph given as left-row bitmasks over right
// columns. Recurses on a highest-degree row; residual graphs are memoized
// under their sorted row masks after order-preserving column compression
// (identical keys mean identical adjacency matrices up to row order).
struct BipartiteMatcher {
  std::map<std::vector<std::uint64_t>, std::vector<BigInt>> memo;

  static std::vector<std::uint64_t> canonical(const std::vector<std::uint64_t>& rows) {
    std::uint64_t used = 0;
    for (std::uint64_t r : rows) used |= r;
    std::vector<int> remap(64, 0);
    int next = 0;
    for (int b = 0; b < 64; ++b) {
      if (used & (std::uint64_t(1) << b)) remap[b] = next++;
    }
    std::vector<std::uint64_t> out;
    out.reserve(rows.size());
    for (std::uint64_t r : rows) {
      if (r == 0) continue;
      std::uint64_t m = 0;
      for (int b = 0; b < 64; ++b) {
        if (r & (std::uint64_t(1) << b)) m |= std::uint64_t(1) << remap[b];
      }
      out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<BigInt> solve(const std::vector<std::uint64_t>& raw_rows) {
    const std::vector<std::uint64_t> rows = canonical(raw_rows);
    if (rows.empty()) return {BigInt(1)};
    if (auto it = memo.find(rows); it != memo.end()) return it->second;

    std::size_t pick = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (__builtin_popcountll(rows[i]) > __builtin_popcountll(rows[pick])) pick = i;
    }
    std::vector<std::uint64_t> rest = rows;
    rest.erase(rest.begin() + pick);

    // Row unmatched, plus row matched to each of its columns.
    std::vector<BigInt> result = solve(rest);
    result.resize(rows.size() + 1, BigInt(0));
    for (int b = 0; b < 64; ++b) {
      if (!(rows[pick] & (std::uint64_t(1) << b))) continue;
      std::vector<std::uint64_t> sub = rest;
      for (std::uint64_t& r : sub) r &= ~(std::uint64_t(1) << b);
      const std::vector<BigInt> inner = solve(sub);
      for (std::size_t k = 0; k < inner.size(); ++k) result[k + 1] += inner[k];
    }
    while (result.size() > 1 && result.back() == 0) result.pop_back();
    memo.emplace(rows, result);
    return result;
  }
};

}  // namespace

CountSeq matching_numbers(const BipartiteGraph& g, const Caps& caps) {
  if (g.edge_count() > caps.matching_max_edges) {
    throw TooLarge("matching_numbers: " + std::to_string(g.edge_count()) +
                   " edges exceeds cap " + std::to_string(caps.matching_max_edges));
  }
  if (g.right_labels.size() > 64) {
    throw TooLarge("matching_numbers: right side wider than 64 vertices");
  }
  std::map<int, int> right_index;
  for (std::size_t j = 0; j < g.right_labels.size(); ++j) {
    right_index[g.right_labels[j]] = static_cast<int>(j);
  }
  std::map<int, std::uint64_t> row_masks;
  for (const auto& [i, j] : g.edges) {
    row_masks[i] |= std::uint64_t(1) << right_index.at(j);
  }
  std::vector<std::uint64_t> rows;
  rows.reserve(row_masks.size());
  for (const auto& [i, mask] : row_masks) rows.push_back(mask);

  BipartiteMatcher matcher;
  std::vector<BigInt> m = matcher.solve(rows);
  CountSeq s;
  s.n = static_cast<int>(std::min(g.left_labels.size(), g.right_labels.size()));
  s.method = Method::Matching;
  s.values.assign(s.n + 1, BigInt(0));
  for (std::size_t k = 0; k < m.size() && k < s.values.size(); ++k) s.values[k] = m[k];
  return s;
}

namespace {

// General-graph matchings by the edge recursion
// m_k(G) = m_k(G - e) + m_{k-1}(G - {u, v}), memoized on the residual edge
// set after order-preserving vertex compaction.
struct GraphMatcher {
  std::map<std::vector<std::pair<int, int>>, std::vector<BigInt>> memo;

  static std::vector<std::pair<int, int>> canonical(const std::set<std::pair<int, int>>& edges) {
    std::map<int, int> remap;
    for (const auto& [u, v] : edges) {
      remap.emplace(u, 0);
      remap.emplace(v, 0);
    }
    int next = 1;
    for (auto& [label, idx] : remap) idx = next++;
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const auto& [u, v] : edges) out.emplace_back(remap[u], remap[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<BigInt> solve(const std::set<std::pair<int, int>>& edges) {
    if (edges.empty()) return {BigInt(1)};
    const auto key = canonical(edges);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::map<int, int> deg;
    for (const auto& [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    int best_u = 0;
    for (const auto& [v, d] : deg) {
      if (best_u == 0 || d > deg[best_u]) best_u = v;
    }
    int best_v = 0;
    for (const auto& [a, b] : edges) {
      const int other = (a == best_u) ? b : (b == best_u ? a : 0);
      if (other == 0) continue;
      if (best_v == 0 || deg[other] > deg[best_v]) best_v = other;
    }

    std::set<std::pair<int, int>> deleted = edges;
    deleted.erase({std::min(best_u, best_v), std::max(best_u, best_v)});
    std::vector<BigInt> result = solve(deleted);

    std::set<std::pair<int, int>> both_gone;
    for (const auto& e : edges) {
      if (e.first == best_u || e.second == best_u || e.first == best_v || e.second == best_v) {
        continue;
      }
      both_gone.insert(e);
    }
    const std::vector<BigInt> inner = solve(both_gone);
    result.resize(std::max(result.size(), inner.size() + 1), BigInt(0));
    for (std::size_t k = 0; k < inner.size(); ++k) result[k + 1] += inner[k];
    while (result.size() > 1 && result.back() == 0) result.pop_back();
    memo.emplace(key, result);
    return result;
  }
};

}  // namespace

CountSeq matching_numbers(const Graph& g, const Caps& caps) {
  if (g.edge_count() > caps.matching_max_edges) {
    throw TooLarge("matching_numbers: " + std::to_string(g.edge_count()) +
                   " edges exceeds cap " + std::to_string(caps.matching_max_edges));
  }
  GraphMatcher matcher;
  std::vector<BigInt> m = matcher.solve(g.edges);
  CountSeq s;
  s.n = g.n / 2;
  s.method = Method::Matching;
  s.values.assign(s.n + 1, BigInt(0));
  for (std::size_t k = 0; k < m.size() && k < s.values.size(); ++k) s.values[k] = m[k];
  return s;
}

CountSeq stirling_matching(const DyckWord& w, const Caps& caps) {
  const StripResult stripped = strip_isolated(word_to_bipartite(w));
  const CountSeq m = matching_numbers(stripped.graph, caps);
  CountSeq s;
  s.n = w.n();
  s.method = Method::Matching;
  s.values.assign(w.n() + 1, BigInt(0));
  for (int k = 0; k <= w.n(); ++k) s.values[k] = m.at(w.n() - k);
  return s;
}

CountSeq stirling_from_chromatic(const Polynomial& p, int n) {
  if (p.degree() != n) {
    throw std::invalid_argument("stirling_from_chromatic: polynomial degree " +
                                std::to_string(p.degree()) + " != n = " + std::to_string(n));
  }
  std::vector<BigInt> evals(n + 1);
  for (int j = 0; j <= n; ++j) evals[j] = p.eval(BigInt(j));

  CountSeq s;
  s.n = n;
  s.method = Method::Chromatic;
  s.values.assign(n + 1, BigInt(0));
  for (int k = 0; k <= n; ++k) {
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j) {
      const BigInt term = binomial(k, j) * evals[j];
      if ((k - j) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    if (sum < 0) {
      throw NegativeResult("stirling_from_chromatic: negative count at k = " +
                           std::to_string(k));
    }
    const BigInt kfact = factorial(k);
    if (!mpz_divisible_p(sum.get_mpz_t(), kfact.get_mpz_t())) {
      throw NonIntegralResult("stirling_from_chromatic: k! does not divide the sum at k = " +
                              std::to_string(k));
    }
    mpz_divexact(s.values[k].get_mpz_t(), sum.get_mpz_t(), kfact.get_mpz_t());
  }
  return s;
}

Polynomial chromatic_from_stirling(const CountSeq& s) {
  Polynomial acc;
  Polynomial ff = Polynomial::constant(1);
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (s.values[k] != 0) acc += s.values[k] * ff;
    ff *= Polynomial({BigInt(-static_cast<long>(k)), BigInt(1)});  // (q - k)
  }
  return acc;
}

const CountSeq* CrossCheckReport::reference() const {
  return results.empty() ? nullptr : &results.front().second;
}

CrossCheckReport cross_check(const DyckWord& w, const Caps& caps) {
  CrossCheckReport report;
  report.n = w.n();

  auto [graph, term] = word_to_graph(w);
  const Graph clique_union = word_to_clique_union(w);

  const auto run = [&](const std::string& label, auto&& fn) {
    try {
      report.results.emplace_back(label, fn());
    } catch (const TooLarge& e) {
      report.skipped.push_back(label + ": " + e.what());
    }
  };

  run("enumerate(G_w)", [&] { return stirling_enumerate(graph, caps); });
  run("enumerate(H_w)", [&] { return stirling_enumerate(clique_union, caps); });
  run("weyl", [&] { return stirling_weyl(w); });
  run("rook", [&] { return stirling_rook(w); });
  run("matching", [&] { return stirling_matching(w, caps); });
  run("chromatic", [&] { return stirling_from_chromatic(chromatic_polynomial(term), w.n()); });

  report.agree = true;
  for (std::size_t i = 1; i < report.results.size(); ++i) {
    const auto& [label0, ref] = report.results.front();
    const auto& [label, seq] = report.results[i];
    if (seq.same_values(ref)) continue;
    report.agree = false;
    for (int k = 0; k <= std::max(ref.n, seq.n); ++k) {
      if (ref.at(k) != seq.at(k)) {
        report.divergence = label0 + " vs " + label + " at k = " + std::to_string(k) + " (" +
                            ref.at(k).get_str() + " vs " + seq.at(k).get_str() + ")";
        break;
      }
    }
    break;
  }
  return report;
}

}  // namespace gstirling
