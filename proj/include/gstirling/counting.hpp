#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gstirling/caps.hpp"
#include "gstirling/dyck.hpp"
#include "gstirling/graph.hpp"
#include "gstirling/numeric.hpp"
#include "gstirling/polynomial.hpp"

namespace gstirling {

enum class Method { Enumerate, Weyl, Rook, Matching, Chromatic };

std::string method_name(Method m);

// Finite sequence of nonnegative counts indexed k = 0..n (entries outside
// the stored range are zero), tagged with the method that produced it.
struct CountSeq {
  int n = 0;
  Method method = Method::Enumerate;
  std::vector<BigInt> values;

  BigInt at(int k) const;  // 0 outside the stored range
  BigInt total() const;
  int min_support() const;  // smallest k with a positive entry; -1 if none
  int max_support() const;
  // Entry-by-entry equality with implicit zero padding.
  bool same_values(const CountSeq& o) const;
};

// Normally ordered Weyl-algebra element: sum of coeff * x^a D^b terms,
// keyed by (a, b); only nonzero coefficients are stored.
struct WeylState {
  std::map<std::pair<int, int>, BigInt> terms;
};

// Partitions of V(g) into k nonempty independent sets, for every k, by
// walking restricted-growth strings with independence pruning.
CountSeq stirling_enumerate(const Graph& g, const Caps& caps = Caps::from_env());

// Normal form of an arbitrary word under Dx = xD + 1, built by scanning
// right to left: left-multiplying by x sends x^a D^b to x^{a+1} D^b, and by
// D to x^a D^{b+1} + a x^{a-1} D^b.
WeylState normal_order(const std::vector<Step>& word);

// Diagonal coefficients of the normal form of a Dyck word.
CountSeq stirling_weyl(const DyckWord& w);

// Non-attacking rook placements of every size, by the nested-column DP:
// columns in ascending height order; a column of height h seen after k-1
// placed rooks offers h-(k-1) free rows.
CountSeq rook_numbers(const FerrersBoard& b);

// S_w(k) = r_{n-k}(B_w).
CountSeq stirling_rook(const DyckWord& w);

// Matchings of every size. The bipartite overload recurses on a
// highest-degree left vertex (matched or not) and memoizes residual graphs
// by their sorted adjacency signature; the general overload uses the edge
// recursion m_k(G) = m_k(G-e) + m_{k-1}(G-{u,v}). Throws TooLarge above the
// edge cap.
CountSeq matching_numbers(const BipartiteGraph& g, const Caps& caps = Caps::from_env());
CountSeq matching_numbers(const Graph& g, const Caps& caps = Caps::from_env());

// S_w(k) = m_{n-k}(Gamma_w), computed on the stripped graph.
CountSeq stirling_matching(const DyckWord& w, const Caps& caps = Caps::from_env());

// Inclusion-exclusion inversion of a chromatic polynomial of an n-vertex
// graph; the division by k! must be exact. Throws NonIntegralResult /
// NegativeResult when p is not a valid chromatic polynomial.
CountSeq stirling_from_chromatic(const Polynomial& p, int n);

// chi(q) = sum_k s[k] q(q-1)...(q-k+1).
Polynomial chromatic_from_stirling(const CountSeq& s);

struct CrossCheckReport {
  int n = 0;
  // Route label -> sequence, in a fixed order: enumerate(G_w),
  // enumerate(H_w), weyl, rook, matching, chromatic.
  std::vector<std::pair<std::string, CountSeq>> results;
  std::vector<std::string> skipped;  // "route: reason"
  bool agree = false;
  std::string divergence;  // empty when agree

  const CountSeq* reference() const;
};

// Computes the sequence by every route within its cap and compares.
CrossCheckReport cross_check(const DyckWord& w, const Caps& caps = Caps::from_env());

}  // namespace gstirling
