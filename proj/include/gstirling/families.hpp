#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gstirling/caps.hpp"
#include "gstirling/counting.hpp"
#include "gstirling/dyck.hpp"
#include "gstirling/graph.hpp"
#include "gstirling/polynomial.hpp"
#include "gstirling/rng.hpp"

namespace gstirling {

enum class FamilyKind { Empty, Path, Star, Forest, RandomQt, Complete };

std::string family_name(FamilyKind k);

struct FamilySpec {
  FamilyKind kind = FamilyKind::Empty;
  int n = 0;                      // 0 until set by spec text or sweep
  std::optional<int> components;  // Forest only
  std::uint64_t seed = 0;         // random kinds

  FamilySpec with_n(int n) const;
};

// "empty", "star:5", "forest:6", ... Throws std::invalid_argument.
FamilySpec parse_family_spec(const std::string& text);

// Number of labeled forests on n vertices with exactly k tree components.
BigInt forest_count(int n, int k);

// Exact-uniform labeled forest with k components: the component of the
// lowest remaining label gets its size by exact big-integer weights
// C(N-1, s-1) s^{s-2} forest_count(N-s, k-1), a uniform companion subset,
// and a uniform Pruefer tree.
Graph random_forest(int n, int k, Rng& rng);

// q^k (q-1)^(n-k); every forest with n vertices and k components has this
// chromatic polynomial.
Polynomial forest_chromatic(int n, int k);

// The quasi-threshold graph co-chromatic with such a forest: a star on
// n-k+1 vertices plus k-1 isolated vertices, as its canonical word
// (xD)^{k-1} x (xD)^{n-k} D.
DyckWord forest_cochromatic_word(int n, int k);

// The family member as a graph (always defined).
Graph family_graph(const FamilySpec& spec);

// The family member as a Dyck word. Path (n >= 4) and most forests are not
// quasi-threshold: throws NotQuasiThreshold.
DyckWord family_word(const FamilySpec& spec);

// The word of a quasi-threshold graph co-chromatic with the family member;
// defined for every kind. Used for the structural columns of sweeps.
DyckWord family_cochromatic_word(const FamilySpec& spec);

// Stirling sequence by the scalable route: the rook DP for word-backed
// kinds, chromatic inversion for path/forest.
CountSeq family_stirling(const FamilySpec& spec);

}  // namespace gstirling
