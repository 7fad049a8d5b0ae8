#pragma once

#include "gstirling/caps.hpp"
#include "gstirling/graph.hpp"
#include "gstirling/polynomial.hpp"
#include "gstirling/qt.hpp"

namespace gstirling {

// Deletion-contraction with memoization; throws TooLarge above the cap.
Polynomial chromatic_polynomial(const Graph& g, const Caps& caps = Caps::from_env());

// Structural rule on a construction term: leaf -> q, dominating vertex ->
// q * child(q-1), union -> product. No size cap.
Polynomial chromatic_polynomial(const QtNode& term);

// Least positive q with chi_G(q) > 0.
int chromatic_number(const Graph& g, const Caps& caps = Caps::from_env());

// Leaf -> 1, dominating vertex -> child + 1, union -> max.
int chromatic_number(const QtNode& term);

bool co_chromatic(const Graph& a, const Graph& b, const Caps& caps = Caps::from_env());

}  // namespace gstirling
