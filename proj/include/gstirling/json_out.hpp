#pragma once

#include <json.hpp>

#include "gstirling/counting.hpp"
#include "gstirling/dyck.hpp"
#include "gstirling/graph.hpp"
#include "gstirling/normality.hpp"
#include "gstirling/qt.hpp"

namespace gstirling {

using Json = nlohmann::ordered_json;

// {"n": int, "heights": [int], "squares": [[col,row],...]} sorted
// lexicographically.
Json board_json(const FerrersBoard& b);

Json squares_json(const std::vector<SquareLabel>& squares);

// {"n": int, "method": string, "values": [decimal strings]}.
Json countseq_json(const CountSeq& s);

// {"n": int, "edges": [[u,v],...]}.
Json graph_json(const Graph& g);

// Nested {"leaf": v} / {"dom": child} / {"union": [children]}.
Json decomposition_json(const QtNode& term);

// {"total", "mean", "variance", "kolmogorov", "real_rooted",
//  "distinct_real_roots", "newton_ok"}; kolmogorov is null when degenerate.
Json normality_json(const NormalityReport& r);

// All integer fields plus "ratio" and "g" as "p/q".
Json kahn_json(const KahnCheck& k);

}  // namespace gstirling
