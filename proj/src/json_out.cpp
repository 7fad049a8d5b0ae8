#include "gstirling/json_out.hpp"

#include <variant>

namespace gstirling {

Json squares_json(const std::vector<SquareLabel>& squares) {
  Json arr = Json::array();
  for (const SquareLabel& s : squares) arr.push_back({s.col, s.row});
  return arr;
}

Json board_json(const FerrersBoard& b) {
  Json j;
  j["n"] = b.n;
  j["heights"] = b.heights;
  j["squares"] = squares_json(b.squares());
  return j;
}

Json countseq_json(const CountSeq& s) {
  Json j;
  j["n"] = s.n;
  j["method"] = method_name(s.method);
  Json vals = Json::array();
  for (const BigInt& v : s.values) vals.push_back(v.get_str());
  j["values"] = vals;
  return j;
}

Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = edges;
  return j;
}

Json decomposition_json(const QtNode& term) {
  Json j;
  if (const auto* l = std::get_if<QtDecomposition::Leaf>(&term->node)) {
    j["leaf"] = l->vertex;
  } else if (const auto* d = std::get_if<QtDecomposition::Dom>(&term->node)) {
    j["dom"] = decomposition_json(d->child);
  } else {
    Json children = Json::array();
    for (const QtNode& c : std::get<QtDecomposition::Union>(term->node).children) {
      children.push_back(decomposition_json(c));
    }
    j["union"] = children;
  }
  return j;
}

Json normality_json(const NormalityReport& r) {
  Json j;
  j["total"] = r.stats.total.get_str();
  j["mean"] = rational_string(r.stats.mean);
  j["variance"] = rational_string(r.stats.variance);
  if (r.degenerate) {
    j["kolmogorov"] = nullptr;
  } else {
    j["kolmogorov"] = r.kolmogorov;
  }
  j["real_rooted"] = verdict_name(r.real_rooted.verdict);
  j["distinct_real_roots"] = r.real_rooted.distinct_real_roots;
  j["newton_ok"] = r.newton_ok;
  return j;
}

Json kahn_json(const KahnCheck& k) {
  Json j;
  j["f"] = k.f;
  j["ell"] = k.ell;
  j["m"] = k.m;
  j["chi"] = k.chi;
  j["v"] = k.v;
  j["nu"] = k.nu;
  j["ratio"] = rational_string(k.ratio);
  j["g"] = rational_string(k.g);
  return j;
}

}  // namespace gstirling
