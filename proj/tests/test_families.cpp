#include <doctest.h>

#include <map>

#include "gstirling/chromatic.hpp"
#include "gstirling/errors.hpp"
#include "gstirling/families.hpp"
#include "gstirling/qt.hpp"
#include "test_support.hpp"

using namespace gstirling;
using namespace gstirling::testing;

TEST_CASE("parse_family_spec accepts kind and kind:n") {
  const FamilySpec e = parse_family_spec("empty:3");
  CHECK(e.kind == FamilyKind::Empty);
  CHECK(e.n == 3);
  CHECK(parse_family_spec("forest").kind == FamilyKind::Forest);
  CHECK(parse_family_spec("randomqt:7").n == 7);
  CHECK_THROWS_AS(parse_family_spec("ring:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("empty:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("empty:x"), std::invalid_argument);
}

TEST_CASE("family words") {
  CHECK(family_word(parse_family_spec("empty:3")).render() == "xDxDxD");
  CHECK(family_word(parse_family_spec("star:5")).render() == "xxDxDxDxDD");
  CHECK(family_word(parse_family_spec("star:1")).render() == "xD");
  CHECK(family_word(parse_family_spec("complete:4")).render() == "xxxxDDDD");
  CHECK(family_word(parse_family_spec("path:3")).render() == "xxDxDD");
  CHECK_THROWS_AS(family_word(parse_family_spec("path:5")), NotQuasiThreshold);
}

TEST_CASE("family graphs") {
  CHECK(family_graph(parse_family_spec("empty:4")) == Graph::empty(4));
  const Graph star = family_graph(parse_family_spec("star:4"));
  CHECK(star.edge_count() == 3);
  CHECK(star.degree(1) == 3);
  const Graph path = family_graph(parse_family_spec("path:4"));
  CHECK(path.edge_count() == 3);
  CHECK(path.degree(1) == 1);
  CHECK(family_graph(parse_family_spec("complete:5")).edge_count() == 10);

  FamilySpec qt = parse_family_spec("randomqt:9");
  qt.seed = 5;
  const Graph g1 = family_graph(qt);
  const Graph g2 = family_graph(qt);
  CHECK(g1 == g2);  // deterministic per seed
  CHECK_NOTHROW(recognize_qt(g1));
}

TEST_CASE("forest counts match the closed forms") {
  // One component: Cayley trees. All components singletons: one forest.
  for (int n = 1; n <= 8; ++n) {
    CHECK(forest_count(n, n) == 1);
    CHECK(forest_count(n, 1) == (n <= 2 ? BigInt(1) : int_pow(n, n - 2)));
  }
  // Forests on 4 vertices with 2 components: 4*... direct enumeration gives 15.
  CHECK(forest_count(4, 2) == 15);
  // Forests on 3 vertices with 2 components: choose the edge: 3.
  CHECK(forest_count(3, 2) == 3);
}

TEST_CASE("random_forest is acyclic with the requested component count") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(30));
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const Graph f = random_forest(n, k, rng);
    CHECK(f.is_acyclic());
    CHECK(static_cast<int>(f.components().size()) == k);
  }
}

TEST_CASE("random_forest with a fixed seed is reproducible") {
  Rng a(123), b(123);
  CHECK(random_forest(12, 3, a) == random_forest(12, 3, b));
}

TEST_CASE("random_forest hits every forest on small parameters") {
  // (n, k) = (4, 2): 15 forests; frequencies should be roughly uniform.
  Rng rng(7);
  std::map<std::string, int> freq;
  const int draws = 6000;
  for (int i = 0; i < draws; ++i) freq[format_graph(random_forest(4, 2, rng))]++;
  CHECK(freq.size() == 15);
  for (const auto& [graph, count] : freq) {
    CHECK(count > draws / 15 / 2);
    CHECK(count < draws / 15 * 2);
  }
}

TEST_CASE("forest chromatic polynomial and co-chromatic word") {
  // Sampled forests carry the predicted chromatic polynomial.
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const Graph f = random_forest(n, k, rng);
    CHECK(chromatic_polynomial(f) == forest_chromatic(n, k));

    const DyckWord w = forest_cochromatic_word(n, k);
    const auto [g, term] = word_to_graph(w);
    CHECK(chromatic_polynomial(term) == forest_chromatic(n, k));
  }
  CHECK(forest_cochromatic_word(5, 1).render() == "xxDxDxDxDD");
  CHECK(forest_cochromatic_word(5, 5).render() == "xDxDxDxDxD");
  CHECK(forest_cochromatic_word(6, 2).render() == "xDxxDxDxDxDD");
}

TEST_CASE("family_stirling routes agree with enumeration") {
  for (const std::string& spec_text :
       {"empty:6", "star:6", "complete:6", "path:6", "forest:6"}) {
    FamilySpec spec = parse_family_spec(spec_text);
    spec.components = 2;
    spec.seed = 3;
    const CountSeq fast = family_stirling(spec);
    const CountSeq slow = stirling_enumerate(family_graph(spec));
    CHECK(fast.same_values(slow));
  }
}

TEST_CASE("family_stirling forest route only depends on n and k") {
  FamilySpec a = parse_family_spec("forest:9");
  a.components = 3;
  a.seed = 1;
  FamilySpec b = a;
  b.seed = 999;
  CHECK(family_stirling(a).same_values(family_stirling(b)));
}
