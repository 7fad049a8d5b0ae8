#include <doctest.h>

#include <map>
#include <set>

#include "gstirling/dyck.hpp"
#include "gstirling/errors.hpp"

using namespace gstirling;

namespace {

std::set<std::pair<int, int>> as_pairs(const std::vector<SquareLabel>& squares) {
  std::set<std::pair<int, int>> out;
  for (const SquareLabel& s : squares) out.insert({s.col, s.row});
  return out;
}

}  // namespace

TEST_CASE("parse_word accepts Dyck words and rejects the rest") {
  CHECK(parse_word("xD").n() == 1);
  CHECK(parse_word("xxDxxDxDDD").n() == 5);
  CHECK(parse_word("xxDxxDxDDD").render() == "xxDxxDxDDD");

  CHECK_THROWS_AS(parse_word("xDDx"), WordParseError);
  try {
    parse_word("xDDx");
  } catch (const WordParseError& e) {
    CHECK(e.kind == WordParseError::Kind::PrefixViolation);
    CHECK(e.position == 3);
  }

  CHECK_THROWS_AS(parse_word("xxD"), WordParseError);
  CHECK_THROWS_AS(parse_word(""), WordParseError);
  CHECK_THROWS_AS(parse_word("xyD"), WordParseError);
  try {
    parse_word("xxz");
  } catch (const WordParseError& e) {
    CHECK(e.kind == WordParseError::Kind::BadCharacter);
    CHECK(e.position == 3);
  }
}

TEST_CASE("parse_word alias alphabets render back to x/D") {
  CHECK(parse_word("UURURRUR").render() == "xxDxDDxD");
  CHECK(parse_word("(())()").render() == "xxDDxD");
  // Alphabets cannot be mixed.
  CHECK_THROWS_AS(parse_word("x(D)"), WordParseError);
  CHECK_THROWS_AS(parse_word("Ux"), WordParseError);
}

TEST_CASE("path_vertices walks the staircase") {
  const auto pts = path_vertices(parse_word("xxDxxDxDDD"));
  const std::vector<std::pair<int, int>> expected{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4},
                                                  {2, 4}, {2, 5}, {3, 5}, {4, 5}, {5, 5}};
  CHECK(pts == expected);

  CHECK(path_vertices(parse_word("xD")) ==
        std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(path_vertices(parse_word("xDxD")) ==
        std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("board_above matches the running example") {
  const FerrersBoard b = board_above(parse_word("xxDxxDxDDD"));
  CHECK(b.n == 5);
  CHECK(as_pairs(b.squares()) ==
        std::set<std::pair<int, int>>{{1, 3}, {1, 4}, {1, 5}, {2, 5}});

  CHECK(board_above(parse_word("xD")).square_count() == 0);
  CHECK(board_above(parse_word("xxxDDD")).square_count() == 0);
}

TEST_CASE("squares_below matches the running example") {
  CHECK(as_pairs(squares_below(parse_word("xxDxxDxDDD"))) ==
        std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(squares_below(parse_word("xD")).empty());
  CHECK(as_pairs(squares_below(parse_word("xxDD"))) ==
        std::set<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("turning_squares marks one square per xD factor") {
  CHECK(as_pairs(turning_squares(parse_word("xxDxxDxDDD"))) ==
        std::set<std::pair<int, int>>{{1, 2}, {2, 4}, {3, 5}});
  CHECK(as_pairs(turning_squares(parse_word("xD"))) ==
        std::set<std::pair<int, int>>{{1, 1}});
  CHECK(as_pairs(turning_squares(parse_word("xDxD"))) ==
        std::set<std::pair<int, int>>{{1, 1}, {2, 2}});
}

TEST_CASE("square sets partition the strict upper triangle") {
  // |B_w| + |W_w| + n = n(n+1)/2 for every word, and the board columns
  // are weakly nested; |T_w| counts xD factors.
  for (int n = 1; n <= 10; ++n) {
    for (const DyckWord& w : all_dyck_words(n)) {
      const FerrersBoard b = board_above(w);
      const auto below = squares_below(w);
      CHECK(b.square_count() + static_cast<int>(below.size()) + n == n * (n + 1) / 2);
      for (int c = 1; c < n; ++c) CHECK(b.heights[c - 1] >= b.heights[c]);

      const std::string text = w.render();
      int xd_factors = 0;
      for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == 'x' && text[i + 1] == 'D') ++xd_factors;
      }
      CHECK(static_cast<int>(turning_squares(w).size()) == xd_factors);
    }
  }
}

TEST_CASE("catalan counts and render round-trip") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const auto words = all_dyck_words(n);
    CHECK(static_cast<int>(words.size()) == catalan[n]);
    for (const DyckWord& w : words) {
      CHECK(parse_word(w.render()) == w);
    }
  }
}

TEST_CASE("random_dyck_word is valid and deterministic per seed") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng.below(30));
    const DyckWord w = random_dyck_word(n, rng);
    CHECK(w.n() == n);  // from_steps already validated the Dyck conditions
  }
  Rng a(7), b(7);
  CHECK(random_dyck_word(12, a) == random_dyck_word(12, b));
}

TEST_CASE("random_dyck_word is near-uniform at n = 3") {
  // 5 words at n = 3; chi-square-ish sanity band on 5000 draws.
  Rng rng(2024);
  std::map<std::string, int> freq;
  for (int i = 0; i < 5000; ++i) freq[random_dyck_word(3, rng).render()]++;
  CHECK(freq.size() == 5);
  for (const auto& [word, count] : freq) {
    CHECK(count > 800);
    CHECK(count < 1200);
  }
}

TEST_CASE("leading and trailing runs") {
  const DyckWord w = parse_word("xxDxxDxDDD");
  CHECK(leading_x_run(w) == 2);
  CHECK(trailing_d_run(w) == 3);
  CHECK(leading_x_run(parse_word("xD")) == 1);
  CHECK(trailing_d_run(parse_word("xD")) == 1);
}
