#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gstirling/rng.hpp"

namespace gstirling {

enum class Step : std::uint8_t { X, D };  // X = up step, D = right step

// Balanced word over {x, D} whose every prefix holds at least as many x's
// as D's; n is the number of x's. Immutable once constructed.
class DyckWord {
 public:
  // Validates the Dyck conditions; throws WordParseError.
  static DyckWord from_steps(std::vector<Step> steps);

  int n() const { return n_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }

  // Canonical text over {x, D}.
  std::string render() const;

  bool operator==(const DyckWord& o) const { return steps_ == o.steps_; }

 private:
  DyckWord(std::vector<Step> steps, int n) : steps_(std::move(steps)), n_(n) {}

  std::vector<Step> steps_;
  int n_;
};

// Unit square labeled by its top-right corner.
struct SquareLabel {
  int col = 0;
  int row = 0;
  auto operator<=>(const SquareLabel&) const = default;
};

// Squares above a Dyck path inside the n x n box. Column c holds the top
// heights[c-1] squares (rows n-heights[c-1]+1 .. n), so the column square
// sets are totally nested: each column's set contains its right neighbor's.
struct FerrersBoard {
  int n = 0;
  std::vector<int> heights;

  int square_count() const;
  // Explicit square set, sorted lexicographically by (col, row).
  std::vector<SquareLabel> squares() const;
};

// Accepts the canonical alphabet {x, D} and the aliases {U, R} and {(, )};
// alphabets cannot be mixed within one word. Throws WordParseError.
DyckWord parse_word(const std::string& text);

// The 2n+1 lattice points of the staircase path from (0,0) to (n,n),
// as (col, row) pairs.
std::vector<std::pair<int, int>> path_vertices(const DyckWord& w);

// Height of the path segment crossing column c, i.e. the number of x's
// before the c-th D; index c-1. Weakly increasing, >= c at entry c-1.
std::vector<int> crossing_heights(const DyckWord& w);

// B_w: squares strictly above the path, inside the box.
FerrersBoard board_above(const DyckWord& w);

// W_w: squares strictly below the path and completely above the diagonal.
std::vector<SquareLabel> squares_below(const DyckWord& w);

// T_w: squares the path turns around; one per "xD" factor of the word.
std::vector<SquareLabel> turning_squares(const DyckWord& w);

int leading_x_run(const DyckWord& w);
int trailing_d_run(const DyckWord& w);

// All Dyck words with n x's, in lexicographic step order.
std::vector<DyckWord> all_dyck_words(int n);

// Uniform over the Catalan(n) words, via the cycle lemma: the unique
// dominating rotation of a random balanced arrangement of n+1 x's and n D's,
// with the leading x dropped.
DyckWord random_dyck_word(int n, Rng& rng);

}  // namespace gstirling
