#include "gstirling/dyck.hpp"

#include <algorithm>
#include <numeric>

#include "gstirling/errors.hpp"

namespace gstirling {

DyckWord DyckWord::from_steps(std::vector<Step> steps) {
  if (steps.empty()) {
    throw WordParseError(WordParseError::Kind::Unbalanced, 0, "empty word");
  }
  int balance = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    balance += (steps[i] == Step::X) ? 1 : -1;
    if (balance < 0) {
      throw WordParseError(WordParseError::Kind::PrefixViolation, i + 1,
                           "prefix violation at position " + std::to_string(i + 1));
    }
  }
  if (balance != 0) {
    throw WordParseError(WordParseError::Kind::Unbalanced, steps.size(),
                         "unbalanced word: " + std::to_string(balance) + " unmatched x");
  }
  const int n = static_cast<int>(steps.size() / 2);
  return DyckWord(std::move(steps), n);
}

std::string DyckWord::render() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += (s == Step::X) ? 'x' : 'D';
  return out;
}

int FerrersBoard::square_count() const {
  return std::accumulate(heights.begin(), heights.end(), 0);
}

std::vector<SquareLabel> FerrersBoard::squares() const {
  std::vector<SquareLabel> out;
  out.reserve(square_count());
  for (int c = 1; c <= n; ++c) {
    for (int r = n - heights[c - 1] + 1; r <= n; ++r) out.push_back({c, r});
  }
  return out;
}

DyckWord parse_word(const std::string& text) {
  if (text.empty()) {
    throw WordParseError(WordParseError::Kind::Unbalanced, 0, "empty word");
  }
  // Pick the alphabet from the first character; no mixing.
  char up = 0, down = 0;
  switch (text[0]) {
    case 'x': case 'D': up = 'x'; down = 'D'; break;
    case 'U': case 'R': up = 'U'; down = 'R'; break;
    case '(': case ')': up = '('; down = ')'; break;
    default:
      throw WordParseError(WordParseError::Kind::BadCharacter, 1,
                           std::string("bad character '") + text[0] + "' at position 1");
  }
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == up) {
      steps.push_back(Step::X);
    } else if (text[i] == down) {
      steps.push_back(Step::D);
    } else {
      throw WordParseError(WordParseError::Kind::BadCharacter, i + 1,
                           std::string("bad character '") + text[i] + "' at position " +
                               std::to_string(i + 1));
    }
  }
  return DyckWord::from_steps(std::move(steps));
}

std::vector<std::pair<int, int>> path_vertices(const DyckWord& w) {
  std::vector<std::pair<int, int>> pts;
  pts.reserve(w.length() + 1);
  int col = 0, row = 0;
  pts.emplace_back(col, row);
  for (Step s : w.steps()) {
    if (s == Step::X) {
      ++row;
    } else {
      ++col;
    }
    pts.emplace_back(col, row);
  }
  return pts;
}

std::vector<int> crossing_heights(const DyckWord& w) {
  std::vector<int> heights;
  heights.reserve(w.n());
  int xs = 0;
  for (Step s : w.steps()) {
    if (s == Step::X) {
      ++xs;
    } else {
      heights.push_back(xs);
    }
  }
  return heights;
}

FerrersBoard board_above(const DyckWord& w) {
  const int n = w.n();
  const std::vector<int> ph = crossing_heights(w);
  FerrersBoard b;
  b.n = n;
  b.heights.resize(n);
  for (int c = 1; c <= n; ++c) b.heights[c - 1] = n - ph[c - 1];
  return b;
}

std::vector<SquareLabel> squares_below(const DyckWord& w) {
  const std::vector<int> ph = crossing_heights(w);
  std::vector<SquareLabel> out;
  for (int c = 1; c <= w.n(); ++c) {
    for (int r = c + 1; r <= ph[c - 1]; ++r) out.push_back({c, r});
  }
  return out;
}

std::vector<SquareLabel> turning_squares(const DyckWord& w) {
  std::vector<SquareLabel> out;
  int xs = 0, ds = 0;
  const auto& s = w.steps();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == Step::X) {
      ++xs;
    } else {
      ++ds;
    }
    if (s[i] == Step::X && s[i + 1] == Step::D) out.push_back({ds + 1, xs});
  }
  return out;
}

int leading_x_run(const DyckWord& w) {
  int run = 0;
  for (Step s : w.steps()) {
    if (s != Step::X) break;
    ++run;
  }
  return run;
}

int trailing_d_run(const DyckWord& w) {
  int run = 0;
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) {
    if (*it != Step::D) break;
    ++run;
  }
  return run;
}

namespace {

void extend_words(std::vector<Step>& cur, int xs_left, int balance,
                  std::vector<DyckWord>& out) {
  if (xs_left == 0 && balance == 0) {
    out.push_back(DyckWord::from_steps(cur));
    return;
  }
  if (xs_left > 0) {
    cur.push_back(Step::X);
    extend_words(cur, xs_left - 1, balance + 1, out);
    cur.pop_back();
  }
  if (balance > 0) {
    cur.push_back(Step::D);
    extend_words(cur, xs_left, balance - 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DyckWord> all_dyck_words(int n) {
  std::vector<DyckWord> out;
  if (n <= 0) return out;
  std::vector<Step> cur;
  cur.reserve(2 * n);
  extend_words(cur, n, 0, out);
  return out;
}

DyckWord random_dyck_word(int n, Rng& rng) {
  // Balanced arrangement of n+1 up steps and n down steps; exactly one
  // rotation is strictly dominating, and dropping its leading up step maps
  // the arrangements uniformly onto Dyck words.
  std::vector<int> steps(2 * n + 1, -1);
  std::fill(steps.begin(), steps.begin() + n + 1, +1);
  rng.shuffle(steps);

  int sum = 0, min_sum = 2 * n + 2;
  std::size_t min_pos = 0;  // last index attaining the prefix minimum
  for (std::size_t i = 0; i < steps.size(); ++i) {
    sum += steps[i];
    if (sum <= min_sum) {
      min_sum = sum;
      min_pos = i;
    }
  }
  const std::size_t start = (min_pos + 1) % steps.size();
  std::vector<Step> word;
  word.reserve(2 * n);
  for (std::size_t i = 1; i < steps.size(); ++i) {  // skip the leading up step
    const int v = steps[(start + i) % steps.size()];
    word.push_back(v == 1 ? Step::X : Step::D);
  }
  return DyckWord::from_steps(std::move(word));
}

}  // namespace gstirling
