#include "gstirling/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "gstirling/errors.hpp"
#include "gstirling/qt.hpp"

namespace gstirling {

std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Empty: return "empty";
    case FamilyKind::Path: return "path";
    case FamilyKind::Star: return "star";
    case FamilyKind::Forest: return "forest";
    case FamilyKind::RandomQt: return "randomqt";
    case FamilyKind::Complete: return "complete";
  }
  return "?";
}

FamilySpec FamilySpec::with_n(int new_n) const {
  FamilySpec s = *this;
  s.n = new_n;
  return s;
}

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  std::string kind = text;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    kind = text.substr(0, colon);
    const std::string num = text.substr(colon + 1);
    try {
      std::size_t used = 0;
      spec.n = std::stoi(num, &used);
      if (used != num.size() || spec.n < 1) throw std::invalid_argument(num);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad family size: \"" + num + "\"");
    }
  }
  if (kind == "empty") {
    spec.kind = FamilyKind::Empty;
  } else if (kind == "path") {
    spec.kind = FamilyKind::Path;
  } else if (kind == "star") {
    spec.kind = FamilyKind::Star;
  } else if (kind == "forest") {
    spec.kind = FamilyKind::Forest;
  } else if (kind == "randomqt") {
    spec.kind = FamilyKind::RandomQt;
  } else if (kind == "complete") {
    spec.kind = FamilyKind::Complete;
  } else {
    throw std::invalid_argument("unknown family kind: \"" + kind + "\"");
  }
  return spec;
}

namespace {

// Labeled trees on s vertices: s^(s-2), with t(1) = t(2) = 1.
BigInt tree_count(int s) {
  if (s <= 2) return 1;
  return int_pow(s, s - 2);
}

// g[N][j] = labeled forests on an N-set with exactly j tree components,
// by the size s of the component holding the lowest label:
// g[N][j] = sum_s C(N-1, s-1) t(s) g[N-s][j-1].
std::vector<std::vector<BigInt>> forest_table(int n, int kmax) {
  std::vector<std::vector<BigInt>> g(n + 1, std::vector<BigInt>(kmax + 1, BigInt(0)));
  g[0][0] = 1;
  for (int N = 1; N <= n; ++N) {
    for (int j = 1; j <= std::min(N, kmax); ++j) {
      BigInt acc = 0;
      for (int s = 1; s <= N - j + 1; ++s) {
        acc += binomial(N - 1, s - 1) * tree_count(s) * g[N - s][j - 1];
      }
      g[N][j] = acc;
    }
  }
  return g;
}

void check_forest_params(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("forest: need 1 <= components <= n, got n = " +
                                std::to_string(n) + ", components = " + std::to_string(k));
  }
}

// Decode a Pruefer-style sequence over the given (sorted) vertex labels
// into tree edges on those labels.
std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& vertices,
                                                const std::vector<int>& seq) {
  const int s = static_cast<int>(vertices.size());
  std::vector<std::pair<int, int>> edges;
  if (s < 2) return edges;
  std::vector<int> labels = vertices;
  std::vector<int> deg(labels.size(), 1);
  auto index_of = [&labels](int v) {
    return std::lower_bound(labels.begin(), labels.end(), v) - labels.begin();
  };
  for (int v : seq) ++deg[index_of(v)];
  std::vector<char> used(labels.size(), 0);
  for (int a : seq) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!used[i] && deg[i] == 1) {
        edges.emplace_back(labels[i], a);
        used[i] = 1;
        --deg[index_of(a)];
        break;
      }
    }
  }
  // Join the last two unused vertices.
  int first = -1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!used[i] && deg[i] == 1) {
      if (first < 0) {
        first = labels[i];
      } else {
        edges.emplace_back(first, labels[i]);
        break;
      }
    }
  }
  return edges;
}

}  // namespace

BigInt forest_count(int n, int k) {
  check_forest_params(n, k);
  return forest_table(n, k)[n][k];
}

Graph random_forest(int n, int k, Rng& rng) {
  check_forest_params(n, k);
  const auto table = forest_table(n, k);
  Graph forest = Graph::empty(n);
  std::vector<int> remaining(n);
  for (int v = 1; v <= n; ++v) remaining[v - 1] = v;

  for (int j = k; j >= 1; --j) {
    const int N = static_cast<int>(remaining.size());
    // Component size of the lowest remaining label, weighted exactly.
    BigInt pick = rng.below_big(table[N][j]);
    int size = 0;
    for (int s = 1; s <= N - j + 1; ++s) {
      const BigInt weight = binomial(N - 1, s - 1) * tree_count(s) * table[N - s][j - 1];
      if (pick < weight) {
        size = s;
        break;
      }
      pick -= weight;
    }

    std::vector<int> companions(remaining.begin() + 1, remaining.end());
    rng.shuffle(companions);
    std::vector<int> component{remaining.front()};
    component.insert(component.end(), companions.begin(), companions.begin() + (size - 1));
    std::sort(component.begin(), component.end());

    if (size == 2) {
      forest.add_edge(component[0], component[1]);
    } else if (size > 2) {
      std::vector<int> seq(size - 2);
      for (int& v : seq) v = component[rng.below(component.size())];
      for (const auto& [u, v] : pruefer_decode(component, seq)) forest.add_edge(u, v);
    }

    std::vector<int> rest;
    rest.reserve(N - size);
    for (int v : remaining) {
      if (!std::binary_search(component.begin(), component.end(), v)) rest.push_back(v);
    }
    remaining = std::move(rest);
  }
  return forest;
}

Polynomial forest_chromatic(int n, int k) {
  check_forest_params(n, k);
  Polynomial p = Polynomial::monomial(1, k);
  const Polynomial qm1({BigInt(-1), BigInt(1)});
  for (int i = 0; i < n - k; ++i) p *= qm1;
  return p;
}

DyckWord forest_cochromatic_word(int n, int k) {
  check_forest_params(n, k);
  std::vector<Step> steps;
  steps.reserve(2 * n);
  for (int i = 0; i < k - 1; ++i) {
    steps.push_back(Step::X);
    steps.push_back(Step::D);
  }
  steps.push_back(Step::X);
  for (int i = 0; i < n - k; ++i) {
    steps.push_back(Step::X);
    steps.push_back(Step::D);
  }
  steps.push_back(Step::D);
  return DyckWord::from_steps(std::move(steps));
}

namespace {

DyckWord repeated_word(int n, bool nested) {
  std::vector<Step> steps;
  steps.reserve(2 * n);
  if (nested) {
    steps.assign(n, Step::X);
    steps.insert(steps.end(), n, Step::D);
  } else {
    for (int i = 0; i < n; ++i) {
      steps.push_back(Step::X);
      steps.push_back(Step::D);
    }
  }
  return DyckWord::from_steps(std::move(steps));
}

void require_n(const FamilySpec& spec) {
  if (spec.n < 1) {
    throw std::invalid_argument("family " + family_name(spec.kind) + ": size not set");
  }
}

}  // namespace

Graph family_graph(const FamilySpec& spec) {
  require_n(spec);
  const int n = spec.n;
  switch (spec.kind) {
    case FamilyKind::Empty:
      return Graph::empty(n);
    case FamilyKind::Path: {
      Graph g = Graph::empty(n);
      for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case FamilyKind::Star: {
      Graph g = Graph::empty(n);
      for (int v = 2; v <= n; ++v) g.add_edge(1, v);
      return g;
    }
    case FamilyKind::Forest: {
      Rng rng(spec.seed);
      return random_forest(n, spec.components.value_or(1), rng);
    }
    case FamilyKind::RandomQt: {
      Rng rng(spec.seed);
      return word_to_graph(random_dyck_word(n, rng)).first;
    }
    case FamilyKind::Complete: {
      Graph g = Graph::empty(n);
      for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
      }
      return g;
    }
  }
  throw std::invalid_argument("family_graph: bad kind");
}

DyckWord family_word(const FamilySpec& spec) {
  require_n(spec);
  const int n = spec.n;
  switch (spec.kind) {
    case FamilyKind::Empty:
      return repeated_word(n, false);
    case FamilyKind::Star:
      return forest_cochromatic_word(n, 1);
    case FamilyKind::Complete:
      return repeated_word(n, true);
    case FamilyKind::RandomQt: {
      Rng rng(spec.seed);
      return random_dyck_word(n, rng);
    }
    case FamilyKind::Path:
    case FamilyKind::Forest:
      return graph_to_word(family_graph(spec));
  }
  throw std::invalid_argument("family_word: bad kind");
}

DyckWord family_cochromatic_word(const FamilySpec& spec) {
  require_n(spec);
  switch (spec.kind) {
    case FamilyKind::Path:
      return forest_cochromatic_word(spec.n, 1);
    case FamilyKind::Forest:
      return forest_cochromatic_word(spec.n, spec.components.value_or(1));
    default:
      return family_word(spec);
  }
}

CountSeq family_stirling(const FamilySpec& spec) {
  require_n(spec);
  switch (spec.kind) {
    case FamilyKind::Path:
      return stirling_from_chromatic(forest_chromatic(spec.n, 1), spec.n);
    case FamilyKind::Forest:
      return stirling_from_chromatic(forest_chromatic(spec.n, spec.components.value_or(1)),
                                     spec.n);
    default:
      return stirling_rook(family_word(spec));
  }
}

}  // namespace gstirling
