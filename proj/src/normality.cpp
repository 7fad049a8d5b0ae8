#include "gstirling/normality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gstirling/chromatic.hpp"
#include "gstirling/errors.hpp"
#include "gstirling/polynomial.hpp"
#include "gstirling/qt.hpp"

namespace gstirling {

std::string verdict_name(RootVerdict v) {
  switch (v) {
    case RootVerdict::Verified: return "verified";
    case RootVerdict::Refuted: return "refuted";
    case RootVerdict::Skipped: return "skipped";
  }
  return "?";
}

HistogramStats histogram_stats(const CountSeq& s) {
  BigInt total = 0, first = 0, second = 0;
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    const BigInt& a = s.values[k];
    total += a;
    first += BigInt(static_cast<long>(k)) * a;
    second += BigInt(static_cast<long>(k * k)) * a;
  }
  if (total == 0) throw EmptySequence("histogram_stats: no positive entry");
  HistogramStats st;
  st.total = total;
  st.mean = Rational(first, total);
  st.mean.canonicalize();
  Rational ex2(second, total);
  ex2.canonicalize();
  st.variance = ex2 - st.mean * st.mean;
  st.variance.canonicalize();
  return st;
}

double std_normal_cdf(double z) {
  // Hart, Computer Approximations (1968); rational approximation for the
  // error function, absolute error below 1e-15. Tails clamp beyond |z|=37.
  static const double p0 = 220.2068679123761;
  static const double p1 = 221.2135961699311;
  static const double p2 = 112.0792914978709;
  static const double p3 = 33.91286607838300;
  static const double p4 = 6.373962203531650;
  static const double p5 = 0.7003830644436881;
  static const double p6 = 0.03526249659989109;

  static const double q0 = 440.4137358247522;
  static const double q1 = 793.8265125199484;
  static const double q2 = 637.3336333788311;
  static const double q3 = 296.5642487796737;
  static const double q4 = 86.78073220294608;
  static const double q5 = 16.06417757920695;
  static const double q6 = 1.755667163182642;
  static const double q7 = 0.08838834764831844;

  static const double cutoff = 7.071;  // 10 / sqrt(2)
  static const double root2pi = 2.506628274631001;

  if (z > 37.0) return 1.0;
  if (z < -37.0) return 0.0;

  const double zabs = std::abs(z);
  const double expntl = std::exp(-0.5 * zabs * zabs);
  double p;
  if (zabs < cutoff) {
    p = expntl *
        ((((((p6 * zabs + p5) * zabs + p4) * zabs + p3) * zabs + p2) * zabs + p1) * zabs + p0) /
        (((((((q7 * zabs + q6) * zabs + q5) * zabs + q4) * zabs + q3) * zabs + q2) * zabs + q1) *
             zabs +
         q0);
  } else {
    p = expntl / root2pi /
        (zabs + 1.0 / (zabs + 2.0 / (zabs + 3.0 / (zabs + 4.0 / (zabs + 0.65)))));
  }
  return (z < 0.0) ? p : 1.0 - p;
}

double kolmogorov_distance(const CountSeq& s) {
  const HistogramStats st = histogram_stats(s);
  if (st.variance == 0) {
    throw DegenerateDistribution("kolmogorov_distance: zero variance");
  }
  const BigFloat total = to_bigfloat(st.total);
  const BigFloat mean = to_bigfloat(st.mean);
  const BigFloat sigma = sqrt(to_bigfloat(st.variance));

  double best = 0.0;
  BigInt cum = 0;
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (s.values[k] == 0) continue;
    const double x =
        BigFloat((BigFloat(static_cast<long>(k), kFloatBits) - mean) / sigma, kFloatBits).get_d();
    const double before = BigFloat(to_bigfloat(cum) / total, kFloatBits).get_d();
    cum += s.values[k];
    const double after = BigFloat(to_bigfloat(cum) / total, kFloatBits).get_d();
    const double phi = std_normal_cdf(x);
    best = std::max({best, std::abs(before - phi), std::abs(after - phi)});
  }
  return best;
}

namespace {

// Pseudo-remainder of a by b over the integers (repeated R = lc(b) R -
// lead(R) x^shift b), rescaled by a positive rational to the primitive
// integer polynomial with the sign of the true remainder, which the Sturm
// chain relies on.
Polynomial primitive_true_remainder(const Polynomial& a, const Polynomial& b) {
  const int db = b.degree();
  const BigInt& lc = b.leading();
  std::vector<BigInt> r = a.coeffs();
  int dr = a.degree();
  int steps = 0;
  while (dr >= db) {
    const BigInt lead = r[dr];
    ++steps;
    for (int j = 0; j < dr; ++j) r[j] *= lc;
    for (int j = 0; j < db; ++j) r[dr - db + j] -= lead * b.coeff(j);
    --dr;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  r.resize(dr + 1);
  Polynomial rem{std::move(r)};
  // rem = lc^steps * (a mod b); undo the sign the premultiplier introduced.
  if (lc < 0 && steps % 2 == 1) return -primitive_part(rem);
  return primitive_part(rem);
}

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

struct SturmSummary {
  int distinct_roots;  // distinct real roots of q in (-inf, 0]
  int gcd_degree;      // degree of gcd(q, q'), i.e. q.degree() - squarefree degree
};

// Generalized Sturm chain of q (q(0) != 0): ends at a constant when q is
// squarefree, and at gcd(q, q') otherwise; sign-variation counts are
// unaffected by that common factor, so the chain counts distinct roots
// either way.
SturmSummary sturm_summary(const Polynomial& q) {
  std::vector<Polynomial> chain;
  chain.push_back(primitive_part(q));
  Polynomial d = q.derivative();
  if (!d.is_zero()) chain.push_back(primitive_part(d));
  while (chain.back().degree() > 0) {
    Polynomial r = -primitive_true_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_neg_inf, at_zero;
  at_neg_inf.reserve(chain.size());
  at_zero.reserve(chain.size());
  for (const Polynomial& p : chain) {
    const int lc = sign_of(p.leading());
    at_neg_inf.push_back(p.degree() % 2 == 0 ? lc : -lc);
    at_zero.push_back(sign_of(p.coeff(0)));
  }
  SturmSummary s;
  s.distinct_roots = variations(at_neg_inf) - variations(at_zero);
  s.gcd_degree = chain.back().degree() > 0 ? chain.back().degree() : 0;
  return s;
}

}  // namespace

RealRootResult real_rooted(const CountSeq& s, const Caps& caps) {
  Polynomial p(std::vector<BigInt>(s.values.begin(), s.values.end()));
  if (p.is_zero()) throw EmptySequence("real_rooted: zero sequence");

  int mult = 0;
  while (p.coeff(mult) == 0) ++mult;
  std::vector<BigInt> shifted(p.coeffs().begin() + mult, p.coeffs().end());
  const Polynomial q(std::move(shifted));

  if (q.degree() > caps.sturm_max_degree) return {RootVerdict::Skipped, -1};
  const int zero_root = (mult > 0) ? 1 : 0;
  if (q.degree() == 0) return {RootVerdict::Verified, zero_root};

  const SturmSummary summary = sturm_summary(q);
  RealRootResult r;
  r.distinct_real_roots = summary.distinct_roots + zero_root;
  r.verdict = (summary.distinct_roots == q.degree() - summary.gcd_degree)
                  ? RootVerdict::Verified
                  : RootVerdict::Refuted;
  return r;
}

bool newton_inequalities(const CountSeq& s) {
  const int lo = s.min_support();
  const int hi = s.max_support();
  if (lo < 0) throw EmptySequence("newton_inequalities: zero sequence");
  const int m = hi - lo;
  for (int j = 1; j < m; ++j) {
    const BigInt a = s.at(lo + j);
    const BigInt lhs = a * a * j * (m - j);
    const BigInt rhs = s.at(lo + j - 1) * s.at(lo + j + 1) * (j + 1) * (m - j + 1);
    if (lhs < rhs) return false;
  }
  return true;
}

KahnCheck kahn_check(const DyckWord& w, const Caps& caps) {
  KahnCheck k;
  k.f = w.n();
  k.ell = leading_x_run(w);
  k.m = trailing_d_run(w);

  const auto [graph, term] = word_to_graph(w);
  k.chi = chromatic_number(term);
  k.v = 2 * k.f - k.ell - k.m;
  k.nu = k.f - k.chi;
  k.ratio = (k.v > 0) ? Rational(2 * k.nu, k.v) : Rational(0);
  k.ratio.canonicalize();
  k.g = Rational(k.chi, k.f);
  k.g.canonicalize();

  if (!(2 * k.f - 2 * k.chi <= k.v && k.v <= 2 * k.f)) {
    throw InternalInconsistency("kahn_check: order sandwich violated for " + w.render());
  }

  const StripResult stripped = strip_isolated(word_to_bipartite(w));
  if (stripped.ell != k.ell || stripped.m != k.m) {
    throw InternalInconsistency("kahn_check: isolated-vertex runs disagree for " + w.render());
  }
  if (stripped.graph.edge_count() <= caps.matching_max_edges) {
    const CountSeq matchings = matching_numbers(stripped.graph, caps);
    if (matchings.max_support() != k.nu) {
      throw InternalInconsistency("kahn_check: matching number != f - chi for " + w.render());
    }
  }
  return k;
}

NormalityReport normality_report(const CountSeq& s, const Caps& caps) {
  NormalityReport r;
  r.stats = histogram_stats(s);
  try {
    r.kolmogorov = kolmogorov_distance(s);
  } catch (const DegenerateDistribution&) {
    r.degenerate = true;
    r.kolmogorov = 0.0;
  }
  r.real_rooted = real_rooted(s, caps);
  r.newton_ok = newton_inequalities(s);
  return r;
}

}  // namespace gstirling
