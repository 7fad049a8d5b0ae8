#pragma once

#include "gstirling/caps.hpp"
#include "gstirling/counting.hpp"
#include "gstirling/dyck.hpp"
#include "gstirling/numeric.hpp"

namespace gstirling {

// Exact moments of the distribution Pr(X = k) proportional to s[k].
struct HistogramStats {
  BigInt total;
  Rational mean;
  Rational variance;
};

enum class RootVerdict { Verified, Refuted, Skipped };

std::string verdict_name(RootVerdict v);

struct RealRootResult {
  RootVerdict verdict = RootVerdict::Skipped;
  int distinct_real_roots = -1;  // -1 when skipped
};

struct NormalityReport {
  HistogramStats stats;
  bool degenerate = false;  // sigma = 0; kolmogorov is unset
  double kolmogorov = 0.0;
  RealRootResult real_rooted;
  bool newton_ok = false;
};

// Invariants: v = 2f - ell - m, nu = f - chi, 2f - 2 chi <= v <= 2f.
struct KahnCheck {
  int f = 0;
  int ell = 0;
  int m = 0;
  int chi = 0;
  int v = 0;
  int nu = 0;
  Rational ratio;  // 2 nu / v; 0 when the stripped graph is empty
  Rational g;      // chi / f
};

// Throws EmptySequence when s has no positive entry.
HistogramStats histogram_stats(const CountSeq& s);

// Standard normal CDF via Hart's rational approximation (Computer
// Approximations, 1968); absolute error below 1e-15.
double std_normal_cdf(double x);

// sup_x |F(x) - Phi(x)| for the standardized step CDF F, evaluated at both
// one-sided limits of every jump. Probability masses pass through 256-bit
// floats. Throws DegenerateDistribution when sigma = 0.
double kolmogorov_distance(const CountSeq& s);

// Exact real-rootedness of sum_k s[k] x^k: factors of x divided out, the
// squarefree part taken by exact gcd, distinct real roots counted by a
// Sturm chain over primitive integer polynomials. Verified iff the
// squarefree part has as many distinct real roots as its degree. Degrees
// above the cap yield Skipped.
RealRootResult real_rooted(const CountSeq& s, const Caps& caps = Caps::from_env());

// Necessary condition for real-rootedness, on the re-based support
// [min..max] with m = max - min: a_k^2 k (m-k) >= a_{k-1} a_{k+1} (k+1)(m-k+1)
// at every interior index, in exact integer arithmetic.
bool newton_inequalities(const CountSeq& s);

// f = n, ell/m = leading x-run and trailing D-run, chi structural on the
// construction term, v = 2f - ell - m, nu = f - chi. When the stripped
// bipartite graph is within the matching cap, nu is verified against the
// largest k with a positive matching count.
KahnCheck kahn_check(const DyckWord& w, const Caps& caps = Caps::from_env());

NormalityReport normality_report(const CountSeq& s, const Caps& caps = Caps::from_env());

}  // namespace gstirling
