#ifndef FSLP_MLF_HPP
#define FSLP_MLF_HPP

#include <complex>

namespace fslp {

using Complex = std::complex<double>;

// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MLParams {
  double alpha;
  double beta;
};

// Asymptotic estimate of the n-th zero of E_{alpha,2}.
// zeta is the estimate of z_n^{1/alpha}; z = zeta^alpha (principal branch).
// For n < 0 the exact conjugate of the |n| entry is returned.
struct ZeroAsymptote {
  int n;
  Complex zeta;
  Complex z;
};

namespace mlf {

// Radius separating the series and asymptotic evaluation regimes.
// Grows with alpha: the series loses roughly 0.434*alpha*r^(1/alpha)
// digits to cancellation, which the quad-precision accumulator absorbs
// up to a fixed budget.
double dispatch_radius(double alpha);

// 1/Gamma(x) for real x of any sign; zero at the poles of Gamma.
double reciprocal_gamma(double x);

// Taylor series sum, truncated when |term| <= tol*max(|sum|, 1e-300).
// Summation runs in extended (quad) precision. Throws SeriesCapExceeded
// if the rule has not fired after 2000 terms.
Complex ml_series(const MLParams& p, Complex z, double tol);

// Exponential asymptotic expansion with an n_terms algebraic tail and the
// exponential monomials of every admissible branch (the dominant one plus
// the subdominant reflections near the negative real axis; without those
// the expansion misses the oscillation that produces the real zeros of
// E_{alpha,2} at moderate |z|).  Requires |z| >= dispatch_radius(alpha).
Complex ml_asymptotic(const MLParams& p, Complex z, int n_terms);

// Hybrid evaluation: series inside the dispatch radius, asymptotic with a
// 5-term tail outside.
Complex ml_eval(const MLParams& p, Complex z);

// ml_eval plus which branch it used ("series" or "asymptotic").
Complex ml_eval_branch(const MLParams& p, Complex z, const char** branch);

// Zero estimate from the asymptotic law
//   z_n^{1/alpha} = 2n pi i - (alpha-1)(ln 2pi|n| + (pi/2) sign(n) i)
//                   + ln(alpha/Gamma(2-alpha)),
// with the remainder dropped. Requires n != 0 and alpha in (1,2).
// The ln(alpha/Gamma(2-alpha)) term diverges as alpha -> 2; the value is
// returned as computed, without masking.
ZeroAsymptote zero_asymptote(double alpha, int n);

// Predicted magnitude and phase of the n-th eigenvalue of -D_0^alpha
// (full pre-simplification expressions).
struct EigPrediction {
  double magnitude;
  double phase;
};
EigPrediction eig_asymptotic(double alpha, int n);

// Simplified tails |lambda_n| ~ (2 pi n)^alpha, arg ~ (2-alpha) pi/2.
EigPrediction eig_asymptotic_tail(double alpha, int n);

}  // namespace mlf
}  // namespace fslp

#endif
