#include "fslp/mlf.hpp"

#include <quadmath.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fslp/errors.hpp"

namespace fslp {
namespace mlf {
namespace {

constexpr int kSeriesCap = 2000;
constexpr double kPi = 3.14159265358979323846;

// Per-thread ladder of lgamma(beta + alpha*k) values, grown on demand.
// The series is called many times with the same (alpha, beta) from the
// quadrature loops; caching the ladder removes the lgammaq per term.
const std::vector<__float128>& lgamma_ladder(double alpha, double beta, std::size_t upto) {
  thread_local std::map<std::pair<double, double>, std::vector<__float128>> cache;
  auto& v = cache[{alpha, beta}];
  if (v.size() <= upto) {
    const __float128 a = alpha, b = beta;
    v.reserve(upto + 16);
    for (std::size_t k = v.size(); k <= upto + 15; ++k)
      v.push_back(lgammaq(b + a * static_cast<__float128>(k)));
  }
  return v;
}

// Minimal complex arithmetic in __float128; only what the series needs.
struct QComplex {
  __float128 re;
  __float128 im;
};

inline QComplex qmul(QComplex a, QComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline QComplex qscale(QComplex a, __float128 s) { return {a.re * s, a.im * s}; }

inline __float128 qabs2(QComplex a) { return a.re * a.re + a.im * a.im; }

}  // namespace

double dispatch_radius(double alpha) {
  // Cancellation in the series costs ~0.434*alpha*r^(1/alpha) digits; with a
  // quad accumulator a 20-digit budget keeps ~1e-13 headroom. Floor of 40
  // keeps the asymptotic side comfortably in its regime for small alpha.
  double r = std::pow(46.08 / alpha, alpha);
  return std::max(40.0, std::min(r, 600.0));
}

double reciprocal_gamma(double x) {
  if (x > 0.0) return std::exp(-std::lgamma(x));
  double n = std::round(x);
  if (n <= 0.0 && std::abs(x - n) < 1e-12) return 0.0;  // removable pole
  // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
  return std::sin(kPi * x) * std::exp(std::lgamma(1.0 - x)) / kPi;
}

Complex ml_series(const MLParams& p, Complex z, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("ml_series: tol must be positive");
  const QComplex zq{(__float128)z.real(), (__float128)z.imag()};

  QComplex sum{0, 0};
  const std::vector<__float128>* lg = &lgamma_ladder(p.alpha, p.beta, 64);
  QComplex term{expq(-(*lg)[0]), 0};  // z^0 / Gamma(beta)
  const __float128 tol2 = (__float128)tol * (__float128)tol;
  const __float128 floor2 = 1e-300Q * 1e-300Q;

  for (int k = 0; k < kSeriesCap; ++k) {
    sum.re += term.re;
    sum.im += term.im;
    if (!(finiteq(sum.re) && finiteq(sum.im))) throw SeriesCapExceeded();
    __float128 t2 = qabs2(term);
    __float128 s2 = qabs2(sum);
    if (t2 <= tol2 * (s2 > floor2 ? s2 : floor2))
      return Complex((double)sum.re, (double)sum.im);
    if (static_cast<std::size_t>(k + 1) >= lg->size())
      lg = &lgamma_ladder(p.alpha, p.beta, static_cast<std::size_t>(k + 1) + 64);
    term = qscale(qmul(term, zq), expq((*lg)[k] - (*lg)[k + 1]));
    if (!(finiteq(term.re) && finiteq(term.im))) throw SeriesCapExceeded();
  }
  throw SeriesCapExceeded();
}

Complex ml_asymptotic(const MLParams& p, Complex z, int n_terms) {
  if (n_terms < 1 || n_terms > 10)
    throw std::invalid_argument("ml_asymptotic: n_terms must be in [1,10]");
  const double r = std::abs(z);
  const double r0 = dispatch_radius(p.alpha);
  if (r < r0) throw AsymptoticDomainError(r, r0);

  const double alpha = p.alpha;
  const double beta = p.beta;

  // Algebraic tail sum_{k=1}^{N} z^{-k} / Gamma(beta - alpha k).
  Complex tail = 0.0;
  Complex zk = 1.0;
  for (int k = 1; k <= n_terms; ++k) {
    zk *= z;
    tail += reciprocal_gamma(beta - alpha * k) / zk;
  }
  Complex out = -tail;

  // Exponential monomials (1/alpha) s^(1-beta) e^s with s = z^(1/alpha)
  // rotated onto each admissible branch. m = 0 is always admissible for
  // alpha > 1; the m = -/+1 reflections carry the subdominant exponential
  // that dominates the tail near the negative real axis at moderate |z|.
  const double theta = std::arg(z);  // (-pi, pi]
  const double lr = std::log(r);
  const double r1a = std::exp(lr / alpha);
  for (int m : {0, -1, 1}) {
    const double thm = theta + 2.0 * kPi * m;
    const bool admissible =
        (m == 0) ? std::abs(thm) <= alpha * kPi : std::abs(thm) < alpha * kPi;
    if (!admissible) continue;
    const double phi = thm / alpha;
    const Complex s = r1a * Complex(std::cos(phi), std::sin(phi));
    const Complex log_s(lr / alpha, phi);  // continued log, not re-wrapped
    out += std::exp((1.0 - beta) * log_s + s) / alpha;
  }
  return out;
}

Complex ml_eval_branch(const MLParams& p, Complex z, const char** branch) {
  if (std::abs(z) <= dispatch_radius(p.alpha)) {
    if (branch) *branch = "series";
    return ml_series(p, z, 1e-16);
  }
  if (branch) *branch = "asymptotic";
  Complex v = ml_asymptotic(p, z, 5);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error("ml_eval: non-finite asymptotic value");
  return v;
}

Complex ml_eval(const MLParams& p, Complex z) { return ml_eval_branch(p, z, nullptr); }

ZeroAsymptote zero_asymptote(double alpha, int n) {
  if (n == 0) throw std::invalid_argument("zero_asymptote: n must be nonzero");
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::invalid_argument("zero_asymptote: alpha must lie in (1,2)");
  if (n < 0) {
    ZeroAsymptote pos = zero_asymptote(alpha, -n);
    return {n, std::conj(pos.zeta), std::conj(pos.z)};
  }
  const double an = n;
  const Complex zeta =
      Complex(0.0, 2.0 * kPi * an) -
      (alpha - 1.0) * Complex(std::log(2.0 * kPi * an), kPi / 2.0) +
      std::log(alpha / std::tgamma(2.0 - alpha));
  return {n, zeta, std::pow(zeta, alpha)};
}

EigPrediction eig_asymptotic(double alpha, int n) {
  if (n < 1) throw std::invalid_argument("eig_asymptotic: n must be >= 1");
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::invalid_argument("eig_asymptotic: alpha must lie in (1,2)");
  const double ln2pin = std::log(2.0 * kPi * n);
  const double lg = std::log(alpha / std::tgamma(2.0 - alpha));
  const double t1 = 2.0 * kPi * n + (1.0 - alpha) * kPi / 2.0;
  const double t2 = (1.0 - alpha) * ln2pin + lg;
  const double mag = std::pow(t1 * t1 + t2 * t2, alpha / 2.0);
  const double phase = kPi - alpha * std::atan(t1 / ((alpha - 1.0) * ln2pin - lg));
  return {mag, phase};
}

EigPrediction eig_asymptotic_tail(double alpha, int n) {
  return {std::pow(2.0 * kPi * n, alpha), (2.0 - alpha) * kPi / 2.0};
}

}  // namespace mlf
}  // namespace fslp
