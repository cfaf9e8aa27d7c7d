#include "fslp/fivp.hpp"

#include <cmath>
#include <stdexcept>

#include "fslp/errors.hpp"

namespace fslp {
namespace fivp {
namespace {

// b_{j,k+1} depends only on m = k-j; c_b[m] = (m+1)^a - m^a.
// Middle corrector weights likewise: d[m] = (m+2)^{a+1} + m^{a+1} - 2(m+1)^{a+1}
// for j = 1..k with m = k-j.
struct WeightTables {
  std::vector<double> cb;
  std::vector<double> d;
  std::vector<double> pw_a;   // j^alpha
  std::vector<double> pw_a1;  // j^{alpha+1}

  WeightTables(double alpha, std::size_t K) {
    pw_a.resize(K + 2);
    pw_a1.resize(K + 2);
    for (std::size_t j = 0; j <= K + 1; ++j) {
      const double dj = static_cast<double>(j);
      pw_a[j] = std::pow(dj, alpha);
      pw_a1[j] = std::pow(dj, alpha + 1.0);
    }
    cb.resize(K + 1);
    for (std::size_t m = 0; m <= K; ++m) cb[m] = pw_a[m + 1] - pw_a[m];
    d.resize(K + 1);
    for (std::size_t m = 0; m + 2 <= K + 1; ++m)
      d[m] = pw_a1[m + 2] + pw_a1[m] - 2.0 * pw_a1[m + 1];
    if (K >= 1) d[K] = 0.0;  // unused
  }
};

GridFunction march(const IVPSpec& spec, Mesh mesh) {
  const double alpha = spec.alpha;
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::invalid_argument("fivp::solve: alpha must lie in (1,2)");
  const std::size_t K = mesh.K;
  const double h = mesh.h();
  const double ha = std::pow(h, alpha);
  const double c_pred = ha / std::tgamma(1.0 + alpha);
  const double c_corr = ha / std::tgamma(2.0 + alpha);

  WeightTables w(alpha, K);
  std::vector<Complex> u(K + 1), f(K + 1);
  u[0] = spec.u0;
  f[0] = spec.rhs(0.0, u[0]);

  for (std::size_t k = 0; k + 1 <= K; ++k) {
    const double x1 = mesh.node(k + 1);
    const Complex base = spec.u0 + spec.u0_prime * x1;

    // predictor history: sum_{j=0..k} cb[k-j] f_j
    Complex sp = 0.0;
    {
      const double* cb = w.cb.data();
      const Complex* fp = f.data();
      for (std::size_t j = 0; j <= k; ++j) sp += cb[k - j] * fp[j];
    }
    const Complex upred = base + c_pred * sp;

    // corrector history: a_{0,k+1} f_0 + sum_{j=1..k} d[k-j] f_j
    const double dk = static_cast<double>(k);
    const double a0 = w.pw_a1[k] - (dk - alpha) * w.pw_a[k + 1];
    Complex sc = a0 * f[0];
    {
      const double* dd = w.d.data();
      const Complex* fp = f.data();
      for (std::size_t j = 1; j <= k; ++j) sc += dd[k - j] * fp[j];
    }
    const Complex hist = base + c_corr * sc;

    // corrector, then one corrector re-evaluation
    Complex fc = spec.rhs(x1, upred);
    Complex uc = hist + c_corr * fc;
    fc = spec.rhs(x1, uc);
    uc = hist + c_corr * fc;

    if (!std::isfinite(uc.real()) || !std::isfinite(uc.imag())) throw DivergenceError(k + 1);
    u[k + 1] = uc;
    f[k + 1] = spec.rhs(x1, uc);
  }
  return GridFunction(mesh, std::move(u));
}

}  // namespace

std::vector<double> weights_b(double alpha, std::size_t k) {
  std::vector<double> b(k + 1);
  for (std::size_t j = 0; j <= k; ++j)
    b[j] = std::pow(static_cast<double>(k + 1 - j), alpha) -
           std::pow(static_cast<double>(k - j), alpha);
  return b;
}

std::vector<double> weights_a(double alpha, std::size_t k) {
  std::vector<double> a(k + 2);
  const double dk = static_cast<double>(k);
  a[0] = std::pow(dk, alpha + 1.0) - (dk - alpha) * std::pow(dk + 1.0, alpha);
  for (std::size_t j = 1; j <= k; ++j) {
    const double m = static_cast<double>(k - j);
    a[j] = std::pow(m + 2.0, alpha + 1.0) + std::pow(m, alpha + 1.0) -
           2.0 * std::pow(m + 1.0, alpha + 1.0);
  }
  a[k + 1] = 1.0;
  return a;
}

GridFunction solve(const IVPSpec& spec, Mesh mesh) { return march(spec, mesh); }

GridFunction solve_richardson(const IVPSpec& spec, Mesh mesh) {
  GridFunction coarse = march(spec, mesh);
  GridFunction fine = march(spec, mesh.refined());
  std::vector<Complex> out(mesh.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = (4.0 * fine.values[2 * k] - coarse.values[k]) / 3.0;
  return GridFunction(mesh, std::move(out));
}

GridFunction slp_shoot(const Potential& q, Complex lambda, double alpha, Mesh mesh,
                       bool extrapolate) {
  IVPSpec spec{alpha, 0.0, 1.0,
               [&q, lambda](double x, Complex u) { return (q(x) - lambda) * u; }};
  return extrapolate ? solve_richardson(spec, mesh) : solve(spec, mesh);
}

GridFunction sensitivity_shoot(const Potential& q, Complex lambda,
                               const std::function<double(double)>& w, const GridFunction& u,
                               double alpha, Mesh mesh, bool extrapolate) {
  if (u.mesh.K != mesh.K)
    throw std::invalid_argument("sensitivity_shoot: u must live on the same mesh");
  if (!extrapolate) {
    // force with the supplied samples; x maps exactly onto a node
    const double K = static_cast<double>(mesh.K);
    IVPSpec spec{alpha, 0.0, 0.0, [&](double x, Complex v) {
                   const std::size_t k = static_cast<std::size_t>(std::lround(x * K));
                   return (q(x) - lambda) * v + w(x) * u.values[k];
                 }};
    return solve(spec, mesh);
  }
  // extrapolated: re-march u alongside v on each mesh so both passes use
  // the same discrete u
  auto coupled = [&](Mesh m) {
    GridFunction uh = slp_shoot(q, lambda, alpha, m, false);
    const double K = static_cast<double>(m.K);
    IVPSpec spec{alpha, 0.0, 0.0, [&](double x, Complex v) {
                   const std::size_t k = static_cast<std::size_t>(std::lround(x * K));
                   return (q(x) - lambda) * v + w(x) * uh.values[k];
                 }};
    return solve(spec, m);
  };
  GridFunction coarse = coupled(mesh);
  GridFunction fine = coupled(mesh.refined());
  std::vector<Complex> out(mesh.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = (4.0 * fine.values[2 * k] - coarse.values[k]) / 3.0;
  return GridFunction(mesh, std::move(out));
}

}  // namespace fivp
}  // namespace fslp
