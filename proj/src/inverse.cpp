#include "fslp/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fslp/fivp.hpp"
#include "fslp/mlf.hpp"
#include "fslp/spectrum.hpp"

namespace fslp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double ForwardResidual::norm() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s);
}

double FrozenJacobian::condition_number() const {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  const auto& sv = svd.singularValues();
  return sv(0) / sv(sv.size() - 1);
}

std::size_t FrozenJacobian::numerical_rank() const {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stacked);
  return static_cast<std::size_t>(qr.rank());
}

namespace inverse {

ForwardResidual forward_residual(const std::vector<Complex>& spectrum_data,
                                 const std::vector<double>& q_coeffs, double alpha, Mesh mesh) {
  if (q_coeffs.size() > spectrum_data.size())
    throw std::invalid_argument("forward_residual: M must not exceed N");
  const Potential q = Potential::sine_basis(q_coeffs);
  ForwardResidual out;
  out.values.reserve(spectrum_data.size());
  for (const Complex& lam : spectrum_data)
    out.values.push_back(fivp::slp_shoot(q, lam, alpha, mesh).endpoint());
  return out;
}

Complex jacobian_entry_green(Complex lambda0, const std::function<double(double)>& w,
                             double alpha, std::size_t quad_points) {
  if (quad_points < 64) throw std::invalid_argument("jacobian_entry_green: quad_points >= 64");
  std::size_t n = quad_points;
  if (n % 2) ++n;
  const double h = 1.0 / static_cast<double>(n);
  const MLParams kernel{alpha, alpha};
  const MLParams eig{alpha, 2.0};

  Complex sum = 0.0;  // t=0 and t=1 endpoints both vanish (t factor, (1-t)^{alpha-1} w)
  for (std::size_t i = 1; i < n; ++i) {
    const double t = h * static_cast<double>(i);
    const double om = 1.0 - t;
    const Complex val = std::pow(om, alpha - 1.0) *
                        mlf::ml_eval(kernel, -lambda0 * std::pow(om, alpha)) * t *
                        mlf::ml_eval(eig, -lambda0 * std::pow(t, alpha)) * w(t);
    sum += (i % 2 ? 4.0 : 2.0) * val;
  }
  return sum * (h / 3.0);
}

Complex jacobian_entry_green(Complex lambda0, std::size_t basis_index, double alpha,
                             std::size_t quad_points) {
  const double k = static_cast<double>(basis_index);
  return jacobian_entry_green(
      lambda0, [k](double t) { return std::sin(k * kPi * t); }, alpha, quad_points);
}

FrozenJacobian build_frozen_jacobian(double alpha, std::size_t N, std::size_t M, Mesh mesh,
                                     const FrozenJacobianOptions& opts) {
  if (M > N) throw std::invalid_argument("build_frozen_jacobian: M must not exceed N");
  Spectrum sp0 = spectrum::enumerate(Potential::zero(), alpha, N, mesh);

  FrozenJacobian J;
  J.lambda0.reserve(N);
  for (const auto& p : sp0.pairs) J.lambda0.push_back(p.lambda);
  J.entries.resize(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(M));
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t k = 0; k < M; ++k)
      J.entries(n, k) = jacobian_entry_green(J.lambda0[n], k + 1, alpha, opts.quad_points);

  J.stacked.resize(static_cast<Eigen::Index>(2 * N), static_cast<Eigen::Index>(M));
  J.stacked.topRows(static_cast<Eigen::Index>(N)) = J.entries.real();
  J.stacked.bottomRows(static_cast<Eigen::Index>(N)) = J.entries.imag();
  return J;
}

NewtonResult frozen_newton(const std::vector<Complex>& spectrum_data, double alpha,
                           std::size_t M, const std::vector<double>& q0, Mesh mesh,
                           const FrozenJacobian& jacobian, const NewtonOptions& opts,
                           const Potential* q_true) {
  const std::size_t N = spectrum_data.size();
  if (M > N) throw std::invalid_argument("frozen_newton: M must not exceed N");
  if (!q0.empty() && q0.size() != M)
    throw std::invalid_argument("frozen_newton: q0 must have length M");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(jacobian.stacked);
  if (static_cast<std::size_t>(qr.rank()) < M)
    throw JacobianRankDeficient(static_cast<std::size_t>(qr.rank()), M);

  std::vector<double> q = q0.empty() ? std::vector<double>(M, 0.0) : q0;
  NewtonReport report;
  int growth_streak = 0;
  double prev_norm = 0.0;
  bool converged = false;

  auto record = [&](const std::vector<double>& coeffs, double rnorm) {
    report.iterates.push_back(coeffs);
    report.residual_norms.push_back(rnorm);
    if (q_true) report.errors.push_back(reconstruction_error(*q_true, coeffs));
  };

  for (int it = 0; it <= opts.maxiter; ++it) {
    ForwardResidual F = forward_residual(spectrum_data, q, alpha, mesh);
    const double rnorm = F.norm();
    record(q, rnorm);

    if (it > 0 && rnorm > prev_norm) {
      if (++growth_streak >= 3) {
        report.iterations = static_cast<std::size_t>(it);
        throw NewtonDiverged(std::move(report), q);
      }
    } else {
      growth_streak = 0;
    }
    prev_norm = rnorm;
    if (it == opts.maxiter) {
      report.iterations = static_cast<std::size_t>(it);
      break;
    }

    Eigen::VectorXd r(static_cast<Eigen::Index>(2 * N));
    for (std::size_t i = 0; i < N; ++i) {
      r(static_cast<Eigen::Index>(i)) = F.values[i].real();
      r(static_cast<Eigen::Index>(N + i)) = F.values[i].imag();
    }
    Eigen::VectorXd delta = qr.solve(r);

    double qn = 0.0, dn = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
      q[k] -= delta(static_cast<Eigen::Index>(k));
      qn += q[k] * q[k];
      dn += delta(static_cast<Eigen::Index>(k)) * delta(static_cast<Eigen::Index>(k));
    }
    if (std::sqrt(dn) <= opts.rtol * (1.0 + std::sqrt(qn))) {
      ForwardResidual Ff = forward_residual(spectrum_data, q, alpha, mesh);
      record(q, Ff.norm());
      report.iterations = static_cast<std::size_t>(it + 1);
      converged = true;
      break;
    }
    report.iterations = static_cast<std::size_t>(it + 1);
  }
  report.converged = converged;
  return NewtonResult{q, std::move(report)};
}

NewtonResult frozen_newton(const std::vector<Complex>& spectrum_data, double alpha,
                           std::size_t M, const std::vector<double>& q0, Mesh mesh,
                           const NewtonOptions& opts, const Potential* q_true) {
  FrozenJacobian J = build_frozen_jacobian(alpha, spectrum_data.size(), M, mesh);
  return frozen_newton(spectrum_data, alpha, M, q0, mesh, J, opts, q_true);
}

double reconstruction_error(const Potential& q_true, const std::vector<double>& q_coeffs,
                            std::size_t min_points) {
  auto qt = [&](double x) {
    double v = 0.0;
    for (std::size_t k = 1; k <= q_coeffs.size(); ++k)
      v += q_coeffs[k - 1] * std::sin(static_cast<double>(k) * kPi * x);
    return v;
  };
  auto diff2 = [&](double x) {
    const double d = q_true(x) - qt(x);
    return d * d;
  };
  // split at piecewise breakpoints so each Simpson panel sees a smooth integrand
  std::vector<double> splits{0.0, 1.0};
  if (q_true.kind() == Potential::Kind::Piecewise)
    for (const auto& pc : q_true.pieces()) {
      splits.push_back(pc.lo);
      splits.push_back(pc.hi);
    }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

  double total = 0.0;
  for (std::size_t s = 0; s + 1 < splits.size(); ++s) {
    const double lo = splits[s], hi = splits[s + 1];
    if (hi - lo < 1e-14) continue;
    std::size_t n = static_cast<std::size_t>(std::ceil((hi - lo) * static_cast<double>(min_points)));
    n += n % 2;
    if (n < 16) n = 16;
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = diff2(lo) + diff2(hi);
    for (std::size_t i = 1; i < n; ++i) sum += diff2(lo + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
    total += sum * h / 3.0;
  }
  return std::sqrt(std::max(total, 0.0));
}

}  // namespace inverse
}  // namespace fslp
