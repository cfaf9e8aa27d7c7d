#include "fslp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fslp/mlf.hpp"

namespace fslp {

IncompleteSpectrum::IncompleteSpectrum(Spectrum partial_, std::vector<std::size_t> missing)
    : Error("incomplete-spectrum: " + std::to_string(missing.size()) + " rank(s) missing"),
      partial(std::move(partial_)),
      missing_ranks(std::move(missing)) {}

namespace spectrum {
namespace {

Eigenpair make_pair(Complex lambda, GridFunction u, int iterations) {
  const double res = std::abs(u.endpoint());
  return Eigenpair{0, lambda, std::move(u), res, iterations};
}

// Upper-half-plane representative: for real q the conjugate eigenpair is the
// nodewise conjugate.
void to_upper_half(Eigenpair& p) {
  if (p.lambda.imag() >= 0.0) return;
  p.lambda = std::conj(p.lambda);
  for (auto& v : p.eigenfunction.values) v = std::conj(v);
}

}  // namespace

Eigenpair secant_solve(const Potential& q, double alpha, Complex lambda0, Complex lambda1,
                       Mesh mesh, const SecantOptions& opts) {
  if (lambda0 == lambda1)
    throw std::invalid_argument("secant_solve: seeds must be distinct");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("secant_solve: tol must be positive");

  Complex lam_prev = lambda0;
  Complex lam = lambda1;
  Complex f_prev = fivp::slp_shoot(q, lam_prev, alpha, mesh).endpoint();
  GridFunction u = fivp::slp_shoot(q, lam, alpha, mesh);
  Complex f_cur = u.endpoint();

  for (int it = 1; it <= opts.maxiter; ++it) {
    const Complex denom = lam - lam_prev;
    const Complex df = (f_cur - f_prev) / denom;
    if (!(std::abs(df) > 1e-300)) {
      Eigenpair last = make_pair(lam, std::move(u), it);
      to_upper_half(last);
      throw SecantFailure(SecantFailure::Kind::Stagnation, std::move(last));
    }
    const Complex dlam = -f_cur / df;
    lam_prev = lam;
    f_prev = f_cur;
    lam += dlam;
    u = fivp::slp_shoot(q, lam, alpha, mesh);
    f_cur = u.endpoint();
    if (std::abs(dlam) < opts.tol * std::max(1.0, std::abs(lam))) {
      Eigenpair p = make_pair(lam, std::move(u), it);
      to_upper_half(p);
      return p;
    }
  }
  Eigenpair last = make_pair(lam, std::move(u), opts.maxiter);
  to_upper_half(last);
  throw SecantFailure(SecantFailure::Kind::MaxIter, std::move(last));
}

std::vector<double> real_zero_scan(double alpha, double search_radius, std::size_t grid) {
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::invalid_argument("real_zero_scan: alpha must lie in (1,2)");
  if (grid < 2) throw std::invalid_argument("real_zero_scan: grid must be >= 2");
  const MLParams p{alpha, 2.0};
  auto E = [&](double lam) { return mlf::ml_eval(p, Complex(-lam, 0.0)).real(); };

  std::vector<double> roots;
  double prev_lam = search_radius / static_cast<double>(grid) * 1e-6;
  double prev = E(prev_lam);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double lam = search_radius * static_cast<double>(i) / static_cast<double>(grid);
    const double cur = E(lam);
    if (prev * cur < 0.0) {
      double lo = prev_lam, hi = lam, flo = prev;
      while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        const double fm = E(mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_lam = lam;
    prev = cur;
  }
  return roots;
}

Spectrum enumerate(const Potential& q, double alpha, std::size_t N, Mesh mesh,
                   const EnumerateOptions& opts) {
  if (N < 1) throw std::invalid_argument("enumerate: N must be >= 1");
  const double qm = q.mean();

  // Seed set: real zeros of E_{alpha,2} below a radius covering rank N,
  // then the asymptotic complex-branch zeros 1..N+extra.
  std::vector<Complex> seeds;
  const double radius =
      std::max(60.0, 1.4 * std::abs(mlf::zero_asymptote(alpha, static_cast<int>(N)).z));
  const std::size_t grid =
      std::min<std::size_t>(400000, static_cast<std::size_t>(radius / 0.02) + 100);
  for (double r : real_zero_scan(alpha, radius, grid)) seeds.emplace_back(r, 0.0);
  for (std::size_t n = 1; n <= N + opts.extra_seeds; ++n)
    seeds.push_back(-mlf::zero_asymptote(alpha, static_cast<int>(n)).z);

  std::vector<Eigenpair> found;
  for (const Complex& s : seeds) {
    const Complex s0 = s + qm + Complex(0.0, opts.seed_imag);
    const Complex s1 = s0 * (1.0 + 1e-3) + Complex(0.0, 0.1);
    Eigenpair p{0, 0.0, GridFunction::zeros(mesh), 0.0, 0};
    try {
      p = secant_solve(q, alpha, s0, s1, mesh, opts.secant);
    } catch (const SecantFailure&) {
      continue;
    } catch (const DivergenceError&) {
      continue;
    }
    auto dup = std::find_if(found.begin(), found.end(), [&](const Eigenpair& e) {
      return std::abs(e.lambda - p.lambda) < opts.dedup_rtol * std::max(1.0, std::abs(e.lambda));
    });
    if (dup == found.end()) {
      found.push_back(std::move(p));
    } else if (p.residual < dup->residual) {
      *dup = std::move(p);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Eigenpair& a, const Eigenpair& b) { return std::abs(a.lambda) < std::abs(b.lambda); });
  if (found.size() > N) found.erase(found.begin() + static_cast<std::ptrdiff_t>(N), found.end());
  for (std::size_t i = 0; i < found.size(); ++i) found[i].index = i + 1;

  Spectrum sp{alpha, std::move(found)};
  if (sp.pairs.size() < N) {
    std::vector<std::size_t> missing;
    for (std::size_t r = sp.pairs.size() + 1; r <= N; ++r) missing.push_back(r);
    throw IncompleteSpectrum(std::move(sp), std::move(missing));
  }
  return sp;
}

std::vector<Complex> decay_remainders(const Potential& q, double alpha, std::size_t N,
                                      Mesh mesh, const EnumerateOptions& opts) {
  Spectrum with_q = enumerate(q, alpha, N, mesh, opts);
  Spectrum base = enumerate(Potential::zero(), alpha, N, mesh, opts);
  const double qm = q.mean();
  std::vector<Complex> c(N);
  for (std::size_t n = 0; n < N; ++n)
    c[n] = with_q.pairs[n].lambda - base.pairs[n].lambda - qm;
  return c;
}

}  // namespace spectrum
}  // namespace fslp
