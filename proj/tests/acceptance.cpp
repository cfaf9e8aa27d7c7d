// Acceptance suite: one criterion per invocation (1..9) or "all".
// Prints a detail line per sub-check and a final PASS/FAIL line per
// criterion; exits nonzero if any requested criterion fails.

#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "fslp/fivp.hpp"
#include "fslp/inverse.hpp"
#include "fslp/mlf.hpp"
#include "fslp/spectrum.hpp"
#include "oracles.hpp"

using fslp::Complex;
using fslp::Mesh;
using fslp::Potential;
namespace spectrum = fslp::spectrum;
namespace inverse = fslp::inverse;
namespace fivp = fslp::fivp;
namespace mlf = fslp::mlf;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  bool ok = true;
  void check(bool cond, const char* fmt, ...) {
    va_list ap;
    va_start(ap, fmt);
    std::printf("  [%s] ", cond ? "ok" : "FAIL");
    std::vprintf(fmt, ap);
    std::printf("\n");
    va_end(ap);
    ok = ok && cond;
  }
};

double relc(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

std::vector<Complex> eigenvalues(const Potential& q, double alpha, std::size_t N, Mesh mesh) {
  auto sp = spectrum::enumerate(q, alpha, N, mesh);
  std::vector<Complex> out;
  for (const auto& p : sp.pairs) out.push_back(p.lambda);
  return out;
}

// ---------------------------------------------------------------- 1
bool criterion1() {
  Criterion c;
  Mesh mesh(1000);
  const Potential q0 = Potential::zero();

  auto p = spectrum::secant_solve(q0, 1.6, {13.0, 0.1}, {13.5, 0.1}, mesh);
  c.check(relc(p.lambda, {13.4205, 0}) <= 5e-4, "alpha=1.6 rank1 = %.6f%+.6fi vs 13.4205",
          p.lambda.real(), p.lambda.imag());
  p = spectrum::secant_solve(q0, 1.6, {14.5, 0.1}, {14.7, 0.1}, mesh);
  c.check(relc(p.lambda, {14.6454, 0}) <= 5e-4, "alpha=1.6 rank2 = %.6f%+.6fi vs 14.6454",
          p.lambda.real(), p.lambda.imag());
  p = spectrum::secant_solve(q0, 1.599025, {14.0, 0.2}, {14.1, 0.25}, mesh);
  c.check(relc(p.lambda, {14.0062, 0.1955}) <= 5e-4,
          "alpha=1.599025 = %.6f%+.6fi vs 14.0062+0.1955i", p.lambda.real(), p.lambda.imag());
  p = spectrum::secant_solve(q0, 1.5991153, {14.0, 0.0}, {14.005, 0.0}, mesh);
  c.check(relc(p.lambda, {14.0024, 0}) <= 5e-4, "alpha=1.5991153 low = %.6f vs 14.0024",
          p.lambda.real());
  p = spectrum::secant_solve(q0, 1.5991153, {14.013, 0.0}, {14.018, 0.0}, mesh);
  c.check(relc(p.lambda, {14.0150, 0}) <= 5e-4, "alpha=1.5991153 high = %.6f vs 14.0150",
          p.lambda.real());
  return c.ok;
}

// ---------------------------------------------------------------- 2
bool criterion2() {
  Criterion c;
  auto r1 = spectrum::real_zero_scan(1.5990, 30.0, 60000);
  c.check(r1.empty(), "alpha=1.5990: %zu real eigenvalues (want 0)", r1.size());
  auto r2 = spectrum::real_zero_scan(1.5992, 30.0, 60000);
  c.check(r2.size() >= 2, "alpha=1.5992: %zu real eigenvalues (want >= 2)", r2.size());
  auto r3 = spectrum::real_zero_scan(1.75, 200.0, 200000);
  c.check(r3.size() == 4, "alpha=1.75, |lambda|<200: %zu real eigenvalues (want 4)", r3.size());
  return c.ok;
}

// ---------------------------------------------------------------- 3
bool criterion3() {
  Criterion c;
  Mesh mesh(1000);
  auto p1 = spectrum::secant_solve(Potential::q1(), 1.6, {14.0, 1.5}, {14.2, 1.6}, mesh);
  c.check(relc(p1.lambda, {14.6843, 1.7197}) <= 5e-4,
          "q1 alpha=1.6: %.6f%+.6fi vs 14.6843+1.7197i (residual %.1e)", p1.lambda.real(),
          p1.lambda.imag(), p1.residual);
  auto sp2 = spectrum::enumerate(Potential::q2(), 1.6, 1, mesh);
  c.check(relc(sp2.pairs[0].lambda, {14.2242, 1.7910}) <= 5e-4,
          "q2 alpha=1.6: %.6f%+.6fi vs 14.2242+1.7910i", sp2.pairs[0].lambda.real(),
          sp2.pairs[0].lambda.imag());
  return c.ok;
}

// ---------------------------------------------------------------- 4
bool criterion4() {
  Criterion c;
  Mesh mesh_fwd(1000), mesh_inv(800);
  struct Cell {
    double alpha;
    const char* name;
    double paper;
  };

  const Cell q1cells[] = {{1.1, "q1", 4.156e-3}, {4.0 / 3.0, "q1", 4.013e-3},
                          {1.5, "q1", 4.042e-3}};
  const Cell q2cells[] = {{1.1, "q2", 1.983e-1}, {4.0 / 3.0, "q2", 1.984e-1},
                          {1.5, "q2", 1.988e-1}};

  // projection floor of q2 at M=10, computed by quadrature oracle
  {
    Potential q2 = Potential::q2();
    std::vector<double> proj;
    const double bp[] = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    for (std::size_t k = 1; k <= 10; ++k) {
      double ck = 0.0;
      for (int s = 0; s < 5; ++s)
        ck += oracles::simpson([&](double t) { return q2(t) * std::sin(k * kPi * t); }, bp[s],
                               bp[s + 1], 400);
      proj.push_back(2.0 * ck);
    }
    std::printf("  (info) q2 sine-projection floor at M=10: e = %.4e\n",
                inverse::reconstruction_error(q2, proj));
  }

  auto run_cell = [&](double alpha, const Potential& q, std::size_t NM) {
    auto data = eigenvalues(q, alpha, NM, mesh_fwd);
    auto res = inverse::frozen_newton(data, alpha, NM, {}, mesh_inv, {}, &q);
    return res.report.errors.back();
  };

  for (const auto& cell : q1cells) {
    const double e = run_cell(cell.alpha, Potential::q1(), 8);
    c.check(e >= 0.5 * cell.paper && e <= 2.0 * cell.paper,
            "q1 alpha=%.4f N=M=8: e = %.4e vs paper %.3e (band [0.5x, 2x])", cell.alpha, e,
            cell.paper);
  }
  for (const auto& cell : q2cells) {
    const double e = run_cell(cell.alpha, Potential::q2(), 10);
    c.check(e >= 0.8 * cell.paper && e <= 1.5 * cell.paper,
            "q2 alpha=%.4f N=M=10: e = %.4e vs paper %.3e (band [0.8x, 1.5x])", cell.alpha, e,
            cell.paper);
  }
  {
    const double e = run_cell(1.8, Potential::q2(), 10);
    c.check(e > 1.0, "q2 alpha=9/5 N=M=10: e = %.4e (want > 1e0; paper 1.709e0)", e);
  }
  return c.ok;
}

// ---------------------------------------------------------------- 5
bool criterion5() {
  Criterion c;
  Mesh mesh(800);
  const double alphas[] = {1.02, 1.5, 1.75};
  const std::size_t nms[] = {5, 8, 10, 15};
  const double paper[3][4] = {{5.313e0, 8.267e0, 1.049e1, 1.656e1},
                              {2.095e1, 4.608e1, 7.978e1, 2.299e2},
                              {2.573e3, 8.767e3, 1.110e4, 8.524e4}};
  double cond[3][4];
  for (int i = 0; i < 3; ++i) {
    auto J = inverse::build_frozen_jacobian(alphas[i], 15, 15, mesh);
    for (int j = 0; j < 4; ++j) {
      const auto nm = static_cast<Eigen::Index>(nms[j]);
      Eigen::MatrixXcd sub = J.entries.topLeftCorner(nm, nm);
      Eigen::MatrixXd stacked(2 * nm, nm);
      stacked.topRows(nm) = sub.real();
      stacked.bottomRows(nm) = sub.imag();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
      cond[i][j] = svd.singularValues()(0) / svd.singularValues()(nm - 1);
      const double ratio = cond[i][j] / paper[i][j];
      c.check(ratio >= 0.5 && ratio <= 2.0, "alpha=%.2f N=M=%zu: cond = %.4e vs %.3e (x%.3f)",
              alphas[i], nms[j], cond[i][j], paper[i][j], ratio);
    }
  }
  for (int j = 0; j < 4; ++j)
    c.check(cond[0][j] < cond[1][j] && cond[1][j] < cond[2][j],
            "monotone in alpha at N=M=%zu", nms[j]);
  for (int i = 0; i < 3; ++i)
    c.check(cond[i][0] < cond[i][1] && cond[i][1] < cond[i][2] && cond[i][2] < cond[i][3],
            "monotone in N=M at alpha=%.2f", alphas[i]);
  return c.ok;
}

// ---------------------------------------------------------------- 6
bool criterion6() {
  Criterion c;
  Mesh mesh(1000);
  for (double alpha : {1.1, 4.0 / 3.0, 1.5, 1.75}) {
    auto sp = spectrum::enumerate(Potential::zero(), alpha, 30, mesh);
    std::size_t n_real = 0;
    for (const auto& p : sp.pairs)
      if (std::abs(p.lambda.imag()) < 1e-8 * std::max(1.0, std::abs(p.lambda))) ++n_real;

    double worst_mag = 0.0;
    std::vector<double> phase_err;
    for (std::size_t rank = 1; rank <= 30; ++rank) {
      const long m = static_cast<long>(rank) - static_cast<long>(n_real / 2);
      if (m < 1) continue;
      const auto pred = mlf::eig_asymptotic(alpha, static_cast<int>(m));
      const Complex lam = sp.pairs[rank - 1].lambda;
      if (rank >= 5)
        worst_mag = std::max(worst_mag, std::abs(std::abs(lam) - pred.magnitude) / std::abs(lam));
      if (rank >= 10) phase_err.push_back(std::abs(std::arg(lam) - pred.phase));
    }
    c.check(worst_mag <= 0.02, "alpha=%.4f: worst |lambda| rel err for n>=5 is %.4f", alpha,
            worst_mag);
    bool mono = true;
    for (std::size_t i = 0; i + 1 < phase_err.size(); ++i)
      if (phase_err[i + 1] > phase_err[i] * (1 + 1e-9) + 1e-12) mono = false;
    c.check(mono, "alpha=%.4f: phase error decreases monotonically on ranks [10,30]", alpha);
  }
  return c.ok;
}

// ---------------------------------------------------------------- 7
bool criterion7() {
  Criterion c;
  Mesh mesh_fwd(1000), mesh_inv(800);
  Potential q1 = Potential::q1();
  auto data = eigenvalues(q1, 1.5, 8, mesh_fwd);
  auto res = inverse::frozen_newton(data, 1.5, 8, {}, mesh_inv, {}, &q1);
  const auto& r = res.report.residual_norms;
  bool dropped = false;
  for (std::size_t i = 1; i < r.size() && i <= 5; ++i)
    if (r[i] <= r[0] / 100.0) dropped = true;
  std::printf("  residual history:");
  for (std::size_t i = 0; i < r.size() && i <= 6; ++i) std::printf(" %.3e", r[i]);
  std::printf("\n");
  c.check(dropped, "||F|| drops by >= 2 orders within 5 frozen-Newton iterations");
  return c.ok;
}

// ---------------------------------------------------------------- 8
bool criterion8() {
  Criterion c;

  // Green's-function entries vs sensitivity-IVP endpoints
  for (double alpha : {1.1, 1.5, 1.75}) {
    Mesh mesh(800);
    auto sp = spectrum::enumerate(Potential::zero(), alpha, 5, mesh);
    double worst = 0.0;
    for (std::size_t n = 0; n < 5; ++n) {
      const Complex lam = sp.pairs[n].lambda;
      auto u = fivp::slp_shoot(Potential::zero(), lam, alpha, mesh, false);
      for (std::size_t k = 1; k <= 5; ++k) {
        const Complex green = inverse::jacobian_entry_green(lam, k, alpha);
        auto v = fivp::sensitivity_shoot(
            Potential::zero(), lam, [k](double t) { return std::sin(k * kPi * t); }, u, alpha,
            mesh);
        worst = std::max(worst, std::abs(green - v.endpoint()) / std::abs(green));
      }
    }
    c.check(worst <= 1e-3, "alpha=%.2f: worst Green-vs-sensitivity rel err %.2e (N=M=5)",
            alpha, worst);
  }

  // Mittag-Leffler closed forms at 1e-9 relative
  {
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double r = 0.5 + 14.5 * i / 49.0;
      const double th = -kPi + 2.0 * kPi * ((i * 7) % 50) / 50.0;
      const Complex z = std::polar(r, th);
      const Complex sq = std::sqrt(z);
      worst = std::max(worst, relc(mlf::ml_eval({1.0, 1.0}, z), std::exp(z)));
      worst = std::max(worst, relc(mlf::ml_eval({2.0, 1.0}, z), std::cosh(sq)));
      worst = std::max(worst, relc(mlf::ml_eval({2.0, 2.0}, z), std::sinh(sq) / sq));
      const Complex lhs = mlf::ml_eval({1.5, 2.0}, z);
      const Complex rhs = 1.0 + z * mlf::ml_eval({1.5, 3.5}, z);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      worst = std::max(worst, std::abs(std::conj(mlf::ml_eval({1.5, 2.0}, z)) -
                                       mlf::ml_eval({1.5, 2.0}, std::conj(z))));
    }
    ok = worst <= 1e-9;
    c.check(ok, "Mittag-Leffler closed forms / recurrence / conjugation: worst %.2e", worst);
  }

  // manufactured-solution convergence order
  {
    const double a = 1.5;
    const double g0 = 2.0 / std::tgamma(3.0 - a);
    double first = 0, last = 0, prev = 1e300;
    bool mono = true;
    int count = 0;
    for (std::size_t K : {50, 100, 200, 400, 800}) {
      Mesh mesh(K);
      auto u = fivp::solve({a, 0.0, 0.0,
                            [&](double x, Complex) { return Complex(g0 * std::pow(x, 2.0 - a)); }},
                           mesh);
      double err = 0.0;
      for (std::size_t k = 0; k <= K; ++k)
        err = std::max(err, std::abs(u.values[k] - Complex(mesh.node(k) * mesh.node(k))));
      if (err >= prev) mono = false;
      if (count == 0) first = err;
      last = err;
      prev = err;
      ++count;
    }
    const double order = std::log2(first / last) / (count - 1);
    c.check(mono && order >= 1.0, "manufactured solution: monotone errors, observed order %.2f",
            order);
  }

  // weight-sum identities
  {
    double worst = 0.0;
    for (double a : {1.1, 1.5, 1.9}) {
      for (std::size_t k = 0; k <= 200; k += 7) {
        auto b = fivp::weights_b(a, k);
        double sb = 0.0;
        for (double v : b) sb += v;
        worst = std::max(worst, std::abs(sb - std::pow(k + 1.0, a)) / std::pow(k + 1.0, a));
        auto aw = fivp::weights_a(a, k);
        double sa = 0.0;
        for (double v : aw) sa += v;
        worst = std::max(worst,
                         std::abs(sa - (a + 1.0) * std::pow(k + 1.0, a)) /
                             ((a + 1.0) * std::pow(k + 1.0, a)));
      }
    }
    c.check(worst <= 1e-10, "weight-sum identities: worst rel dev %.2e", worst);
  }
  return c.ok;
}

// ---------------------------------------------------------------- 9
bool criterion9() {
  Criterion c;
  Mesh mesh(250);
  for (double alpha : {1.2, 1.5, 1.8}) {
    auto base = eigenvalues(Potential::zero(), alpha, 5, mesh);
    for (double shift : {-5.0, 1.0, 10.0}) {
      auto shifted = eigenvalues(Potential::constant(shift), alpha, 5, mesh);
      double worst = 0.0;
      for (std::size_t i = 0; i < 5; ++i)
        worst = std::max(worst, std::abs(shifted[i] - base[i] - shift));
      c.check(worst <= 1e-6, "alpha=%.1f c=%+.0f: worst |lambda(c) - lambda(0) - c| = %.2e",
              alpha, shift, worst);
    }
  }
  return c.ok;
}

struct Entry {
  int id;
  const char* title;
  bool (*fn)();
};

const Entry kCriteria[] = {
    {1, "named zero-potential eigenvalues", criterion1},
    {2, "real-zero onset and counts", criterion2},
    {3, "nonzero-potential eigenvalues", criterion3},
    {4, "reconstruction errors (Table 1)", criterion4},
    {5, "stacked-Jacobian condition numbers (Table 2)", criterion5},
    {6, "eigenvalue asymptotics", criterion6},
    {7, "frozen-Newton residual convergence", criterion7},
    {8, "oracle equivalence", criterion8},
    {9, "constant-shift law", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  if (argc < 2 || std::strcmp(argv[1], "all") == 0) {
    for (const auto& e : kCriteria) wanted.push_back(e.id);
  } else {
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  }

  bool all_ok = true;
  for (int id : wanted) {
    const Entry* entry = nullptr;
    for (const auto& e : kCriteria)
      if (e.id == id) entry = &e;
    if (!entry) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    std::printf("criterion-%d: %s\n", entry->id, entry->title);
    bool ok = false;
    try {
      ok = entry->fn();
    } catch (const std::exception& e) {
      std::printf("  [FAIL] exception: %s\n", e.what());
    }
    std::printf("%s criterion-%d: %s\n", ok ? "PASS" : "FAIL", entry->id, entry->title);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
