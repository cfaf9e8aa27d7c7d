// Command-line driver: eigenvalue, decay, reconstruction and conditioning
// experiments for the fractional Sturm-Liouville solver, emitted as CSV or
// JSON tables.
//
// Exit codes: 0 success, 2 usage/config error, 3 incomplete spectrum,
// 4 inverse divergence.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <fstream>
#include <json.hpp>

#include "fslp/errors.hpp"
#include "fslp/fivp.hpp"
#include "fslp/inverse.hpp"
#include "fslp/mlf.hpp"
#include "fslp/spectrum.hpp"
#include "fslp/table.hpp"

namespace {

constexpr const char* kVersion = "fslp 0.1.0";
constexpr double kPi = 3.14159265358979323846;

using fslp::Complex;

// Parse "a", "bi", "a+bi", "a-bi" (also accepts trailing 'j').
std::optional<Complex> parse_complex(std::string s) {
  if (s.empty()) return std::nullopt;
  for (auto& c : s)
    if (c == 'j' || c == 'J' || c == 'I') c = 'i';
  bool has_i = s.find('i') != std::string::npos;
  try {
    std::size_t pos = 0;
    if (!has_i) {
      double re = std::stod(s, &pos);
      if (pos != s.size()) return std::nullopt;
      return Complex(re, 0.0);
    }
    if (s.back() != 'i') return std::nullopt;
    std::string body = s.substr(0, s.size() - 1);
    // find the split sign (not at position 0, not after an exponent 'e')
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E')
        split = i;  // keep the last one: handles 1e-3+2e-4i
    }
    if (split == std::string::npos) {
      // pure imaginary, e.g. "2i" or "i"
      if (body.empty() || body == "+" || body == "-") body += "1";
      double im = std::stod(body, &pos);
      if (pos != body.size()) return std::nullopt;
      return Complex(0.0, im);
    }
    double re = std::stod(body.substr(0, split), &pos);
    if (pos != split) return std::nullopt;
    std::string ims = body.substr(split);
    if (ims == "+" || ims == "-") ims += "1";
    double im = std::stod(ims, &pos);
    if (pos != ims.size()) return std::nullopt;
    return Complex(re, im);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct PotentialSpec {
  std::string selector = "zero";
  fslp::Potential make() const {
    if (selector == "zero") return fslp::Potential::zero();
    if (selector == "q1") return fslp::Potential::q1();
    if (selector == "q2") return fslp::Potential::q2();
    if (selector.rfind("sine:", 0) == 0)
      return fslp::Potential::sine_basis(parse_double_list(selector.substr(5)));
    if (selector.rfind("piecewise:", 0) == 0) {
      std::ifstream f(selector.substr(10));
      if (!f) throw fslp::Error("cannot open piecewise file: " + selector.substr(10));
      nlohmann::json j;
      f >> j;
      std::vector<fslp::PolyPiece> pieces;
      for (const auto& item : j) {
        fslp::PolyPiece pc;
        pc.lo = item.at("lo").get<double>();
        pc.hi = item.at("hi").get<double>();
        pc.coeffs = item.at("poly").get<std::vector<double>>();
        pieces.push_back(std::move(pc));
      }
      return fslp::Potential::piecewise(std::move(pieces));
    }
    throw fslp::Error("unknown potential selector: " + selector);
  }
};

std::size_t mesh_subintervals(double h) {
  if (!(h > 0.0 && h <= 0.5)) throw fslp::Error("mesh size must lie in (0, 0.5]");
  return static_cast<std::size_t>(std::lround(1.0 / h));
}

void echo_common(fslp::ResultTable& t, const std::string& cmd) {
  t.provenance.emplace_back("command", cmd);
  t.provenance.emplace_back("version", kVersion);
}

int run_ml(double alpha, double beta, const std::vector<std::string>& ztokens,
           const std::string& out, const std::string& format) {
  std::vector<Complex> zs;
  for (const auto& tok : ztokens) {
    auto z = parse_complex(tok);
    if (!z) {
      std::fprintf(stderr, "fslp ml: malformed complex value '%s'\n", tok.c_str());
      return 2;
    }
    zs.push_back(*z);
  }
  fslp::ResultTable t;
  echo_common(t, "ml");
  t.provenance.emplace_back("alpha", fslp::format_sci(alpha));
  t.provenance.emplace_back("beta", fslp::format_sci(beta));
  t.columns = {"re_z", "im_z", "re_E", "im_E", "branch"};
  for (const Complex& z : zs) {
    const char* branch = nullptr;
    Complex v = fslp::mlf::ml_eval_branch({alpha, beta}, z, &branch);
    t.add_row({z.real(), z.imag(), v.real(), v.imag(), std::string(branch)});
  }
  t.write(out, format);
  return 0;
}

int run_spectrum(double alpha, std::size_t N, double h, const PotentialSpec& psel,
                 double seed_imag, double tol, int maxiter, const std::string& out,
                 const std::string& format) {
  fslp::Potential q = psel.make();
  fslp::Mesh mesh(mesh_subintervals(h));
  fslp::spectrum::EnumerateOptions opts;
  opts.seed_imag = seed_imag;
  opts.secant.tol = tol;
  opts.secant.maxiter = maxiter;

  fslp::Spectrum sp{alpha, {}};
  int rc = 0;
  std::vector<std::size_t> missing;
  try {
    sp = fslp::spectrum::enumerate(q, alpha, N, mesh, opts);
  } catch (const fslp::IncompleteSpectrum& e) {
    sp = e.partial;
    missing = e.missing_ranks;
    rc = 3;
  }

  fslp::ResultTable t;
  echo_common(t, "spectrum");
  t.provenance.emplace_back("alpha", fslp::format_sci(alpha));
  t.provenance.emplace_back("n", std::to_string(N));
  t.provenance.emplace_back("h_forward", fslp::format_sci(h));
  t.provenance.emplace_back("potential", psel.selector);
  t.provenance.emplace_back("seed_imag", fslp::format_sci(seed_imag));
  t.provenance.emplace_back("tol", fslp::format_sci(tol));
  t.provenance.emplace_back("maxiter", std::to_string(maxiter));
  t.columns = {"n",      "re_lambda", "im_lambda", "abs_lambda", "arg_lambda",
               "pred_abs", "pred_arg",  "residual",  "iterations"};
  const double qm = q.mean();
  // count real eigenvalues: each real pair displaces one conjugate-pair
  // index of the asymptotic law
  std::size_t n_real = 0;
  for (const auto& p : sp.pairs)
    if (std::abs(p.lambda.imag()) < 1e-8 * std::max(1.0, std::abs(p.lambda))) ++n_real;
  for (const auto& p : sp.pairs) {
    const long pred_index = static_cast<long>(p.index) - static_cast<long>(n_real / 2);
    double pred_abs = std::nan("");
    double pred_arg = std::nan("");
    if (pred_index >= 1) {
      auto pr = fslp::mlf::eig_asymptotic(alpha, static_cast<int>(pred_index));
      Complex pred = std::polar(pr.magnitude, pr.phase) + qm;
      pred_abs = std::abs(pred);
      pred_arg = std::arg(pred);
    }
    t.add_row({static_cast<double>(p.index), p.lambda.real(), p.lambda.imag(),
               std::abs(p.lambda), std::arg(p.lambda), pred_abs, pred_arg, p.residual,
               static_cast<double>(p.iterations)});
  }
  t.write(out, format);
  if (rc == 3) {
    std::fprintf(stderr, "fslp spectrum: incomplete spectrum, missing ranks:");
    for (auto r : missing) std::fprintf(stderr, " %zu", r);
    std::fprintf(stderr, "\n");
  }
  return rc;
}

int run_decay(double alpha, std::size_t N, double h, const PotentialSpec& psel,
              double seed_imag, double tol, int maxiter, const std::string& out,
              const std::string& format) {
  fslp::Potential q = psel.make();
  fslp::Mesh mesh(mesh_subintervals(h));
  fslp::spectrum::EnumerateOptions opts;
  opts.seed_imag = seed_imag;
  opts.secant.tol = tol;
  opts.secant.maxiter = maxiter;

  std::vector<Complex> c;
  int rc = 0;
  try {
    c = fslp::spectrum::decay_remainders(q, alpha, N, mesh, opts);
  } catch (const fslp::IncompleteSpectrum& e) {
    std::fprintf(stderr, "fslp decay: incomplete spectrum (%zu ranks missing)\n",
                 e.missing_ranks.size());
    rc = 3;
  }
  fslp::ResultTable t;
  echo_common(t, "decay");
  t.provenance.emplace_back("alpha", fslp::format_sci(alpha));
  t.provenance.emplace_back("n", std::to_string(N));
  t.provenance.emplace_back("h_forward", fslp::format_sci(h));
  t.provenance.emplace_back("potential", psel.selector);
  t.columns = {"n", "re_c", "im_c", "abs_c"};
  for (std::size_t i = 0; i < c.size(); ++i)
    t.add_row({static_cast<double>(i + 1), c[i].real(), c[i].imag(), std::abs(c[i])});
  t.write(out, format);
  return rc;
}

int run_reconstruct(double alpha, std::size_t N, std::size_t M, double hf, double hi,
                    const PotentialSpec& psel, const std::vector<double>& q0,
                    double tol, int maxiter, const std::string& out,
                    const std::string& profile_out, const std::string& format) {
  fslp::Potential q_true = psel.make();
  fslp::Mesh mesh_fwd(mesh_subintervals(hf));
  fslp::Mesh mesh_inv(mesh_subintervals(hi));

  fslp::ResultTable t;
  echo_common(t, "reconstruct");
  t.provenance.emplace_back("alpha", fslp::format_sci(alpha));
  t.provenance.emplace_back("n", std::to_string(N));
  t.provenance.emplace_back("m", std::to_string(M));
  t.provenance.emplace_back("h_forward", fslp::format_sci(hf));
  t.provenance.emplace_back("h_inverse", fslp::format_sci(hi));
  t.provenance.emplace_back("potential", psel.selector);
  t.provenance.emplace_back("tol", fslp::format_sci(tol));
  t.provenance.emplace_back("maxiter", std::to_string(maxiter));
  t.columns = {"iteration", "residual_norm", "error"};

  int rc = 0;
  fslp::NewtonReport report;
  std::vector<double> coeffs;
  try {
    fslp::Spectrum data = fslp::spectrum::enumerate(q_true, alpha, N, mesh_fwd);
    std::vector<Complex> lams;
    for (const auto& p : data.pairs) lams.push_back(p.lambda);
    fslp::inverse::NewtonOptions nopts;
    nopts.maxiter = maxiter;
    nopts.rtol = tol;
    auto res = fslp::inverse::frozen_newton(lams, alpha, M, q0, mesh_inv, nopts, &q_true);
    report = std::move(res.report);
    coeffs = std::move(res.coeffs);
  } catch (const fslp::IncompleteSpectrum& e) {
    std::fprintf(stderr, "fslp reconstruct: incomplete spectrum (%zu ranks missing)\n",
                 e.missing_ranks.size());
    t.write(out, format);
    return 3;
  } catch (const fslp::NewtonDiverged& e) {
    report = e.report;
    coeffs = e.last_iterate;
    std::fprintf(stderr, "fslp reconstruct: diverged after %zu iterations\n",
                 report.iterations);
    rc = 4;
  } catch (const fslp::DivergenceError& e) {
    std::fprintf(stderr, "fslp reconstruct: %s\n", e.what());
    t.write(out, format);
    return 4;
  }

  for (std::size_t i = 0; i < report.residual_norms.size(); ++i) {
    double err = i < report.errors.size() ? report.errors[i] : std::nan("");
    t.add_row({static_cast<double>(i), report.residual_norms[i], err});
  }
  t.write(out, format);

  // reconstruction artifact: final coefficients and a 1001-point profile
  fslp::ResultTable prof;
  echo_common(prof, "reconstruct-profile");
  prof.provenance.emplace_back("alpha", fslp::format_sci(alpha));
  prof.provenance.emplace_back("potential", psel.selector);
  std::string cstr;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) cstr += ",";
    cstr += fslp::format_sci(coeffs[k]);
  }
  prof.provenance.emplace_back("coefficients", cstr);
  if (!report.errors.empty())
    prof.provenance.emplace_back("final_error", fslp::format_sci(report.errors.back()));
  prof.columns = {"x", "q_reconstructed", "q_true"};
  for (std::size_t i = 0; i <= 1000; ++i) {
    const double x = static_cast<double>(i) / 1000.0;
    double v = 0.0;
    for (std::size_t k = 1; k <= coeffs.size(); ++k)
      v += coeffs[k - 1] * std::sin(static_cast<double>(k) * kPi * x);
    prof.add_row({x, v, q_true(x)});
  }
  prof.write(profile_out, format);
  return rc;
}

int run_cond(const std::vector<double>& alphas, const std::vector<std::size_t>& nms, double h,
             const std::string& out, const std::string& format) {
  fslp::Mesh mesh(mesh_subintervals(h));
  fslp::ResultTable t;
  echo_common(t, "cond");
  t.provenance.emplace_back("h_inverse", fslp::format_sci(h));
  t.columns = {"alpha", "nm", "cond"};
  for (double a : alphas) {
    const std::size_t maxnm = *std::max_element(nms.begin(), nms.end());
    fslp::FrozenJacobian J = fslp::inverse::build_frozen_jacobian(a, maxnm, maxnm, mesh);
    for (std::size_t nm : nms) {
      // leading nm x nm block: same rank-ordered eigenvalues and basis
      Eigen::MatrixXcd sub = J.entries.topLeftCorner(static_cast<Eigen::Index>(nm),
                                                     static_cast<Eigen::Index>(nm));
      Eigen::MatrixXd stacked(2 * nm, nm);
      stacked.topRows(static_cast<Eigen::Index>(nm)) = sub.real();
      stacked.bottomRows(static_cast<Eigen::Index>(nm)) = sub.imag();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
      const auto& sv = svd.singularValues();
      t.add_row({a, static_cast<double>(nm), sv(0) / sv(sv.size() - 1)});
    }
  }
  t.write(out, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forward and inverse fractional Sturm-Liouville solver"};
  app.require_subcommand(1);

  std::string out = "out.csv";
  std::string format = "csv";
  double alpha = 1.5;
  double beta = 2.0;
  double hf = 1e-3;
  double hi = 1.25e-3;
  std::size_t N = 10;
  std::size_t M = 0;
  double tol = 1e-12;
  double seed_imag = 0.5;
  int maxiter = 60;
  PotentialSpec psel;
  std::vector<std::string> ztokens;
  std::string coeffs_str;
  std::string alphas_str;
  std::string nms_str;
  std::string profile_out;

  auto* ml = app.add_subcommand("ml", "evaluate the Mittag-Leffler function");
  ml->add_option("--alpha", alpha)->required();
  ml->add_option("--beta", beta)->required();
  ml->add_option("z", ztokens, "complex points, e.g. 1.5 -2+0.5i 3i")->required();
  ml->add_option("--out", out);
  ml->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* sp = app.add_subcommand("spectrum", "enumerate Dirichlet eigenvalues");
  sp->add_option("--alpha", alpha)->required();
  sp->add_option("--n", N);
  sp->add_option("--h-forward", hf);
  sp->add_option("--potential", psel.selector);
  sp->add_option("--seed-imag", seed_imag);
  sp->add_option("--tol", tol);
  sp->add_option("--maxiter", maxiter);
  sp->add_option("--out", out);
  sp->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* dc = app.add_subcommand("decay", "shift-law remainders c_n");
  dc->add_option("--alpha", alpha)->required();
  dc->add_option("--n", N);
  dc->add_option("--h-forward", hf);
  dc->add_option("--potential", psel.selector);
  dc->add_option("--seed-imag", seed_imag);
  dc->add_option("--tol", tol);
  dc->add_option("--maxiter", maxiter);
  dc->add_option("--out", out);
  dc->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* rc = app.add_subcommand("reconstruct", "frozen-Newton potential reconstruction");
  rc->add_option("--alpha", alpha)->required();
  rc->add_option("--n", N);
  rc->add_option("--m", M, "basis size (default: n)");
  rc->add_option("--h-forward", hf);
  rc->add_option("--h-inverse", hi);
  rc->add_option("--potential", psel.selector);
  rc->add_option("--coeffs", coeffs_str, "initial-guess sine coefficients");
  rc->add_option("--tol", tol);
  rc->add_option("--maxiter", maxiter);
  rc->add_option("--out", out);
  rc->add_option("--profile-out", profile_out);
  rc->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* cd = app.add_subcommand("cond", "stacked-Jacobian condition numbers");
  cd->add_option("--alpha", alphas_str, "comma-separated alpha list")->required();
  cd->add_option("--nm", nms_str, "comma-separated N=M list")->required();
  cd->add_option("--h-inverse", hi);
  cd->add_option("--out", out);
  cd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ml->parsed()) return run_ml(alpha, beta, ztokens, out, format);
    if (sp->parsed()) {
      if (!(alpha > 1.0 && alpha < 2.0)) throw fslp::Error("alpha must lie in (1,2)");
      return run_spectrum(alpha, N, hf, psel, seed_imag, tol, maxiter, out, format);
    }
    if (dc->parsed()) {
      if (!(alpha > 1.0 && alpha < 2.0)) throw fslp::Error("alpha must lie in (1,2)");
      return run_decay(alpha, N, hf, psel, seed_imag, tol, maxiter, out, format);
    }
    if (rc->parsed()) {
      if (!(alpha > 1.0 && alpha < 2.0)) throw fslp::Error("alpha must lie in (1,2)");
      if (M == 0) M = N;
      if (M > N) throw fslp::Error("m must not exceed n");
      std::vector<double> q0 =
          coeffs_str.empty() ? std::vector<double>() : parse_double_list(coeffs_str);
      if (profile_out.empty()) profile_out = out + ".profile." + format;
      double newton_tol = tol == 1e-12 ? 1e-8 : tol;  // reconstruct default
      int newton_maxiter = maxiter == 60 ? 25 : maxiter;
      return run_reconstruct(alpha, N, M, hf, hi, psel, q0, newton_tol, newton_maxiter, out,
                             profile_out, format);
    }
    if (cd->parsed()) {
      std::vector<double> alphas = parse_double_list(alphas_str);
      std::vector<std::size_t> nms;
      for (double v : parse_double_list(nms_str)) nms.push_back(static_cast<std::size_t>(v));
      if (alphas.empty() || nms.empty()) throw fslp::Error("empty alpha/nm list");
      for (double a : alphas)
        if (!(a > 1.0 && a < 2.0)) throw fslp::Error("alpha must lie in (1,2)");
      return run_cond(alphas, nms, hi, out, format);
    }
  } catch (const fslp::IncompleteSpectrum& e) {
    std::fprintf(stderr, "fslp: %s\n", e.what());
    return 3;
  } catch (const fslp::Error& e) {
    std::fprintf(stderr, "fslp: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fslp: %s\n", e.what());
    return 2;
  }
  return 2;
}
