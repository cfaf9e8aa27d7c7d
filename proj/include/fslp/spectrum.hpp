#ifndef FSLP_SPECTRUM_HPP
#define FSLP_SPECTRUM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fslp/errors.hpp"
#include "fslp/fivp.hpp"
#include "fslp/mesh.hpp"
#include "fslp/potential.hpp"

namespace fslp {

// A converged eigenvalue with its normalized (u'(0)=1) eigenfunction.
// Eigenvalues are reported as upper-half-plane representatives; the
// conjugate is implied for real potentials.
struct Eigenpair {
  std::size_t index = 0;  // rank by |lambda| (0 = unranked)
  Complex lambda;
  GridFunction eigenfunction;
  double residual;  // |u(1)| at convergence
  int iterations;
};

struct Spectrum {
  double alpha;
  std::vector<Eigenpair> pairs;  // sorted by |lambda|, deduplicated
};

// Secant iteration failed; carries the last iterate.
class SecantFailure : public Error {
 public:
  enum class Kind { Stagnation, MaxIter };
  SecantFailure(Kind kind, Eigenpair last)
      : Error(kind == Kind::Stagnation ? "stagnation" : "maxiter"),
        kind(kind),
        last(std::move(last)) {}
  Kind kind;
  Eigenpair last;
};

// Fewer than N distinct eigenvalues were found; carries what was found.
class IncompleteSpectrum : public Error {
 public:
  IncompleteSpectrum(Spectrum partial, std::vector<std::size_t> missing_ranks);
  Spectrum partial;
  std::vector<std::size_t> missing_ranks;
};

namespace spectrum {

struct SecantOptions {
  double tol = 1e-12;
  int maxiter = 60;
};

// Quasi-Newton (secant) search for a root of lambda -> u(q,lambda)(1).
// Stops when |delta lambda| < tol * max(1, |lambda|).
Eigenpair secant_solve(const Potential& q, double alpha, Complex lambda0, Complex lambda1,
                       Mesh mesh, const SecantOptions& opts = {});

struct EnumerateOptions {
  SecantOptions secant;
  double seed_imag = 0.5;  // imaginary offset added to every seed
  std::size_t extra_seeds = 4;
  double dedup_rtol = 1e-6;
};

// Enumerate the first N eigenvalues (upper-half representatives, sorted by
// |lambda|).  Seeds combine the asymptotic zero law shifted by mean(q)
// with the real zeros of E_{alpha,2} found by scanning; the scan seeds are
// what recover the real eigenvalue pairs that appear for alpha >~ 1.6 and
// that the complex-branch asymptote cannot predict.
// Throws IncompleteSpectrum if fewer than N distinct eigenvalues converge.
Spectrum enumerate(const Potential& q, double alpha, std::size_t N, Mesh mesh,
                   const EnumerateOptions& opts = {});

// Real eigenvalues below search_radius: sign-change scan of E_{alpha,2}(-lambda)
// on a uniform grid, each bracket refined by bisection to 1e-9.
std::vector<double> real_zero_scan(double alpha, double search_radius, std::size_t grid);

// Shift-law remainders c_n = lambda_n(q) - lambda_n(0) - mean(q), ranks 1..N.
std::vector<Complex> decay_remainders(const Potential& q, double alpha, std::size_t N,
                                      Mesh mesh, const EnumerateOptions& opts = {});

}  // namespace spectrum
}  // namespace fslp

#endif
