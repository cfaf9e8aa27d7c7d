#ifndef FSLP_INVERSE_HPP
#define FSLP_INVERSE_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fslp/errors.hpp"
#include "fslp/mesh.hpp"
#include "fslp/potential.hpp"

namespace fslp {

// Shooting residuals F_n = u(q^M, lambda_n)(1) for the data eigenvalues.
struct ForwardResidual {
  std::vector<Complex> values;
  double norm() const;
};

// Frozen q=0 Jacobian: complex N x M entries v(lambda_{n,0}, 0, w_k)(1) and
// the stacked real 2N x M matrix [Re; Im].
struct FrozenJacobian {
  std::vector<Complex> lambda0;       // q=0 eigenvalues, rank order
  Eigen::MatrixXcd entries;           // N x M
  Eigen::MatrixXd stacked;            // 2N x M
  double condition_number() const;    // 2-norm cond of the stacked matrix
  std::size_t numerical_rank() const;
};

// Iterate history of the frozen Newton reconstruction.
struct NewtonReport {
  std::vector<std::vector<double>> iterates;  // coefficient vector per iteration
  std::vector<double> residual_norms;         // ||F|| per iteration (unmodified)
  std::vector<double> errors;                 // e per iteration when truth known
  bool converged = false;
  std::size_t iterations = 0;
};

class JacobianRankDeficient : public Error {
 public:
  JacobianRankDeficient(std::size_t rank, std::size_t M)
      : Error("jacobian-rank-deficient: rank " + std::to_string(rank) + " < M " +
              std::to_string(M)) {}
};

// Residual norm grew over three consecutive iterations; carries the report.
class NewtonDiverged : public Error {
 public:
  NewtonDiverged(NewtonReport report, std::vector<double> last)
      : Error("diverged"), report(std::move(report)), last_iterate(std::move(last)) {}
  NewtonReport report;
  std::vector<double> last_iterate;
};

namespace inverse {

// F_n = slp_shoot(q^M, lambda_n)(1) with q^M = sum q_k sin(k pi x).
ForwardResidual forward_residual(const std::vector<Complex>& spectrum_data,
                                 const std::vector<double>& q_coeffs, double alpha, Mesh mesh);

// Green's-function form of one q=0 Jacobian entry at x = 1:
//   v(1) = int_0^1 (1-t)^{alpha-1} E_{a,a}(-l (1-t)^a) t E_{a,2}(-l t^a) w(t) dt
// by composite Simpson on quad_points subintervals (the integrand vanishes
// at t = 1 because w does).
Complex jacobian_entry_green(Complex lambda0, const std::function<double(double)>& w,
                             double alpha, std::size_t quad_points);
Complex jacobian_entry_green(Complex lambda0, std::size_t basis_index, double alpha,
                             std::size_t quad_points = 512);

struct FrozenJacobianOptions {
  std::size_t quad_points = 512;
};

// Enumerates the q=0 spectrum on `mesh` and fills the N x M Green-entry
// matrix for the sine basis, plus its real stacking.
FrozenJacobian build_frozen_jacobian(double alpha, std::size_t N, std::size_t M, Mesh mesh,
                                     const FrozenJacobianOptions& opts = {});

struct NewtonOptions {
  int maxiter = 25;
  double rtol = 1e-8;  // stop when ||update|| <= rtol*(1 + ||q||)
};

struct NewtonResult {
  std::vector<double> coeffs;
  NewtonReport report;
};

// Frozen Newton iteration q <- q - lsq(stacked J, stacked F(q)). The
// stacked real least-squares solve keeps every update real. If q_true is
// supplied, the per-iteration L2 error is recorded in the report.
// Throws NewtonDiverged after three consecutive residual increases and
// JacobianRankDeficient when the stacked matrix loses column rank.
NewtonResult frozen_newton(const std::vector<Complex>& spectrum_data, double alpha,
                           std::size_t M, const std::vector<double>& q0, Mesh mesh,
                           const FrozenJacobian& jacobian, const NewtonOptions& opts = {},
                           const Potential* q_true = nullptr);

// Convenience overload that builds the frozen Jacobian on the same mesh.
NewtonResult frozen_newton(const std::vector<Complex>& spectrum_data, double alpha,
                           std::size_t M, const std::vector<double>& q0, Mesh mesh,
                           const NewtonOptions& opts = {}, const Potential* q_true = nullptr);

// ||q_true - sum q_k sin(k pi x)||_{L2(0,1)} by composite Simpson split at
// the breakpoints of piecewise potentials; at least 1000 sample points.
double reconstruction_error(const Potential& q_true, const std::vector<double>& q_coeffs,
                            std::size_t min_points = 2000);

}  // namespace inverse
}  // namespace fslp

#endif
