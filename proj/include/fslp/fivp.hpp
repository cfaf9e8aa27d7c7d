#ifndef FSLP_FIVP_HPP
#define FSLP_FIVP_HPP

#include <functional>
#include <vector>

#include "fslp/mesh.hpp"
#include "fslp/potential.hpp"

namespace fslp {

// Fractional initial value problem D_0^alpha u = f(x, u) on [0,1],
// u(0) = u0, u'(0) = u0_prime, with alpha in (1,2).
//
// The right-hand side receives the node coordinate x rather than a node
// index so that the same spec drives both the base mesh and the refined
// mesh of the extrapolated solve.
struct IVPSpec {
  double alpha;
  Complex u0;
  Complex u0_prime;
  std::function<Complex(double, Complex)> rhs;
};

namespace fivp {

// Predictor weights b_{j,k+1} = (k+1-j)^alpha - (k-j)^alpha, j = 0..k.
std::vector<double> weights_b(double alpha, std::size_t k);

// Corrector weights a_{j,k+1}, j = 0..k+1 (last entry 1).
std::vector<double> weights_a(double alpha, std::size_t k);

// Predictor-corrector march (rectangle predictor, product-trapezoid
// corrector, one corrector re-evaluation per node). History sums are
// plain O(K^2) accumulation. Throws DivergenceError on a non-finite node.
GridFunction solve(const IVPSpec& spec, Mesh mesh);

// (4 u_{h/2} - u_h)/3 restricted to the coarse nodes.
GridFunction solve_richardson(const IVPSpec& spec, Mesh mesh);

// Shooting solution of -D^alpha u + q u = lambda u, u(0)=0, u'(0)=1.
// The endpoint value is the shooting residual. Extrapolation is on by
// default (the eigenvalue and inversion drivers rely on it).
GridFunction slp_shoot(const Potential& q, Complex lambda, double alpha, Mesh mesh,
                       bool extrapolate = true);

// Sensitivity solution of -D^alpha v + q v = lambda v - w u, v(0)=v'(0)=0.
// The plain solve forces with the supplied u samples; the extrapolated
// solve re-marches u alongside v on both meshes so that coarse and fine
// passes stay scheme-consistent.
GridFunction sensitivity_shoot(const Potential& q, Complex lambda,
                               const std::function<double(double)>& w,
                               const GridFunction& u, double alpha, Mesh mesh,
                               bool extrapolate = true);

}  // namespace fivp
}  // namespace fslp

#endif
