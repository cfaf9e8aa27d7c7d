#ifndef FSLP_POTENTIAL_HPP
#define FSLP_POTENTIAL_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace fslp {

// One polynomial piece on [lo, hi); coefficients in ascending powers of x.
struct PolyPiece {
  double lo;
  double hi;
  std::vector<double> coeffs;
};

// Real potential q(x) on [0,1].
//
// Kinds: zero; sine-basis expansion q = sum q_k sin(k pi x); piecewise
// polynomial (right-continuous at interior breakpoints, the last piece
// closed at x = 1); analytic closure (needed for the built-in smooth test
// potential, whose value is not polynomial or sine-representable).
// The mean over [0,1] is computed exactly for the first three kinds and by
// refined composite Simpson (tolerance 1e-10) for closures.
class Potential {
 public:
  enum class Kind { Zero, SineBasis, Piecewise, Analytic };

  static Potential zero();
  static Potential sine_basis(std::vector<double> coeffs);
  static Potential piecewise(std::vector<PolyPiece> pieces);
  static Potential analytic(std::function<double(double)> f, std::string name);
  static Potential constant(double c);

  // Built-in test potentials.
  static Potential q1();  // 20 x^3 (exp(-(x-1/2)^2) - exp(-1/4))
  static Potential q2();  // piecewise: -2x | -4/5+2x | 0 | 1 | 0 on fifths

  double operator()(double x) const;
  double mean() const { return mean_; }
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  const std::vector<PolyPiece>& pieces() const { return pieces_; }

 private:
  Potential() = default;
  Kind kind_ = Kind::Zero;
  std::vector<double> coeffs_;
  std::vector<PolyPiece> pieces_;
  std::function<double(double)> fn_;
  std::string name_ = "zero";
  double mean_ = 0.0;
};

}  // namespace fslp

#endif
