#include "fslp/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace fslp {
namespace {

constexpr double kPi = 3.14159265358979323846;

double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

double poly_integral(const std::vector<double>& c, double lo, double hi) {
  double v = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double p = static_cast<double>(i + 1);
    v += c[i] * (std::pow(hi, p) - std::pow(lo, p)) / p;
  }
  return v;
}

double simpson(const std::function<double(double)>& f, double lo, double hi, std::size_t n) {
  if (n % 2) ++n;
  const double h = (hi - lo) / static_cast<double>(n);
  double s = f(lo) + f(hi);
  for (std::size_t i = 1; i < n; ++i) s += f(lo + h * i) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double mean_adaptive(const std::function<double(double)>& f) {
  double prev = simpson(f, 0.0, 1.0, 64);
  for (std::size_t n = 128; n <= (1u << 20); n *= 2) {
    const double cur = simpson(f, 0.0, 1.0, n);
    if (std::abs(cur - prev) < 1e-10 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

Potential Potential::zero() { return Potential(); }

Potential Potential::sine_basis(std::vector<double> coeffs) {
  Potential p;
  p.kind_ = Kind::SineBasis;
  p.coeffs_ = std::move(coeffs);
  p.name_ = "sine-basis";
  // int_0^1 sin(k pi x) dx = (1 - (-1)^k)/(k pi)
  double m = 0.0;
  for (std::size_t k = 1; k <= p.coeffs_.size(); ++k)
    m += p.coeffs_[k - 1] * (1.0 - (k % 2 == 0 ? 1.0 : -1.0)) / (static_cast<double>(k) * kPi);
  p.mean_ = m;
  return p;
}

Potential Potential::piecewise(std::vector<PolyPiece> pieces) {
  Potential p;
  p.kind_ = Kind::Piecewise;
  p.pieces_ = std::move(pieces);
  p.name_ = "piecewise";
  for (std::size_t i = 1; i < p.pieces_.size(); ++i)
    if (!(p.pieces_[i].lo >= p.pieces_[i - 1].hi - 1e-15))
      throw std::invalid_argument("Potential: piecewise breakpoints must be increasing");
  double m = 0.0;
  for (const auto& pc : p.pieces_) m += poly_integral(pc.coeffs, pc.lo, pc.hi);
  p.mean_ = m;
  return p;
}

Potential Potential::analytic(std::function<double(double)> f, std::string name) {
  Potential p;
  p.kind_ = Kind::Analytic;
  p.fn_ = std::move(f);
  p.name_ = std::move(name);
  p.mean_ = mean_adaptive(p.fn_);
  return p;
}

Potential Potential::constant(double c) { return piecewise({PolyPiece{0.0, 1.0, {c}}}); }

Potential Potential::q1() {
  auto f = [](double x) {
    return 20.0 * x * x * x * (std::exp(-(x - 0.5) * (x - 0.5)) - std::exp(-0.25));
  };
  return analytic(f, "q1");
}

Potential Potential::q2() {
  return piecewise({PolyPiece{0.0, 0.2, {0.0, -2.0}},
                    PolyPiece{0.2, 0.4, {-0.8, 2.0}},
                    PolyPiece{0.4, 0.6, {0.0}},
                    PolyPiece{0.6, 0.8, {1.0}},
                    PolyPiece{0.8, 1.0, {0.0}}});
}

double Potential::operator()(double x) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::SineBasis: {
      double v = 0.0;
      for (std::size_t k = 1; k <= coeffs_.size(); ++k)
        v += coeffs_[k - 1] * std::sin(static_cast<double>(k) * kPi * x);
      return v;
    }
    case Kind::Piecewise: {
      // right-continuous at interior breakpoints; last piece closed at hi.
      for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& pc = pieces_[i];
        const bool last = (i + 1 == pieces_.size());
        if (x >= pc.lo && (x < pc.hi || (last && x <= pc.hi))) return poly_eval(pc.coeffs, x);
      }
      return 0.0;
    }
    case Kind::Analytic:
      return fn_(x);
  }
  return 0.0;
}

}  // namespace fslp
