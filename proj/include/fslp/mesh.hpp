#ifndef FSLP_MESH_HPP
#define FSLP_MESH_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fslp {

using Complex = std::complex<double>;

// Uniform mesh of [0,1] with K subintervals.
struct Mesh {
  std::size_t K;

  explicit Mesh(std::size_t subintervals) : K(subintervals) {
    if (K < 2) throw std::invalid_argument("Mesh: K must be >= 2");
  }
  double h() const { return 1.0 / static_cast<double>(K); }
  double node(std::size_t k) const { return static_cast<double>(k) / static_cast<double>(K); }
  std::size_t size() const { return K + 1; }
  Mesh refined() const { return Mesh(2 * K); }
};

// Complex samples of a function on the nodes of a Mesh.
struct GridFunction {
  Mesh mesh;
  std::vector<Complex> values;

  GridFunction(Mesh m, std::vector<Complex> v) : mesh(m), values(std::move(v)) {
    if (values.size() != mesh.size())
      throw std::invalid_argument("GridFunction: length must be K+1");
  }
  static GridFunction zeros(Mesh m) { return GridFunction(m, std::vector<Complex>(m.size())); }

  Complex endpoint() const { return values.back(); }
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

}  // namespace fslp

#endif
