#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace cohana::grids {

using cplx = std::complex<double>;

enum class Domain { circle, disk, plane, line };

// Weight law of the measure the grid quadrature realizes:
//   circle_uniform : normalized Lebesgue d(phi)/(2 pi), total mass 1
//   disk_invariant : da / (1-|a|^2)^2 on |a| <= r_max
//   disk_weighted  : 4^{1-m} (1-|w|^2)^{m-2} dw on |w| <= r_max
//   plane_gaussian : e^{-|z|^2} dz on C (weights are the plain tensor rule)
//   line_absorbed  : Lebesgue dx with the Gauss-Hermite factor absorbed into
//                    the weights, so sums are exact for polynomial * e^{-x^2}
enum class Law { circle_uniform, disk_invariant, disk_weighted, plane_gaussian, line_absorbed };

struct Grid {
  Domain domain;
  Law law;
  int m = 0;          // disk_weighted parameter
  double r_max = 0.0; // disk truncation radius
  int n1 = 0, n2 = 0; // circle: N; disk: Nr x Ntheta; plane: N x N; line: N

  std::vector<cplx> nodes;
  std::vector<double> weights;
  std::vector<double> radial_nodes; // disk grids, size n1; node index = j*n2 + l

  bool boundary_warning = false; // invariant law truncated very close to 1
  double stated_mass = 0.0;      // analytic mass of the (truncated) measure

  std::size_t size() const { return nodes.size(); }
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr circle_grid(int n);

enum class DiskLaw { invariant, weighted };
GridPtr disk_grid(int nr, int ntheta, DiskLaw law, double r_max, int m = 2);

GridPtr plane_grid(int n);
GridPtr line_grid(int n);

// sum_k w_k v_k
cplx integrate(const Grid& grid, const std::vector<cplx>& values);

} // namespace cohana::grids
