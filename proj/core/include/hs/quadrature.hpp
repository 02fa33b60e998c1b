#pragma once

#include <optional>
#include <vector>

#include "hs/domains.hpp"
#include "hs/params.hpp"

namespace hs {

// Dimension reduction used by a grid.  Every integrand here is axisymmetric:
// radial profiles are 1-D in |x - center|, half-space/ball integrands are
// 2-D meridian sections with the angular volume folded into the weights.
enum class GridReduction { radial1d, meridian2d };

inline constexpr double kAutoTruncation = -1.0;

struct GridOptions {
  // characteristic scale of the integrand (extremal parameter A, profile
  // support); grading and truncation are relative to it
  double scale = 1.0;
  // panels per panel-group grow with resolution; this is the Gauss order
  // inside each panel
  int order = 8;
  // smallest graded panel, relative to the graded interval.  Admissible
  // functions vanish linearly at the boundary, which cancels the weight
  // singularity, so a moderate grading resolves the boundary layer without
  // starving the interior of panels.  Punctured domains grade much deeper
  // on their own (parametric trials vary on scales near 1e-12).
  double floor_frac = 1e-4;
  // grade the polar angle of ball meridian grids toward the boundary point
  // that concentrating families localize at (phi = 0)
  bool polar_concentration = false;
  // override the per-domain default reduction
  std::optional<GridReduction> reduction;
};

struct QuadratureGrid {
  GridReduction reduction = GridReduction::radial1d;
  int dim = 2;
  std::vector<double> nodes;    // dim * size(), row-major
  std::vector<double> weights;  // size(), includes angular factors
  double truncation = 0.0;      // outer radius actually used (0: bounded)
  double tail_bound = 0.0;      // a-priori monomial bound on omitted mass

  // provenance, kept so self-convergence can rebuild at half resolution
  Domain domain;
  Params params;
  int resolution = 0;
  double truncation_request = kAutoTruncation;
  GridOptions options;

  size_t size() const { return weights.size(); }
  std::span<const double> node(size_t i) const {
    return {nodes.data() + i * dim, static_cast<size_t>(dim)};
  }
};

// Tensor Gauss-Legendre grid on the reduced coordinates of the domain.
// resolution steers the per-direction panel counts; truncation (for
// unbounded domains) defaults to the radius at which the built-in decaying
// family's monomial tail bound drops below 1e-10.
QuadratureGrid build_grid(const Domain& domain, const Params& params,
                          int resolution,
                          double truncation = kAutoTruncation,
                          GridOptions options = {});

// Same grid at half the resolution (for self-convergence error estimates).
QuadratureGrid coarsened(const QuadratureGrid& grid);

// --- building blocks, shared with the 1-D solvers ---

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(
    int order);

// Panel edge generators.
std::vector<double> uniform_edges(double lo, double hi, int n);
// widths shrink geometrically toward lo (toward_lo) or hi, down to
// floor_frac * (hi - lo)
std::vector<double> graded_edges(double lo, double hi, int n,
                                 double floor_frac, bool toward_lo);
// widths grow geometrically away from lo; lo > 0 not required (anchored on
// the first width)
std::vector<double> growth_edges(double lo, double hi, int n);

// Append GL nodes/weights for each panel of `edges`.
void append_panels(const std::vector<double>& edges, int order,
                   std::vector<double>& nodes, std::vector<double>& weights);

// Surface measure of the unit sphere S^{m-1} in R^m: 2 pi^{m/2}/Gamma(m/2).
double sphere_area(int m);

}  // namespace hs
