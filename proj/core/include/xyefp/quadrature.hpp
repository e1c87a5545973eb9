#ifndef XYEFP_QUADRATURE_HPP
#define XYEFP_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "xyefp/common.hpp"

namespace xyefp {

// Panelized adaptive Gauss-Legendre quadrature.
//
// Integrands here are piecewise smooth with a small set of known breakpoints
// (momentum 0 and the +-pi identification) and may oscillate like e^{ikm}.
// Panels are laid out so that no node ever lands on a breakpoint (Gauss nodes
// are interior), each initial panel is pre-split to keep at most a few
// oscillations per panel, and a bisection pass refines until the local error
// estimate (|whole - left - right|) is below the budgeted share of `tol`.

struct QuadratureSpec {
  double tol = 1e-12;     // absolute tolerance on the whole integral
  int order = 32;         // Gauss-Legendre nodes per panel
  int max_depth = 30;     // bisection depth per initial panel
  int min_subpanels = 8;  // minimum pre-split count per smooth piece
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  bool converged = true;
};

// Nodes and weights on [-1, 1]; cached per order, thread-safe.
const std::vector<double>& gauss_nodes(int order);
const std::vector<double>& gauss_weights(int order);

// Integrate f over [a, b] adaptively.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, const QuadratureSpec& spec = {});

// Integrate over consecutive panels given by `edges` (ascending).
QuadratureResult integrate_panels(const std::function<Complex(double)>& f,
                                  const std::vector<double>& edges,
                                  const QuadratureSpec& spec = {});

// (1/2pi) Int_{-pi}^{pi} f(k) dk with interior breakpoints (strictly inside
// (-pi, pi)) and an oscillation frequency hint: each smooth piece is
// pre-split into max(min_subpanels, ceil(freq/4)) subpanels.
QuadratureResult integrate_circle(const std::function<Complex(double)>& f,
                                  const std::vector<double>& breakpoints,
                                  double frequency_hint,
                                  const QuadratureSpec& spec = {});

// Throwing wrapper: QuadratureError with the achieved estimate on failure.
Complex integrate_circle_or_throw(const std::function<Complex(double)>& f,
                                  const std::vector<double>& breakpoints,
                                  double frequency_hint,
                                  const QuadratureSpec& spec = {});

}  // namespace xyefp

#endif
