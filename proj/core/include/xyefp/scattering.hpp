#ifndef XYEFP_SCATTERING_HPP
#define XYEFP_SCATTERING_HPP

#include <functional>

#include "xyefp/common.hpp"
#include "xyefp/spectral.hpp"

namespace xyefp {

// Two-dimensional fiber of the direct-integral (energy) representation of
// the free hopping Hamiltonian over its spectrum (-1, 1).
struct FiberPair {
  Complex first{0.0, 0.0};
  Complex second{0.0, 0.0};
};

// Boundary values of the free resolvent at energy e in (-1, 1):
//   rho_{d0,dx}(e +- i0) = +-i (e -+ i sqrt(1-e^2))^{|x|} / sqrt(1-e^2).
// `side` picks the +i0 (plus) or -i0 (minus) limit. Throws for |e| >= 1.
Complex resolvent_boundary(double e, long x, Sign side);

// Momentum-space action of the wave operators w_+-(h, h_B) on a completely
// localized wave function:
//   w_+- e_x(k) = e^{ikx} -+ i kappa e^{-+ i|k||x|} / (sin|k| +- i kappa).
Complex wave_action(double k, long x, Sign branch, const BoundState& bs);

// Forward energy transform evaluated at energy e:
//   (2pi)^{-1/2} (1-e^2)^{-1/4} [phi(arccos e), phi(-arccos e)].
FiberPair energy_transform(const std::function<Complex(double)>& phi,
                           double e);

// Inverse transform at momentum k: the two fiber components cover positive
// and negative momenta (k = 0 resolves to the first component).
Complex energy_transform_inverse(const std::function<FiberPair(double)>& eta,
                                 double k);

// Energy-space action of the wave operators on delta_x, in closed form.
// Consistent with energy_transform composed with wave_action.
FiberPair wave_action_energy(double e, long x, Sign branch,
                             const BoundState& bs);

}  // namespace xyefp

#endif
