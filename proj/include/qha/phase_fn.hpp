#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qha/grid.hpp"
#include "qha/signal.hpp"

namespace qha {

// A function on the n x n phase-space lattice.  values(sm, sk) holds the
// sample at the centered point (m, k) = (centered_index(sm), centered_index(sk)),
// stored DC-first in both axes.  The lattice carries the normalized counting
// measure with weight 1/n per point.
struct PhaseFn {
    GridSpec grid;
    Eigen::MatrixXcd values;
};

// Weighted integral: (1/n) * sum of values.
cdouble integral(const PhaseFn& f);

// Weighted L2 norm: sqrt((1/n) * sum |f|^2).
double wnorm(const PhaseFn& f);

// Weighted Lp norm; p = infinity (pass p <= 0) gives the sup norm.
double lp_norm(const PhaseFn& f, double p);
double sup_norm(const PhaseFn& f);

// Symplectic Fourier transform
//   F_sigma(f)(m, k) = (1/n) sum_{m',k'} f(m',k') e^{-2 pi i (k m' - k' m)/n}.
// Self-inverse and a weighted-L2 isometry.
PhaseFn symplectic_fourier(const PhaseFn& f);

// Named test masks (symbols), parsed from strings:
//   "constant(re[,im])"                  constant value
//   "chirp"                              exp(i pi (m^2 + k^2)/n)
//   "plane_wave(m0,k0)"                  exp(2 pi i (k0 m - m0 k)/n)
//   "a_tau(tau)"                         (2/|2 tau - 1|) exp(2 pi i (2/(2 tau - 1)) m k / n),
//                                        tau in (0,1) \ {1/2}
//   "indicator_disk(r)"                  1 on |z| <= r            (r <= rho_max)
//   "indicator_disk_complement(r)"       1 on |z| > r             (r <= rho_max)
//   "gaussian_env"                       exp(-pi (m^2+k^2)/n)
//   "delta"                              n at the origin, 0 elsewhere
PhaseFn mask(const GridSpec& grid, const std::string& kind);

// Deterministic random mask: complex standard Gaussian entries drawn in
// storage column-major order from SplitMix64(seed), normalized to wnorm 1.
PhaseFn random_phase_fn(const GridSpec& grid, uint64_t seed);

// Radial sup profile D(rho) = max { |f(z)| : |z| >= rho } over lattice points.
struct DecayProfile {
    std::vector<double> radii;
    std::vector<double> values;
};
DecayProfile decay_profile(const PhaseFn& f, const std::vector<double>& radii);

}  // namespace qha
