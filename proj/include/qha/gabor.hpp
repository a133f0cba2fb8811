#pragma once

#include <vector>

#include "qha/op.hpp"
#include "qha/phase_fn.hpp"
#include "qha/signal.hpp"

namespace qha {

// Short-time Fourier transform table V_phi(psi): values(sm, sk) is
//   <psi, pi(m, k) phi> = sum_j psi[j] conj(phi[j - m]) e^{-2 pi i k j / n},
// stored DC-first along both axes (same layout as PhaseFn).
struct StftTable {
    GridSpec grid;
    Eigen::MatrixXcd values;
};

// Analysis; throws std::invalid_argument for a zero window.
StftTable stft(const Signal& psi, const Signal& phi);

// Synthesis adjoint with the 1/n phase-space weight:
//   psi[j] = sum_m phi[j - m] (1/n) sum_k F(m, k) e^{2 pi i k j / n},
// so that synthesis(stft(psi, phi), phi) = ||phi||^2 psi.
Signal synthesis(const StftTable& F, const Signal& phi);

// Interprets the table as a phase function (shared layout).
PhaseFn to_phase_fn(const StftTable& V);

// Berezin transform B(z) = <T pi(z) phi, pi(z) phi>, computed directly.
// Requires a unit-norm window (throws otherwise).
PhaseFn berezin(const OperatorMatrix& T, const Signal& phi);

// Zero diagnostics for the spectrogram multiplier |V_phi phi|.
//
// The lattice values of V_phi phi vanish *structurally* on parts of the
// edge lines m = -n/2, k = -n/2 for broad window classes (e.g. every real
// window kills the odd-k half of the m = -n/2 row), so a plain lattice
// minimum cannot separate well-behaved windows from genuinely vanishing
// ones.  The discriminating statistic is the minimum of the column-wise
// discrete-time Fourier transform
//     V(m, kappa) = sum_j phi[j] conj(phi[j - m]) e^{-2 pi i kappa j / n}
// over a *bulk* region: integer m != -n/2, real kappa with |kappa| <=
// n/2 - 1 sampled on a 16x refined grid, restricted to lattice radius
// |z| <= bulk_radius = min(1.5, rho_max / 2).
struct WindowZeroReport {
    double lattice_min = 0.0;   // min |V| over the full lattice
    double lattice_max = 0.0;   // max |V| (attained at z = 0 for unit phi)
    double interior_min = 0.0;  // min over lattice points off the edge lines
    double bulk_min = 0.0;      // refined minimum over the bulk region
    double bulk_radius = 0.0;
};
WindowZeroReport window_zero_report(const Signal& phi);

// Shorthand: the refined bulk minimum of |V_phi phi|.
double min_abs_stft(const Signal& phi);

// Smallest principal angle (radians) between the ranges of the two Gabor
// analysis maps psi -> V_phi(psi), as subspaces of the n^2-dimensional
// table space.  0 for windows equal up to a scalar.
double gabor_intersection_angle(const Signal& phi1, const Signal& phi2);

// Short-time transform of a *phase function* against a phase-function
// window, a 4-dimensional table indexed by translation (u1, u2) and
// modulation (w1, w2), all DC-first:
//   V(u, w) = (1/n) sum_z f(z) conj(Phi(z - u)) e^{-2 pi i (w1 m + w2 k)/n}.
// Satisfies V(0, 0) = <f, Phi> (weighted) and the Moyal identity
//   (1/n^2) sum_{u,w} |V|^2 = wnorm(f)^2 wnorm(Phi)^2.
// Guarded to n <= 32 (the table has n^4 entries).
struct Stft4Table {
    GridSpec grid;
    std::vector<cdouble> values;  // index ((u1 n + u2) n + w1) n + w2

    cdouble at(int su1, int su2, int sw1, int sw2) const {
        const int n = grid.n;
        return values[static_cast<size_t>(((su1 * n + su2) * n + sw1)) * n + sw2];
    }
};
Stft4Table stft_phase(const PhaseFn& f, const PhaseFn& window);

}  // namespace qha
