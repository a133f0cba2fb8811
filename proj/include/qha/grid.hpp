#pragma once

#include <stdexcept>

namespace qha {

// Discretization of the phase-space model: n points per axis, lattice step
// h = 1/sqrt(n).  Centered indices run over -n/2 .. n/2-1; storage order is
// DC-first (index s = j mod n), matching the FFT bin layout.
struct GridSpec {
    int n = 0;
    double h = 0.0;
};

// Validates and constructs a grid.  n must be even and >= 8.
GridSpec make_grid(int n);

// Storage index (0 .. n-1) for a centered index j (any integer).
inline int storage_index(int j, int n) {
    int s = j % n;
    return s < 0 ? s + n : s;
}

// Centered index (-n/2 .. n/2-1) for a storage index s (0 .. n-1).
inline int centered_index(int s, int n) {
    return s >= n / 2 ? s - n : s;
}

// A lattice point of the phase-space torus, in centered coordinates.
struct PhasePoint {
    int m = 0;  // translation component
    int k = 0;  // modulation component
};

// Euclidean distance from the origin of the centered lattice point (m, k),
// in continuum units (lattice step h per axis).
double lattice_radius(const GridSpec& grid, int m, int k);

// Largest lattice radius in the fundamental domain (attained at the corner
// m = k = -n/2): sqrt(n/2).
double rho_max(const GridSpec& grid);

}  // namespace qha
