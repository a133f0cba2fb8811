#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "qha/grid.hpp"

namespace qha {

using cdouble = std::complex<double>;

// A signal on the n-point cyclic group, stored DC-first: values[s] holds the
// sample at centered index j = centered_index(s, n) and models psi(j h) *
// sqrt(h), so the plain Euclidean norm of `values` models the continuum L2
// norm.
struct Signal {
    GridSpec grid;
    Eigen::VectorXcd values;
};

double norm(const Signal& psi);
cdouble inner(const Signal& a, const Signal& b);  // sum a[j] * conj(b[j])

// Named test atoms, all normalized to unit norm:
//   "gaussian"          exp(-pi x^2),               x = j h
//   "hermite(r)"        H_r(sqrt(2 pi) x) exp(-pi x^2), physicists' H_r
//   "onesided_exp"      exp(-x) for x >= 0, else 0
//   "box(w)"            indicator of w consecutive centered samples
//   "random(seed)"      i.i.d. complex standard Gaussian entries
Signal atom(const GridSpec& grid, const std::string& kind);

// Deterministic random signal: entries re + i*im drawn pairwise from
// SplitMix64(seed) in storage order, then normalized.
Signal random_signal(const GridSpec& grid, uint64_t seed);

}  // namespace qha
