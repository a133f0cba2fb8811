#pragma once

// Shared helpers for the module test suites: entrywise and norm-level
// distances between the library's value types, plus a few oracle builders
// used by more than one suite.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qha/conv.hpp"
#include "qha/gabor.hpp"
#include "qha/op.hpp"
#include "qha/phase_fn.hpp"
#include "qha/signal.hpp"

namespace qha::test {

inline double max_abs(const Eigen::MatrixXcd& a) { return a.cwiseAbs().maxCoeff(); }

inline double fn_dist(const PhaseFn& a, const PhaseFn& b) { return max_abs(a.values - b.values); }

inline double op_dist(const OperatorMatrix& a, const OperatorMatrix& b) {
    return (a.entries - b.entries).norm();  // Frobenius == Hilbert-Schmidt
}

inline double sig_dist(const Signal& a, const Signal& b) { return (a.values - b.values).norm(); }

// PhaseFn sampled from a centered-lattice formula f(m, k).
template <typename F>
PhaseFn sample_fn(const GridSpec& grid, F&& f) {
    PhaseFn out{grid, Eigen::MatrixXcd(grid.n, grid.n)};
    for (int sk = 0; sk < grid.n; ++sk)
        for (int sm = 0; sm < grid.n; ++sm)
            out.values(sm, sk) = f(centered_index(sm, grid.n), centered_index(sk, grid.n));
    return out;
}

// Cyclic translate of a phase function by the lattice vector (m0, k0):
// out(z) = f(z - z0).
inline PhaseFn translate_fn(const PhaseFn& f, int m0, int k0) {
    const int n = f.grid.n;
    PhaseFn out{f.grid, Eigen::MatrixXcd(n, n)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            int m = centered_index(sm, n), k = centered_index(sk, n);
            out.values(sm, sk) =
                f.values(storage_index(m - m0, n), storage_index(k - k0, n));
        }
    return out;
}

// Weighted L2 inner product on phase space: (1/n) sum f conj(g).
inline cdouble fn_inner(const PhaseFn& f, const PhaseFn& g) {
    return (f.values.array() * g.values.array().conjugate()).sum() / double(f.grid.n);
}

// Smallest eigenvalue of the Hermitian part of A (PSD checks).
inline double min_eig_herm(const OperatorMatrix& A) {
    Eigen::MatrixXcd H = 0.5 * (A.entries + A.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    return es.eigenvalues().minCoeff();
}

inline constexpr double kPi = std::numbers::pi;

}  // namespace qha::test
