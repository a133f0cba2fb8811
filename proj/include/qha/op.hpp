#pragma once

#include <Eigen/Dense>

#include "qha/phase_fn.hpp"
#include "qha/signal.hpp"

namespace qha {

// A linear operator on the n-point signal space, as a dense matrix in
// storage (DC-first) index order: (S psi)[a] = sum_b entries(a,b) psi[b].
struct OperatorMatrix {
    GridSpec grid;
    Eigen::MatrixXcd entries;
};

cdouble trace(const OperatorMatrix& S);
double hs_norm(const OperatorMatrix& S);
OperatorMatrix identity_op(const GridSpec& grid);

// Time-frequency shift pi(m, k): (pi psi)[j] = e^{2 pi i k j / n} psi[j - m].
OperatorMatrix tf_shift(const GridSpec& grid, PhasePoint z);
Signal apply_tf_shift(PhasePoint z, const Signal& psi);

// Conjugation by a shift: alpha_z(S) = pi(z) S pi(z)^*.
OperatorMatrix translate_op(const OperatorMatrix& S, PhasePoint z);

// Parity operator (P psi)[j] = psi[-j].
OperatorMatrix parity(const GridSpec& grid);

// Conjugation by parity S -> P S P ("check"), the operator analogue of the
// reflection f(z) -> f(-z).
OperatorMatrix check_op(const OperatorMatrix& S);

// Rank-one operator psi (x) phi: (psi (x) phi) f = <f, phi> psi.
OperatorMatrix rank_one(const Signal& psi, const Signal& phi);

// Random operator with i.i.d. complex Gaussian entries (storage column-major
// draw order), normalized to unit Hilbert-Schmidt norm.
OperatorMatrix random_operator(const GridSpec& grid, uint64_t seed);

// Fourier-Wigner transform F_W(S)(m,k) = c(m,k) sum_j e^{-2 pi i k j/n} S[j+m, j],
// where c(m,k) = e^{-i pi (m k + n eps(m,k))/n} and eps flips the branch on
// the odd half of the two edge lines m = -n/2 / k = -n/2 so that the
// adjoint and parity covariances hold exactly on the whole lattice:
//   F_W(S^*)(z) = conj(F_W(S)(-z)),   F_W(check S)(z) = F_W(S)(-z).
// Weighted-L2 isometry onto phase functions: wnorm(F_W S) = hs_norm(S).
PhaseFn fourier_wigner(const OperatorMatrix& S);
OperatorMatrix inverse_fourier_wigner(const PhaseFn& F);

// The phase factor c(m,k) itself (unimodular), for diagnostics and tests.
PhaseFn fourier_wigner_phase(const GridSpec& grid);

// Weyl calculus: quantize = F_W^{-1} o F_sigma, symbol = F_sigma o F_W.
OperatorMatrix weyl_quantize(const PhaseFn& f);
PhaseFn weyl_symbol(const OperatorMatrix& S);

// Cross-Wigner distribution W(psi, phi) = weyl_symbol(psi (x) phi).
PhaseFn wigner(const Signal& psi, const Signal& phi);

// Singular value summary.  Values below 1e-12 * sigma_max are reported as 0.
struct SchattenSpectrum {
    Eigen::VectorXd sigma;  // descending
    double s1 = 0.0;        // trace norm
    double s2 = 0.0;        // Hilbert-Schmidt norm
    double op = 0.0;        // operator norm
    double fraction_above(double eps) const;
};
SchattenSpectrum schatten(const OperatorMatrix& S);

}  // namespace qha
