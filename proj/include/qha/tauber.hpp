#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qha/conv.hpp"
#include "qha/gabor.hpp"
#include "qha/op.hpp"
#include "qha/phase_fn.hpp"

namespace qha {

// Raised when a deconvolution window has (effective) zeros in its
// Fourier-Wigner transform, or when the target is incompatible with the
// window's structural zero set.
class WindowHasZeros : public std::runtime_error {
  public:
    explicit WindowHasZeros(const std::string& what) : std::runtime_error(what) {}
};

struct WienerResult {
    bool in_class = false;
    double min_modulus = 0.0;  // the discriminating minimum statistic
    double max_modulus = 0.0;
};

// Function Wiener class: min |F_sigma a| over the full lattice, compared
// against the absolute threshold delta.
WienerResult wiener_class_fun(const PhaseFn& a, double delta);

// Operator Wiener class via F_W.  The full-lattice minimum of |F_W S| is
// structurally zero on the edge lines m = -n/2 / k = -n/2 for every real
// (resp. real even) rank-one window, so the discriminating statistic is the
// refined *bulk* minimum (see WindowZeroReport): the column-wise
// trigonometric interpolation of F_W(S), minimized over lattice radius
// <= min(1.5, rho_max/2).  in_class <=> bulk_min >= delta * max|F_W S|
// (delta is relative).
WienerResult wiener_class_op(const OperatorMatrix& S, double delta);

// Zero diagnostics of |F_W S| with the same fields and region conventions
// as window_zero_report; for S = phi (x) phi the two reports agree.
WindowZeroReport operator_zero_report(const OperatorMatrix& S);

// Deconvolution r := F_sigma^{-1}(F_W T / F_W S), so that r * S = T up to
// roundoff.  Guards:
//  - throws WindowHasZeros when wiener_class_op(S, 1e-3) fails (the bulk
//    statistic replaces a raw minimum test, which no real window could
//    pass due to the structural edge zeros);
//  - ratio points with |F_W S| < 1e-12 * max are treated as structural
//    zeros: the quotient is set to 0, and the call throws WindowHasZeros
//    if |F_W T| > 1e-8 * max there (incompatible target).
struct DeconvolveStats {
    double max_ratio = 0.0;
    int zeroed_points = 0;
};
PhaseFn deconvolve(const OperatorMatrix& T, const OperatorMatrix& S,
                   DeconvolveStats* stats = nullptr);

// Zeroes F_W(T) on the structural zero set of F_W(S) (points with
// |F_W S| < 1e-12 * max), making T a compatible deconvolution target.
OperatorMatrix project_compatible(const OperatorMatrix& T, const OperatorMatrix& S);

// Transfer identity for the function-symbol theorem: with
//   K_S = f*S - A tr(S) I,   K_T = f*T - A tr(T) I,   r = deconvolve(T, S),
// K_T = r*K_S holds exactly at finite n; returns the Hilbert-Schmidt
// residual ||K_T - r*K_S|| together with K_T.
struct TransferFunResult {
    double residual = 0.0;
    OperatorMatrix K_T;
};
TransferFunResult tauberian_transfer_fun(const PhaseFn& f, const OperatorMatrix& S,
                                         cdouble A, const OperatorMatrix& T);

// Transfer identities for the operator-symbol theorem.  With
//   h_S = R*S - A tr(S),                      (phase function)
//   h_T = R*T - A tr(T),   r = deconvolve(T, S):   h_T = r * h_S,
//   K_g = g*R - A integral(g) I,  T_g = F_W^{-1}(F_sigma g / F_W S):
//   K_g = h_S * T_g.
// residual is the maximum of the two (weighted L2 / HS) residuals.
struct TransferOpResult {
    double residual = 0.0;
    double residual_op = 0.0;   // on h_T = r * h_S
    double residual_fun = 0.0;  // on K_g = h_S * T_g
    PhaseFn h_T;
    OperatorMatrix K_g;
};
TransferOpResult tauberian_transfer_op(const OperatorMatrix& R, const OperatorMatrix& S,
                                       cdouble A, const PhaseFn& g, const OperatorMatrix& T);
// Convenience overload with T = S (then h_T = h_S and r is the delta mask).
TransferOpResult tauberian_transfer_op(const OperatorMatrix& R, const OperatorMatrix& S,
                                       cdouble A, const PhaseFn& g);

// Fernandez-Galbis sup profile from the 4D phase-space STFT:
//   G(rho) = max { |V_Phi(f - A)(x, omega)| : |x| >= rho, |omega| <= R_freq }.
// Guarded to n <= 32 like stft_phase.
DecayProfile fg_sup_profile(const PhaseFn& f, cdouble A, const PhaseFn& window,
                            double R_freq, const std::vector<double>& radii);

// Oscillation modulus max { |f(z) - f(z - z')| : |z'| <= delta, |z| >= rho }.
double osc_modulus(const PhaseFn& f, double delta, double rho);

// Extreme singular values of the localization operator loc_op(f, phi, phi).
struct IsoResult {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    bool invertible = false;  // sigma_min > 1e-8
};
IsoResult iso_check(const PhaseFn& f, const Signal& phi);

// Schatten summary of K plus the fraction of singular values above eps.
struct CompactnessSummary {
    double eps = 0.0;
    double fraction_above = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double op_norm = 0.0;
};
CompactnessSummary compactness_report(const OperatorMatrix& K, double eps);

// The trace-class/Hilbert-Schmidt divergence experiment: for f_w the
// indicator of a disk of radius w*h normalized to unit weighted L1 mass,
// tabulates Schatten data of f_w * S_{1/2}.  By Weyl unitarity
// s2 / ||f_w||_2 == 1 exactly, so s2 falls with the spread like ||f_w||_2,
// while s1 stays bounded below by |trace| = 1: the s1/s2 ratio diverges.
struct SchattenExperimentRow {
    int w = 0;          // disk radius in lattice steps
    double radius = 0;  // w * h
    double l1 = 0.0;    // weighted L1 norm of f_w (== 1 by construction)
    double l2 = 0.0;    // weighted L2 norm of f_w
    double s1 = 0.0;
    double s2 = 0.0;
    double op_norm = 0.0;
    double s2_over_l2 = 0.0;
};
std::vector<SchattenExperimentRow> schatten_counterexample_experiment(
    const GridSpec& grid, const std::vector<int>& spreads);

// Aggregated Tauberian diagnostics for one (mask, window) pair across a
// list of grid sizes; see run_tauber_report in report.hpp.
struct TauberCell {
    int n = 0;
    CompactnessSummary compact;
    DecayProfile decay;  // of the correction function (f - A) * (S * S)
};
struct TauberReport {
    std::string mask_id;
    std::string window_id;
    cdouble A = 0.0;
    bool wiener_ok = false;
    double wiener_min = 0.0;
    double residual = -1.0;  // normalized transfer residual; -1 if skipped
    std::vector<TauberCell> cells;
    bool verdict_i = false;
    bool verdict_ii = false;
    bool verdict_iii = false;
};

}  // namespace qha
