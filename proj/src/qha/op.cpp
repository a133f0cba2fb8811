#include "qha/op.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qha/fft.hpp"
#include "qha/rng.hpp"

namespace qha {
namespace {

constexpr double kPi = std::numbers::pi;

// Branch correction for the edge lines of the fundamental domain: the naive
// half-phase e^{-i pi m k / n} is not n-periodic in m or k, and on the lines
// m = -n/2, k = -n/2 the two aliased choices differ by a sign for odd
// partners.  Flipping the branch exactly on the odd negative half of each
// edge line restores the adjoint/parity covariances of F_W on the full
// lattice.
int edge_branch_flip(int m, int k, int n) {
    if (m == -n / 2 && (k & 1) && k < 0) return 1;
    if (k == -n / 2 && (m & 1) && m < 0) return 1;
    return 0;
}

cdouble branch_phase(int m, int k, int n) {
    double q = static_cast<double>(m) * k + static_cast<double>(n) * edge_branch_flip(m, k, n);
    return std::polar(1.0, -kPi * q / n);
}

}  // namespace

cdouble trace(const OperatorMatrix& S) { return S.entries.trace(); }

double hs_norm(const OperatorMatrix& S) { return S.entries.norm(); }

OperatorMatrix identity_op(const GridSpec& grid) {
    return {grid, Eigen::MatrixXcd::Identity(grid.n, grid.n)};
}

OperatorMatrix tf_shift(const GridSpec& grid, PhasePoint z) {
    const int n = grid.n;
    OperatorMatrix S{grid, Eigen::MatrixXcd::Zero(n, n)};
    for (int j = 0; j < n; ++j)
        S.entries(j, storage_index(j - z.m, n)) = std::polar(1.0, 2.0 * kPi * z.k * j / n);
    return S;
}

Signal apply_tf_shift(PhasePoint z, const Signal& psi) {
    const int n = psi.grid.n;
    Signal out{psi.grid, Eigen::VectorXcd(n)};
    for (int j = 0; j < n; ++j)
        out.values[j] = std::polar(1.0, 2.0 * kPi * z.k * j / n) * psi.values[storage_index(j - z.m, n)];
    return out;
}

OperatorMatrix translate_op(const OperatorMatrix& S, PhasePoint z) {
    const int n = S.grid.n;
    OperatorMatrix out{S.grid, Eigen::MatrixXcd(n, n)};
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            out.entries(a, b) = std::polar(1.0, 2.0 * kPi * z.k * (a - b) / n) *
                                S.entries(storage_index(a - z.m, n), storage_index(b - z.m, n));
    return out;
}

OperatorMatrix parity(const GridSpec& grid) {
    const int n = grid.n;
    OperatorMatrix P{grid, Eigen::MatrixXcd::Zero(n, n)};
    for (int b = 0; b < n; ++b) P.entries(storage_index(-b, n), b) = 1.0;
    return P;
}

OperatorMatrix check_op(const OperatorMatrix& S) {
    OperatorMatrix P = parity(S.grid);
    return {S.grid, P.entries * S.entries * P.entries};
}

OperatorMatrix rank_one(const Signal& psi, const Signal& phi) {
    if (psi.grid.n != phi.grid.n) throw std::invalid_argument("rank_one: grid mismatch");
    return {psi.grid, psi.values * phi.values.adjoint()};
}

OperatorMatrix random_operator(const GridSpec& grid, uint64_t seed) {
    SplitMix64 rng(seed);
    OperatorMatrix S{grid, Eigen::MatrixXcd(grid.n, grid.n)};
    for (int b = 0; b < grid.n; ++b)
        for (int a = 0; a < grid.n; ++a) {
            double re = rng.normal();
            double im = rng.normal();
            S.entries(a, b) = cdouble(re, im);
        }
    S.entries /= S.entries.norm();
    return S;
}

PhaseFn fourier_wigner_phase(const GridSpec& grid) {
    const int n = grid.n;
    PhaseFn C{grid, Eigen::MatrixXcd(n, n)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm)
            C.values(sm, sk) = branch_phase(centered_index(sm, n), centered_index(sk, n), n);
    return C;
}

PhaseFn fourier_wigner(const OperatorMatrix& S) {
    const int n = S.grid.n;
    PhaseFn F{S.grid, Eigen::MatrixXcd(n, n)};
    std::vector<cdouble> diag(n);
    for (int sm = 0; sm < n; ++sm) {
        for (int j = 0; j < n; ++j) diag[j] = S.entries(storage_index(j + sm, n), j);
        dft_inplace(diag.data(), n, -1);
        int m = centered_index(sm, n);
        for (int sk = 0; sk < n; ++sk)
            F.values(sm, sk) = branch_phase(m, centered_index(sk, n), n) * diag[sk];
    }
    return F;
}

OperatorMatrix inverse_fourier_wigner(const PhaseFn& F) {
    const int n = F.grid.n;
    OperatorMatrix S{F.grid, Eigen::MatrixXcd(n, n)};
    std::vector<cdouble> row(n);
    for (int sm = 0; sm < n; ++sm) {
        int m = centered_index(sm, n);
        for (int sk = 0; sk < n; ++sk)
            row[sk] = std::conj(branch_phase(m, centered_index(sk, n), n)) * F.values(sm, sk);
        dft_inplace(row.data(), n, +1);
        for (int j = 0; j < n; ++j) S.entries(storage_index(j + sm, n), j) = row[j];
    }
    return S;
}

OperatorMatrix weyl_quantize(const PhaseFn& f) {
    return inverse_fourier_wigner(symplectic_fourier(f));
}

PhaseFn weyl_symbol(const OperatorMatrix& S) {
    return symplectic_fourier(fourier_wigner(S));
}

PhaseFn wigner(const Signal& psi, const Signal& phi) {
    return weyl_symbol(rank_one(psi, phi));
}

double SchattenSpectrum::fraction_above(double eps) const {
    int count = 0;
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma[i] > eps) ++count;
    return static_cast<double>(count) / static_cast<double>(sigma.size());
}

SchattenSpectrum schatten(const OperatorMatrix& S) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(S.entries);
    SchattenSpectrum out;
    out.sigma = svd.singularValues();
    if (out.sigma.size() > 0) {
        double cut = 1e-12 * out.sigma[0];
        for (int i = 0; i < out.sigma.size(); ++i)
            if (out.sigma[i] < cut) out.sigma[i] = 0.0;
        out.op = out.sigma[0];
    }
    out.s1 = out.sigma.sum();
    out.s2 = out.sigma.norm();
    return out;
}

}  // namespace qha
