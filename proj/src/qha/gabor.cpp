#include "qha/gabor.hpp"

#include <cmath>

#include "qha/fft.hpp"
#include "qha/tauber.hpp"

namespace qha {
namespace {

void require_same_grid(int a, int b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

// w[j] = psi[j] * conj(phi[j - m])  (storage shift)
void windowed_product(const Signal& psi, const Signal& phi, int sm, std::vector<cdouble>& w) {
    const int n = psi.grid.n;
    for (int j = 0; j < n; ++j) w[j] = psi.values[j] * std::conj(phi.values[storage_index(j - sm, n)]);
}

}  // namespace

StftTable stft(const Signal& psi, const Signal& phi) {
    require_same_grid(psi.grid.n, phi.grid.n, "stft");
    if (phi.values.norm() == 0.0) throw std::invalid_argument("stft: zero window");
    const int n = psi.grid.n;
    StftTable V{psi.grid, Eigen::MatrixXcd(n, n)};
    std::vector<cdouble> w(n);
    for (int sm = 0; sm < n; ++sm) {
        windowed_product(psi, phi, sm, w);
        dft_inplace(w.data(), n, -1);
        for (int sk = 0; sk < n; ++sk) V.values(sm, sk) = w[sk];
    }
    return V;
}

Signal synthesis(const StftTable& F, const Signal& phi) {
    require_same_grid(F.grid.n, phi.grid.n, "synthesis");
    const int n = F.grid.n;
    Signal psi{F.grid, Eigen::VectorXcd::Zero(n)};
    std::vector<cdouble> row(n);
    for (int sm = 0; sm < n; ++sm) {
        for (int sk = 0; sk < n; ++sk) row[sk] = F.values(sm, sk);
        dft_inplace(row.data(), n, +1);
        for (int j = 0; j < n; ++j) psi.values[j] += phi.values[storage_index(j - sm, n)] * row[j];
    }
    return psi;
}

PhaseFn to_phase_fn(const StftTable& V) { return PhaseFn{V.grid, V.values}; }

PhaseFn berezin(const OperatorMatrix& T, const Signal& phi) {
    require_same_grid(T.grid.n, phi.grid.n, "berezin");
    if (std::abs(phi.values.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("berezin: window must have unit norm");
    const int n = T.grid.n;
    PhaseFn B{T.grid, Eigen::MatrixXcd(n, n)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            PhasePoint z{centered_index(sm, n), centered_index(sk, n)};
            Signal u = apply_tf_shift(z, phi);
            B.values(sm, sk) = u.values.dot(T.entries * u.values);  // <T u, u>
        }
    return B;
}

WindowZeroReport window_zero_report(const Signal& phi) {
    // |V_phi phi| and |F_W(phi (x) phi)| agree up to a unimodular factor, so
    // the operator-side diagnostics are the canonical implementation.
    return operator_zero_report(rank_one(phi, phi));
}

double min_abs_stft(const Signal& phi) { return window_zero_report(phi).bulk_min; }

double gabor_intersection_angle(const Signal& phi1, const Signal& phi2) {
    require_same_grid(phi1.grid.n, phi2.grid.n, "gabor_intersection_angle");
    const int n = phi1.grid.n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    auto analysis_frame = [&](const Signal& phi) {
        Eigen::MatrixXcd Q(n * n, n);
        Signal basis{phi.grid, Eigen::VectorXcd::Zero(n)};
        for (int b = 0; b < n; ++b) {
            basis.values.setZero();
            basis.values[b] = 1.0;
            StftTable V = stft(basis, phi);
            Q.col(b) = Eigen::Map<Eigen::VectorXcd>(V.values.data(), n * n) * scale;
        }
        return Q;
    };

    Eigen::MatrixXcd M = analysis_frame(phi1).adjoint() * analysis_frame(phi2);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    double cosmax = std::min(1.0, svd.singularValues()[0]);
    return std::acos(cosmax);
}

Stft4Table stft_phase(const PhaseFn& f, const PhaseFn& window) {
    require_same_grid(f.grid.n, window.grid.n, "stft_phase");
    const int n = f.grid.n;
    if (n > 32) throw std::invalid_argument("stft_phase: table has n^4 entries, guarded to n <= 32");

    Stft4Table T{f.grid, std::vector<cdouble>(static_cast<size_t>(n) * n * n * n)};
    Eigen::MatrixXcd W(n, n);
    std::vector<cdouble> scratch(n);
    const double scale = 1.0 / n;

    for (int su1 = 0; su1 < n; ++su1)
        for (int su2 = 0; su2 < n; ++su2) {
            for (int sk = 0; sk < n; ++sk)
                for (int sm = 0; sm < n; ++sm)
                    W(sm, sk) = f.values(sm, sk) *
                                std::conj(window.values(storage_index(sm - su1, n), storage_index(sk - su2, n)));
            // 2D forward DFT of W, then the 1/n weight.
            for (int sm = 0; sm < n; ++sm) {
                for (int sk = 0; sk < n; ++sk) scratch[sk] = W(sm, sk);
                dft_inplace(scratch.data(), n, -1);
                for (int sk = 0; sk < n; ++sk) W(sm, sk) = scratch[sk];
            }
            for (int sk = 0; sk < n; ++sk) {
                for (int sm = 0; sm < n; ++sm) scratch[sm] = W(sm, sk);
                dft_inplace(scratch.data(), n, -1);
                for (int sm = 0; sm < n; ++sm) W(sm, sk) = scratch[sm];
            }
            for (int sw1 = 0; sw1 < n; ++sw1)
                for (int sw2 = 0; sw2 < n; ++sw2)
                    T.values[static_cast<size_t>(((su1 * n + su2) * n + sw1)) * n + sw2] =
                        W(sw1, sw2) * scale;
        }
    return T;
}

}  // namespace qha
