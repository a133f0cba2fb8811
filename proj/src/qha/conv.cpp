#include "qha/conv.hpp"

#include "qha/gabor.hpp"

namespace qha {
namespace {

void require_same_grid(int a, int b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

}  // namespace

PhaseFn conv_fun_fun(const PhaseFn& f, const PhaseFn& g) {
    require_same_grid(f.grid.n, g.grid.n, "conv_fun_fun");
    PhaseFn fh = symplectic_fourier(f);
    PhaseFn gh = symplectic_fourier(g);
    fh.values = fh.values.cwiseProduct(gh.values);
    return symplectic_fourier(fh);  // F_sigma is self-inverse
}

PhaseFn conv_fun_fun_naive(const PhaseFn& f, const PhaseFn& g) {
    require_same_grid(f.grid.n, g.grid.n, "conv_fun_fun_naive");
    const int n = f.grid.n;
    PhaseFn out{f.grid, Eigen::MatrixXcd::Zero(n, n)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            cdouble acc = 0.0;
            for (int sk2 = 0; sk2 < n; ++sk2)
                for (int sm2 = 0; sm2 < n; ++sm2)
                    acc += f.values(sm2, sk2) *
                           g.values(storage_index(sm - sm2, n), storage_index(sk - sk2, n));
            out.values(sm, sk) = acc / static_cast<double>(n);
        }
    return out;
}

OperatorMatrix conv_fun_op(const PhaseFn& f, const OperatorMatrix& S) {
    require_same_grid(f.grid.n, S.grid.n, "conv_fun_op");
    PhaseFn fh = symplectic_fourier(f);
    PhaseFn FS = fourier_wigner(S);
    FS.values = fh.values.cwiseProduct(FS.values);
    return inverse_fourier_wigner(FS);
}

OperatorMatrix conv_fun_op_naive(const PhaseFn& f, const OperatorMatrix& S) {
    require_same_grid(f.grid.n, S.grid.n, "conv_fun_op_naive");
    const int n = f.grid.n;
    OperatorMatrix out{f.grid, Eigen::MatrixXcd::Zero(n, n)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            PhasePoint z{centered_index(sm, n), centered_index(sk, n)};
            out.entries += f.values(sm, sk) * translate_op(S, z).entries;
        }
    out.entries /= static_cast<double>(n);
    return out;
}

PhaseFn conv_op_op(const OperatorMatrix& S, const OperatorMatrix& T) {
    require_same_grid(S.grid.n, T.grid.n, "conv_op_op");
    PhaseFn FS = fourier_wigner(S);
    PhaseFn FT = fourier_wigner(T);
    FS.values = FS.values.cwiseProduct(FT.values);
    return symplectic_fourier(FS);
}

PhaseFn conv_op_op_naive(const OperatorMatrix& S, const OperatorMatrix& T) {
    require_same_grid(S.grid.n, T.grid.n, "conv_op_op_naive");
    const int n = S.grid.n;
    OperatorMatrix Tc = check_op(T);
    PhaseFn out{S.grid, Eigen::MatrixXcd(n, n)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            PhasePoint z{centered_index(sm, n), centered_index(sk, n)};
            OperatorMatrix Tz = translate_op(Tc, z);
            out.values(sm, sk) = (S.entries.transpose().cwiseProduct(Tz.entries)).sum();
        }
    return out;
}

OperatorMatrix loc_op(const PhaseFn& f, const Signal& phi1, const Signal& phi2) {
    require_same_grid(f.grid.n, phi1.grid.n, "loc_op");
    require_same_grid(f.grid.n, phi2.grid.n, "loc_op");
    if (norm(phi1) == 0.0 || norm(phi2) == 0.0)
        throw std::invalid_argument("loc_op: windows must be nonzero");
    const int n = f.grid.n;
    OperatorMatrix A{f.grid, Eigen::MatrixXcd(n, n)};
    Signal basis{f.grid, Eigen::VectorXcd::Zero(n)};
    for (int b = 0; b < n; ++b) {
        basis.values.setZero();
        basis.values[b] = 1.0;
        StftTable V = stft(basis, phi1);
        V.values = f.values.cwiseProduct(V.values);
        A.entries.col(b) = synthesis(V, phi2).values;
    }
    return A;
}

}  // namespace qha
