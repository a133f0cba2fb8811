#include "qha/quantize.hpp"

#include <cmath>
#include <numbers>

namespace qha {
namespace {

constexpr double kPi = std::numbers::pi;

void require_tau(double tau) {
    if (!(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("tau must lie in the open interval (0,1)");
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// Builds F_W^{-1} of a pointwise function of q(m,k).
template <typename F>
OperatorMatrix from_q_phase(const GridSpec& grid, F&& value_of_q) {
    const int n = grid.n;
    PhaseFn F_W{grid, Eigen::MatrixXcd(n, n)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            double q = symmetric_phase_product(grid, centered_index(sm, n), centered_index(sk, n));
            F_W.values(sm, sk) = value_of_q(q);
        }
    return inverse_fourier_wigner(F_W);
}

}  // namespace

double symmetric_phase_product(const GridSpec& grid, int m, int k) {
    const int n = grid.n;
    bool me = m == -n / 2, ke = k == -n / 2;
    if (me && ke) return static_cast<double>(n) * n / 4.0;
    if (me) return -(n / 2.0) * std::abs(k);
    if (ke) return -std::abs(m) * (n / 2.0);
    return static_cast<double>(m) * k;
}

OperatorMatrix tau_operator(const GridSpec& grid, double tau) {
    require_tau(tau);
    const double c = 2.0 * tau - 1.0;
    return from_q_phase(grid,
                        [&](double q) { return std::polar(1.0, -kPi * c * q / grid.n); });
}

PhaseFn tau_symbol(const GridSpec& grid, double tau) {
    require_tau(tau);
    if (tau == 0.5) return mask(grid, "delta");
    const int n = grid.n;
    const double amp = 2.0 / std::abs(2.0 * tau - 1.0);
    const double rate = 2.0 / (2.0 * tau - 1.0);
    PhaseFn f{grid, Eigen::MatrixXcd(n, n)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            double mk = static_cast<double>(centered_index(sm, n)) * centered_index(sk, n);
            f.values(sm, sk) = std::polar(amp, 2.0 * kPi * rate * mk / n);
        }
    return f;
}

PhaseFn cohen_Q(const OperatorMatrix& R, const Signal& psi) {
    return conv_op_op(rank_one(psi, psi), check_op(R));
}

OperatorMatrix tau_quantize(const PhaseFn& f, double tau) {
    require_tau(tau);
    return conv_fun_op(f, tau_operator(f.grid, 1.0 - tau));
}

OperatorMatrix born_jordan(const GridSpec& grid) {
    return from_q_phase(grid, [&](double q) { return sinc(kPi * q / grid.n); });
}

OperatorMatrix parity_pseudo(const GridSpec& grid) {
    PhaseFn F{grid, Eigen::MatrixXcd::Constant(grid.n, grid.n, 2.0)};
    return inverse_fourier_wigner(F);
}

QuantizerSpec parse_quantizer(const std::string& text) {
    QuantizerSpec spec;
    spec.id = text;
    if (text == "born_jordan") {
        spec.kind = QuantizerSpec::Kind::BornJordan;
        return spec;
    }
    if (text.rfind("tau(", 0) == 0 && text.back() == ')') {
        spec.kind = QuantizerSpec::Kind::Tau;
        spec.tau = std::stod(text.substr(4, text.size() - 5));
        require_tau(spec.tau);
        return spec;
    }
    throw std::invalid_argument("unknown quantizer: " + text);
}

OperatorMatrix quantizer_operator(const GridSpec& grid, const QuantizerSpec& spec) {
    if (spec.kind == QuantizerSpec::Kind::BornJordan) return born_jordan(grid);
    return tau_operator(grid, spec.tau);
}

QuantizationReport quantization_compactness_check(
    const OperatorMatrix& R, const std::vector<std::pair<std::string, PhaseFn>>& test_masks,
    const std::vector<std::pair<std::string, Signal>>& test_signals) {
    const GridSpec grid = R.grid;
    Signal phi0 = atom(grid, "gaussian");
    WindowZeroReport wz = window_zero_report(phi0);
    if (wz.bulk_min < 1e-3 * wz.lattice_max)
        throw std::invalid_argument("quantization_compactness_check: test window has spectrogram zeros");

    std::vector<double> radii;
    for (double fr : {0.0, 0.2, 0.4, 0.6, 0.8}) radii.push_back(fr * rho_max(grid));

    QuantizationReport rep;
    rep.husimi = decay_profile(cohen_Q(R, phi0), radii);
    rep.husimi_decays = rep.husimi.values.front() > 0.0 &&
                        rep.husimi.values.back() <= 0.1 * rep.husimi.values.front();
    for (const auto& [name, psi] : test_signals)
        rep.signal_profiles.emplace_back(name, decay_profile(cohen_Q(R, psi), radii));
    double worst_fraction = 0.0;
    for (const auto& [name, f] : test_masks) {
        CompactnessSummary cs = compactness_report(conv_fun_op(f, R), 0.01);
        worst_fraction = std::max(worst_fraction, cs.fraction_above);
        rep.mask_compact.emplace_back(name, cs);
    }
    rep.verdict_i = rep.husimi_decays;
    rep.verdict_iv = worst_fraction < 1.0;
    rep.consistent = rep.verdict_i == rep.verdict_iv;
    return rep;
}

}  // namespace qha
