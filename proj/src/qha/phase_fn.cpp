#include "qha/phase_fn.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "qha/fft.hpp"
#include "qha/rng.hpp"

namespace qha {
namespace {

constexpr double kPi = std::numbers::pi;

// Splits "name(a,b)" into name and args (duplicated from signal.cpp on
// purpose: the two parsers accept different argument shapes).
std::vector<std::string> split_args(const std::string& kind, std::string& name) {
    auto open = kind.find('(');
    if (open == std::string::npos) {
        name = kind;
        return {};
    }
    if (kind.back() != ')') throw std::invalid_argument("malformed mask spec: " + kind);
    name = kind.substr(0, open);
    std::string body = kind.substr(open + 1, kind.size() - open - 2);
    std::vector<std::string> args;
    size_t pos = 0;
    while (!body.empty()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) {
            args.push_back(body.substr(pos));
            break;
        }
        args.push_back(body.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return args;
}

void fill_from(PhaseFn& f, const std::function<cdouble(int, int)>& g) {
    const int n = f.grid.n;
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm)
            f.values(sm, sk) = g(centered_index(sm, n), centered_index(sk, n));
}

}  // namespace

cdouble integral(const PhaseFn& f) { return f.values.sum() / static_cast<double>(f.grid.n); }

double wnorm(const PhaseFn& f) { return f.values.norm() / std::sqrt(static_cast<double>(f.grid.n)); }

double lp_norm(const PhaseFn& f, double p) {
    if (p <= 0.0) return sup_norm(f);
    double acc = 0.0;
    for (int sk = 0; sk < f.grid.n; ++sk)
        for (int sm = 0; sm < f.grid.n; ++sm) acc += std::pow(std::abs(f.values(sm, sk)), p);
    return std::pow(acc / f.grid.n, 1.0 / p);
}

double sup_norm(const PhaseFn& f) { return f.values.cwiseAbs().maxCoeff(); }

PhaseFn symplectic_fourier(const PhaseFn& f) {
    const int n = f.grid.n;
    Eigen::MatrixXcd work = f.values;
    std::vector<cdouble> scratch(n);

    // Inverse DFT along the k' axis (rows of `work` are m', columns k').
    for (int sm = 0; sm < n; ++sm) {
        for (int sk = 0; sk < n; ++sk) scratch[sk] = work(sm, sk);
        dft_inplace(scratch.data(), n, +1);
        for (int sk = 0; sk < n; ++sk) work(sm, sk) = scratch[sk];
    }
    // Forward DFT along the m' axis, then swap axes: out(m, k) = hat(k, m).
    PhaseFn out{f.grid, Eigen::MatrixXcd(n, n)};
    for (int col = 0; col < n; ++col) {
        for (int sm = 0; sm < n; ++sm) scratch[sm] = work(sm, col);
        dft_inplace(scratch.data(), n, -1);
        for (int sk = 0; sk < n; ++sk) out.values(col, sk) = scratch[sk];
    }
    return out;
}

PhaseFn mask(const GridSpec& grid, const std::string& kind) {
    const int n = grid.n;
    std::string name;
    std::vector<std::string> args = split_args(kind, name);
    PhaseFn f{grid, Eigen::MatrixXcd::Zero(n, n)};

    auto want = [&](size_t c) {
        if (args.size() != c)
            throw std::invalid_argument("mask " + name + ": expected " + std::to_string(c) + " argument(s)");
    };

    if (name == "constant") {
        if (args.empty() || args.size() > 2) throw std::invalid_argument("constant needs 1 or 2 arguments");
        cdouble a(std::stod(args[0]), args.size() == 2 ? std::stod(args[1]) : 0.0);
        f.values.setConstant(a);
        return f;
    }
    if (name == "chirp") {
        want(0);
        fill_from(f, [&](int m, int k) {
            return std::polar(1.0, kPi * (static_cast<double>(m) * m + static_cast<double>(k) * k) / n);
        });
        return f;
    }
    if (name == "plane_wave") {
        want(2);
        int m0 = std::stoi(args[0]), k0 = std::stoi(args[1]);
        fill_from(f, [&](int m, int k) {
            return std::polar(1.0, 2.0 * kPi * (static_cast<double>(k0) * m - static_cast<double>(m0) * k) / n);
        });
        return f;
    }
    if (name == "a_tau") {
        want(1);
        double tau = std::stod(args[0]);
        if (tau == 0.5)
            throw std::invalid_argument("a_tau: tau = 1/2 degenerates to the delta mask; use delta");
        if (tau <= 0.0 || tau >= 1.0) throw std::invalid_argument("a_tau: tau must lie in (0,1)");
        double amp = 2.0 / std::abs(2.0 * tau - 1.0);
        double rate = 2.0 / (2.0 * tau - 1.0);
        fill_from(f, [&](int m, int k) {
            return std::polar(amp, 2.0 * kPi * rate * m * k / n);
        });
        return f;
    }
    if (name == "indicator_disk" || name == "indicator_disk_complement") {
        want(1);
        double r = std::stod(args[0]);
        if (r < 0.0 || r > rho_max(grid))
            throw std::invalid_argument("indicator radius outside [0, rho_max]");
        bool complement = name == "indicator_disk_complement";
        fill_from(f, [&](int m, int k) {
            bool in = lattice_radius(grid, m, k) <= r;
            return (in != complement) ? 1.0 : 0.0;
        });
        return f;
    }
    if (name == "gaussian_env") {
        want(0);
        fill_from(f, [&](int m, int k) {
            return std::exp(-kPi * (static_cast<double>(m) * m + static_cast<double>(k) * k) / n);
        });
        return f;
    }
    if (name == "delta") {
        want(0);
        f.values(0, 0) = static_cast<double>(n);
        return f;
    }
    throw std::invalid_argument("unknown mask kind: " + kind);
}

PhaseFn random_phase_fn(const GridSpec& grid, uint64_t seed) {
    SplitMix64 rng(seed);
    PhaseFn f{grid, Eigen::MatrixXcd(grid.n, grid.n)};
    for (int sk = 0; sk < grid.n; ++sk)
        for (int sm = 0; sm < grid.n; ++sm) {
            double re = rng.normal();
            double im = rng.normal();
            f.values(sm, sk) = cdouble(re, im);
        }
    double nn = wnorm(f);
    f.values /= nn;
    return f;
}

DecayProfile decay_profile(const PhaseFn& f, const std::vector<double>& radii) {
    const int n = f.grid.n;
    DecayProfile out{radii, std::vector<double>(radii.size(), 0.0)};
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            double r = lattice_radius(f.grid, centered_index(sm, n), centered_index(sk, n));
            double v = std::abs(f.values(sm, sk));
            for (size_t i = 0; i < radii.size(); ++i)
                if (r >= radii[i] && v > out.values[i]) out.values[i] = v;
        }
    return out;
}

}  // namespace qha
