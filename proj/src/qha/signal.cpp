#include "qha/signal.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qha/rng.hpp"

namespace qha {
namespace {

// Parses "name" or "name(arg)" / "name(a,b)"; returns name and raw args.
struct KindSpec {
    std::string name;
    std::vector<std::string> args;
};

KindSpec parse_kind(const std::string& kind) {
    KindSpec out;
    auto open = kind.find('(');
    if (open == std::string::npos) {
        out.name = kind;
        return out;
    }
    if (kind.back() != ')') throw std::invalid_argument("malformed kind spec: " + kind);
    out.name = kind.substr(0, open);
    std::string body = kind.substr(open + 1, kind.size() - open - 2);
    size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) {
            out.args.push_back(body.substr(pos));
            break;
        }
        out.args.push_back(body.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

double hermite_poly(int order, double y) {
    double h0 = 1.0;
    if (order == 0) return h0;
    double h1 = 2.0 * y;
    for (int r = 1; r < order; ++r) {
        double h2 = 2.0 * y * h1 - 2.0 * r * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

Signal normalized(Signal psi) {
    double nn = psi.values.norm();
    if (nn == 0.0) throw std::invalid_argument("atom: degenerate (zero) signal");
    psi.values /= nn;
    return psi;
}

}  // namespace

double norm(const Signal& psi) { return psi.values.norm(); }

cdouble inner(const Signal& a, const Signal& b) {
    if (a.grid.n != b.grid.n) throw std::invalid_argument("inner: grid mismatch");
    return b.values.dot(a.values);  // Eigen dot conjugates its *this* argument
}

Signal atom(const GridSpec& grid, const std::string& kind) {
    const int n = grid.n;
    KindSpec spec = parse_kind(kind);
    Signal psi{grid, Eigen::VectorXcd::Zero(n)};

    if (spec.name == "gaussian") {
        for (int s = 0; s < n; ++s) {
            double x = centered_index(s, n) * grid.h;
            psi.values[s] = std::exp(-std::numbers::pi * x * x);
        }
        return normalized(psi);
    }
    if (spec.name == "hermite") {
        if (spec.args.size() != 1) throw std::invalid_argument("hermite needs an order, e.g. hermite(1)");
        int order = std::stoi(spec.args[0]);
        if (order < 0 || order > 16) throw std::invalid_argument("hermite order out of range");
        for (int s = 0; s < n; ++s) {
            double x = centered_index(s, n) * grid.h;
            psi.values[s] = hermite_poly(order, std::sqrt(2.0 * std::numbers::pi) * x) *
                            std::exp(-std::numbers::pi * x * x);
        }
        return normalized(psi);
    }
    if (spec.name == "onesided_exp") {
        for (int s = 0; s < n; ++s) {
            double x = centered_index(s, n) * grid.h;
            psi.values[s] = x >= 0.0 ? std::exp(-x) : 0.0;
        }
        return normalized(psi);
    }
    if (spec.name == "box") {
        if (spec.args.size() != 1) throw std::invalid_argument("box needs a width, e.g. box(4)");
        int w = std::stoi(spec.args[0]);
        if (w < 1 || w > n) throw std::invalid_argument("box width must be in 1..n");
        int lo = -(w / 2);  // w consecutive centered samples starting at lo
        for (int j = lo; j < lo + w; ++j) psi.values[storage_index(j, n)] = 1.0;
        return normalized(psi);
    }
    if (spec.name == "random") {
        if (spec.args.size() != 1) throw std::invalid_argument("random needs a seed, e.g. random(42)");
        return random_signal(grid, std::stoull(spec.args[0]));
    }
    throw std::invalid_argument("unknown atom kind: " + kind);
}

Signal random_signal(const GridSpec& grid, uint64_t seed) {
    SplitMix64 rng(seed);
    Signal psi{grid, Eigen::VectorXcd(grid.n)};
    for (int s = 0; s < grid.n; ++s) {
        double re = rng.normal();
        double im = rng.normal();
        psi.values[s] = cdouble(re, im);
    }
    return normalized(psi);
}

}  // namespace qha
