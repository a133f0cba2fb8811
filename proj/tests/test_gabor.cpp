#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/SVD>

#include "qha/conv.hpp"
#include "qha/gabor.hpp"
#include "test_util.hpp"

using namespace qha;
using namespace qha::test;

namespace {

// Apply the Gabor-space projection V_phi V_phi^* to a table.
StftTable project_table(const StftTable& F, const Signal& phi) {
    return stft(synthesis(F, phi), phi);
}

cdouble table_inner(const StftTable& a, const StftTable& b) {
    return (a.values.array() * b.values.array().conjugate()).sum() / double(a.grid.n);
}

}  // namespace

TEST_CASE("stft: special values, direct oracle, Moyal identity") {
    GridSpec g = make_grid(8);
    Signal psi = random_signal(g, 401);
    Signal phi = atom(g, "gaussian");
    StftTable V = stft(psi, phi);

    SUBCASE("V(0,0) is the plain inner product") {
        CHECK(std::abs(V.values(0, 0) - inner(psi, phi)) <= 1e-12);
    }

    SUBCASE("matches the definition <psi, pi(z) phi> entrywise") {
        for (int sk = 0; sk < g.n; ++sk)
            for (int sm = 0; sm < g.n; ++sm) {
                int m = centered_index(sm, g.n), k = centered_index(sk, g.n);
                cdouble want = inner(psi, apply_tf_shift({m, k}, phi));
                CHECK(std::abs(V.values(sm, sk) - want) <= 1e-12);
            }
    }

    SUBCASE("Moyal identity") {
        Signal w = random_signal(g, 409);
        StftTable Vw = stft(psi, w);
        double lhs = Vw.values.squaredNorm() / g.n;
        double rhs = norm(psi) * norm(psi) * norm(w) * norm(w);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }

    SUBCASE("zero window is rejected") {
        Signal zero{g, Eigen::VectorXcd::Zero(g.n)};
        CHECK_THROWS_AS(stft(psi, zero), std::invalid_argument);
    }
}

TEST_CASE("gaussian spectrogram matches e^{-i pi x w} e^{-pi |z|^2 / 2}") {
    const double tol[] = {5e-3, 1e-5};  // n = 16, 32
    int idx = 0;
    for (int n : {16, 32}) {
        GridSpec g = make_grid(n);
        Signal p0 = atom(g, "gaussian");
        StftTable V = stft(p0, p0);
        double worst = 0.0;
        for (int sk = 0; sk < n; ++sk)
            for (int sm = 0; sm < n; ++sm) {
                int m = centered_index(sm, n), k = centered_index(sk, n);
                double x = m * g.h, w = k * g.h;
                cdouble cont = std::polar(std::exp(-kPi * (x * x + w * w) / 2.0), -kPi * x * w);
                worst = std::max(worst, std::abs(V.values(sm, sk) - cont));
            }
        CHECK(worst <= tol[idx]);
        ++idx;
    }
}

TEST_CASE("synthesis: adjoint roundtrip and Gabor projection") {
    GridSpec g = make_grid(16);
    Signal psi = random_signal(g, 419);

    SUBCASE("V_phi^* V_phi = I for every shipped unit window") {
        for (const char* kind : {"gaussian", "hermite(1)", "onesided_exp", "random(421)"}) {
            Signal phi = atom(g, kind);
            Signal back = synthesis(stft(psi, phi), phi);
            CHECK(sig_dist(back, psi) <= 1e-10);
        }
    }

    SUBCASE("synthesis of the zero table vanishes") {
        StftTable zero{g, Eigen::MatrixXcd::Zero(g.n, g.n)};
        CHECK(norm(synthesis(zero, atom(g, "gaussian"))) <= 1e-14);
    }

    SUBCASE("V_phi V_phi^* is an orthogonal projection") {
        Signal phi = atom(g, "gaussian");
        StftTable F{g, random_phase_fn(g, 431).values};
        StftTable once = project_table(F, phi);
        StftTable twice = project_table(once, phi);
        CHECK(max_abs(twice.values - once.values) <= 1e-10);

        // Hermitian as an operator on tables: <P F, G> = <F, P G>.
        StftTable G{g, random_phase_fn(g, 433).values};
        cdouble lhs = table_inner(once, G);
        cdouble rhs = table_inner(F, project_table(G, phi));
        CHECK(std::abs(lhs - rhs) <= 1e-10);
    }
}

TEST_CASE("reproducing kernel identity on the Gabor space") {
    GridSpec g = make_grid(8);
    for (const char* kind : {"gaussian", "random(439)"}) {
        Signal phi = atom(g, kind);
        Signal psi = random_signal(g, 443);
        StftTable V = stft(psi, phi);
        for (PhasePoint z : {PhasePoint{0, 0}, {2, -3}, {-4, 1}, {-4, -4}}) {
            StftTable kz = stft(apply_tf_shift({z.m, z.k}, phi), phi);
            cdouble reproduced = table_inner(V, kz);
            CHECK(std::abs(reproduced -
                           V.values(storage_index(z.m, g.n), storage_index(z.k, g.n))) <= 1e-10);
        }
    }
}

TEST_CASE("Berezin transform") {
    GridSpec g = make_grid(16);
    Signal phi = atom(g, "gaussian");

    SUBCASE("agrees with the convolution form for random operators") {
        OperatorMatrix T = random_operator(g, 449);
        PhaseFn direct = berezin(T, phi);
        PhaseFn via_conv = conv_op_op(T, check_op(rank_one(phi, phi)));
        CHECK(fn_dist(direct, via_conv) <= 1e-10);
    }

    SUBCASE("unit operator maps to the unit function") {
        CHECK(fn_dist(berezin(identity_op(g), phi), mask(g, "constant(1)")) <= 1e-10);
    }

    SUBCASE("Toeplitz Berezin is mask convolved with the spectrogram kernel") {
        PhaseFn f = random_phase_fn(g, 457);
        PhaseFn lhs = berezin(loc_op(f, phi, phi), phi);
        StftTable V = stft(phi, phi);
        PhaseFn kernel = sample_fn(g, [&](int m, int k) {
            return cdouble(std::norm(V.values(storage_index(m, g.n), storage_index(k, g.n))), 0.0);
        });
        CHECK(fn_dist(lhs, conv_fun_fun(f, kernel)) <= 1e-10);
    }

    SUBCASE("gaussian kernel approaches e^{-pi |z|^2}") {
        const double tol[] = {1e-2, 1e-4, 1e-9};  // n = 8, 16, 32
        int idx = 0;
        for (int n : {8, 16, 32}) {
            GridSpec gg = make_grid(n);
            Signal p0 = atom(gg, "gaussian");
            PhaseFn B = berezin(rank_one(p0, p0), p0);
            PhaseFn oracle = sample_fn(gg, [&](int m, int k) {
                return std::exp(-kPi * (double(m) * m + double(k) * k) / n);
            });
            CHECK(fn_dist(B, oracle) <= tol[idx]);
            ++idx;
        }
    }

    SUBCASE("unnormalized windows are rejected") {
        Signal big{g, 2.0 * phi.values};
        CHECK_THROWS_AS(berezin(identity_op(g), big), std::invalid_argument);
    }
}

TEST_CASE("window zero diagnostics and the refined bulk minimum") {
    SUBCASE("gaussian: bulk minimum sits on the continuum rim envelope") {
        // The refined statistic minimizes over |z| <= r_b = min(1.5, rho_max/2),
        // where the gaussian ambiguity is e^{-pi |z|^2 / 2}.
        const double rel_tol[] = {0.05, 0.01, 0.01};  // n = 8, 16, 32
        int idx = 0;
        for (int n : {8, 16, 32}) {
            GridSpec g = make_grid(n);
            double rb = std::min(1.5, rho_max(g) / 2.0);
            double predicted = std::exp(-kPi * rb * rb / 2.0);
            double got = min_abs_stft(atom(g, "gaussian"));
            CHECK(std::abs(got - predicted) <= rel_tol[idx] * predicted);
            ++idx;
        }
    }

    SUBCASE("hermite(1) exposes its zero circle; onesided_exp stays clear") {
        for (int n : {8, 16, 32}) {
            GridSpec g = make_grid(n);
            WindowZeroReport h = window_zero_report(atom(g, "hermite(1)"));
            CHECK(h.bulk_min <= 1e-4 * h.lattice_max);
            if (n >= 16) CHECK(h.bulk_min <= 1e-6 * h.lattice_max);
            CHECK(min_abs_stft(atom(g, "onesided_exp")) > 1e-3);
        }
    }

    SUBCASE("report bookkeeping: peak at the origin, structural lattice zeros") {
        GridSpec g = make_grid(16);
        WindowZeroReport r = window_zero_report(atom(g, "gaussian"));
        CHECK(r.lattice_max == doctest::Approx(1.0).epsilon(1e-10));  // V(0,0) = ||phi||^2
        CHECK(r.lattice_min <= 1e-12);  // real windows vanish on the edge lines
        CHECK(r.interior_min > 0.0);
        CHECK(r.bulk_radius == doctest::Approx(std::min(1.5, rho_max(g) / 2.0)).epsilon(1e-12));
    }
}

TEST_CASE("Gabor space intersection angles") {
    GridSpec g = make_grid(16);
    Signal p0 = atom(g, "gaussian");
    Signal h1 = atom(g, "hermite(1)");

    CHECK(gabor_intersection_angle(p0, p0) <= 1e-6);
    Signal rotated{g, std::polar(1.0, 0.7) * p0.values};
    CHECK(gabor_intersection_angle(p0, rotated) <= 1e-6);
    CHECK(gabor_intersection_angle(p0, h1) > 0.01);
}

TEST_CASE("linearized Berezin map at n = 8: diagonal structure and injectivity") {
    const int n = 8;
    GridSpec g = make_grid(n);

    struct Expect {
        const char* kind;
        int kernel_dim;  // structural lattice zeros of the ambiguity function
    };
    for (Expect e : {Expect{"gaussian", 8}, {"hermite(1)", 4}, {"onesided_exp", 8}}) {
        Signal phi = atom(g, e.kind);

        // Column (a, b) of the map T -> berezin(T, phi), rows indexed by z.
        Eigen::MatrixXcd M(n * n, n * n);
        for (int sk = 0; sk < n; ++sk)
            for (int sm = 0; sm < n; ++sm) {
                Signal pz = apply_tf_shift({centered_index(sm, n), centered_index(sk, n)}, phi);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        M(sk * n + sm, a * n + b) = pz.values[b] * std::conj(pz.values[a]);
            }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
        std::vector<double> sv(svd.singularValues().data(),
                               svd.singularValues().data() + n * n);
        std::sort(sv.begin(), sv.end());

        // The map diagonalizes over the Fourier-Wigner basis: its singular
        // values are exactly sqrt(n) |V_phi phi(z)| over the lattice.
        StftTable V = stft(phi, phi);
        std::vector<double> av;
        for (int i = 0; i < n * n; ++i) av.push_back(std::sqrt(double(n)) * std::abs(V.values(i)));
        std::sort(av.begin(), av.end());
        for (int i = 0; i < n * n; ++i) CHECK(std::abs(sv[i] - av[i]) <= 1e-8);

        // Numerical kernel = structural zero set of the ambiguity function.
        double smax = sv.back();
        int zero_count = 0;
        while (zero_count < n * n && sv[zero_count] < 1e-12 * smax) ++zero_count;
        CHECK(zero_count == e.kernel_dim);
    }

    // Dichotomy: a window passing the bulk-minimum test has no kernel beyond
    // the structural edge set (gaussian: smallest nonzero sigma ~ 5.7e-3 rel).
    Signal p0 = atom(g, "gaussian");
    CHECK(min_abs_stft(p0) > 1e-3);
    Eigen::MatrixXcd M(n * n, n * n);
    for (int sk = 0; sk < n; ++sk)
        for (int sm = 0; sm < n; ++sm) {
            Signal pz = apply_tf_shift({centered_index(sm, n), centered_index(sk, n)}, p0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    M(sk * n + sm, a * n + b) = pz.values[b] * std::conj(pz.values[a]);
        }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    Eigen::VectorXd s = svd.singularValues();
    double smallest_nonzero = s(0);
    for (int i = n * n - 1; i >= 0; --i)
        if (s(i) >= 1e-12 * s(0)) {
            smallest_nonzero = s(i);
            break;
        }
    CHECK(smallest_nonzero > 1e-3 * s(0));
}

TEST_CASE("phase-space STFT (4D)") {
    GridSpec g = make_grid(8);
    PhaseFn f = random_phase_fn(g, 461);
    PhaseFn Phi = mask(g, "gaussian_env");
    Stft4Table V = stft_phase(f, Phi);

    SUBCASE("V(0,0) is the weighted inner product") {
        CHECK(std::abs(V.at(0, 0, 0, 0) - fn_inner(f, Phi)) <= 1e-10);
    }

    SUBCASE("matches the definition at sampled indices") {
        for (auto [su1, su2, sw1, sw2] :
             {std::array<int, 4>{1, 2, 3, 4}, {7, 0, 5, 6}, {4, 4, 4, 4}}) {
            int u1 = centered_index(su1, g.n), u2 = centered_index(su2, g.n);
            int w1 = centered_index(sw1, g.n), w2 = centered_index(sw2, g.n);
            cdouble acc = 0.0;
            for (int sk = 0; sk < g.n; ++sk)
                for (int sm = 0; sm < g.n; ++sm) {
                    int m = centered_index(sm, g.n), k = centered_index(sk, g.n);
                    cdouble win = Phi.values(storage_index(m - u1, g.n),
                                             storage_index(k - u2, g.n));
                    double phase = -2.0 * kPi * (double(w1) * m + double(w2) * k) / g.n;
                    acc += f.values(sm, sk) * std::conj(win) * std::polar(1.0, phase);
                }
            acc /= g.n;
            CHECK(std::abs(V.at(su1, su2, sw1, sw2) - acc) <= 1e-10);
        }
    }

    SUBCASE("Moyal analogue") {
        double sum = 0.0;
        for (const cdouble& v : V.values) sum += std::norm(v);
        double lhs = sum / (double(g.n) * g.n);
        double rhs = wnorm(f) * wnorm(f) * wnorm(Phi) * wnorm(Phi);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }

    SUBCASE("constant symbols have x-independent moduli") {
        Stft4Table Vc = stft_phase(mask(g, "constant(0.7,-0.2)"), Phi);
        for (int sw1 = 0; sw1 < g.n; ++sw1)
            for (int sw2 = 0; sw2 < g.n; ++sw2) {
                double ref = std::abs(Vc.at(0, 0, sw1, sw2));
                for (int su1 = 0; su1 < g.n; ++su1)
                    for (int su2 = 0; su2 < g.n; ++su2)
                        CHECK(std::abs(std::abs(Vc.at(su1, su2, sw1, sw2)) - ref) <= 1e-10);
            }
    }

    SUBCASE("size guard rejects n > 32") {
        GridSpec big = make_grid(64);
        PhaseFn fb = random_phase_fn(big, 463);
        CHECK_THROWS_AS(stft_phase(fb, mask(big, "gaussian_env")), std::invalid_argument);
    }
}

TEST_CASE("to_phase_fn shares the table layout") {
    GridSpec g = make_grid(8);
    StftTable V = stft(random_signal(g, 467), atom(g, "gaussian"));
    PhaseFn f = to_phase_fn(V);
    CHECK(max_abs(f.values - V.values) == 0.0);
}
