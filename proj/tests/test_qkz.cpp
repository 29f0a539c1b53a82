#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellw/qkz.hpp"
#include "ellw/rng.hpp"

using namespace ellw;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// criterion-11 parameter set: q = 0.6, p = 0.05, q^kappa = 0.5
QKZParams desk_params(int K = 48) {
    double q = 0.6;
    double r = std::log(0.05) / (2.0 * std::log(q));
    EllipticParams ell(cplx(q, 0.0), r, -1.0, K);
    double kappa = std::log(0.5) / std::log(q);
    DynamicalParams pi(std::vector<cplx>{cplx(0.9, 0.3), cplx(-0.4, -0.1)});
    return QKZParams(ell, kappa, pi);
}
}

TEST_CASE("zero weight condition") {
    CHECK(zero_weight(Partition::parse("12", 2)));
    CHECK_FALSE(zero_weight(Partition::parse("11", 2)));
    CHECK(zero_weight(Partition::parse("123123", 3)));

    // equivalence with sum of epsbar weights = 0, brute force n <= 6
    for (int N : {2, 3})
        for (int n = 1; n <= 6; ++n) {
            long total = 1;
            for (int i = 0; i < n; ++i) total *= N;
            for (long code = 0; code < total; ++code) {
                long c = code;
                std::vector<int> w(n);
                for (int i = 0; i < n; ++i) {
                    w[i] = int(c % N) + 1;
                    c /= N;
                }
                Partition I(w, N);
                // sum epsbar_{mu_j} = 0 iff all color counts equal
                std::vector<double> weight(N, 0.0);
                for (int mu : w) {
                    for (int j = 0; j < N; ++j) weight[j] -= 1.0 / N;
                    weight[mu - 1] += 1.0;
                }
                bool zero = true;
                for (double x : weight)
                    if (std::abs(x) > 1e-12) zero = false;
                CHECK(zero_weight(I) == zero);
            }
        }
}

TEST_CASE("torus quadrature oracles") {
    EllipticParams P;
    auto one = [](const std::vector<cplx>&) { return cplx(1.0); };
    CHECK(rel(torus_quadrature(one, 1, 64, 1.0, P), 1.0) < 1e-14);

    // f = t + 1/t integrates to 0
    auto tplus = [&](const std::vector<cplx>& v) {
        cplx t = P.z_of_u(v[0]);
        return t + 1.0 / t;
    };
    CHECK(std::abs(torus_quadrature(tplus, 1, 64, 1.0, P)) < 1e-13);

    // geometric series: 1/(1 - c/t) -> 1 for |c| < 1
    cplx c(0.35, 0.15);
    auto geom = [&](const std::vector<cplx>& v) {
        cplx t = P.z_of_u(v[0]);
        return 1.0 / (1.0 - c / t);
    };
    CHECK(rel(torus_quadrature(geom, 1, 128, 1.0, P), 1.0) < 1e-12);

    // M = 2 with the off-grid shift: product of two geometric factors
    cplx c2(0.2, -0.1);
    auto geom2 = [&](const std::vector<cplx>& v) {
        cplx t1 = P.z_of_u(v[0]), t2 = P.z_of_u(v[1]);
        return 1.0 / ((1.0 - c / t1) * (1.0 - c2 / t2));
    };
    CHECK(rel(torus_quadrature(geom2, 2, 64, 1.0, P), 1.0) < 1e-12);

    // pole on the contour triggers the spike detector
    cplx cbad(0.999999999, 0.0);
    auto bad = [&](const std::vector<cplx>& v) {
        cplx t = P.z_of_u(v[0]);
        return 1.0 / (1.0 - cbad / t);
    };
    CHECK_THROWS_AS(torus_quadrature(bad, 1, 4096, 1.0, P), ContourError);
}

TEST_CASE("phi_trace structure") {
    QKZParams qp = desk_params();
    // n = 0 degenerate: all products empty except C_0 = 1
    VariableAssignment x0{{}, {{}}};
    CHECK(rel(phi_trace(x0, qp), 1.0) < 1e-14);

    // K-ladder self-consistency
    QKZParams qp2 = desk_params(96);
    VariableAssignment x{{cplx(0.25, 0.0), cplx(0.10, 0.0)},
                         {{cplx(0.05, 0.21)}}};
    CHECK(rel(phi_trace(x, qp), phi_trace(x, qp2)) < 1e-12);

    // exchange symmetry of the z-pair double product under z1 <-> z2
    VariableAssignment xs{{x.u[1], x.u[0]}, x.v};
    CHECK(rel(phi_trace(xs, qp), phi_trace(x, qp)) < 1e-11);
}

TEST_CASE("pairing integrand: single-valuedness with tuned upsilon") {
    QKZParams qp = desk_params();
    Partition I = Partition::parse("12", 2), J = Partition::parse("21", 2);
    qp.upsilon = tuned_upsilon(I.shape(), qp);

    VariableAssignment x{{cplx(0.25, 0.0), cplx(0.10, 0.0)},
                         {{cplx(0.03, 0.4)}}};
    cplx base = pairing_integrand(I, J, x, qp);
    CHECK(std::isfinite(std::abs(base)));

    // t -> e^{-2pi i} t for the p-nome: v -> v + r tau;
    // for the q^kappa-nome: v -> v + (kappa/2) tau_kappa.  Net factor 1.
    EllipticParams ek = qp.ell_kappa();
    VariableAssignment xt = x;
    xt.v[0][0] += qp.ell.r * qp.ell.tau + ek.r * ek.tau;
    cplx looped = pairing_integrand(I, J, xt, qp);
    CHECK(rel(looped, base) < 1e-8);

    // modulus bounded on the torus |t| = 1
    for (int j = 0; j < 16; ++j) {
        double th = 2.0 * EllipticParams::pi() * j / 16.0;
        VariableAssignment xg = x;
        xg.v[0][0] = qp.ell.u_of_z(std::exp(cplx(0.0, th)));
        CHECK(std::isfinite(std::abs(pairing_integrand(I, J, xg, qp))));
    }
}

TEST_CASE("q-KZ residual at desk scale") {
    QKZParams qp = desk_params(40);
    cplx u1(0.25, 0.0), u2(0.10, 0.0);

    QkzResult res = check_qkz_n2(u1, u2, qp, 256);
    CHECK(res.residual < 1e-6);
    CHECK(res.ladder < 1e-9);

    // domain violation: |z| >= 1
    CHECK_THROWS_AS(check_qkz_n2(cplx(-0.2, 0.0), u2, qp, 64),
                    std::domain_error);
}

TEST_CASE("q-KZ with nonzero h-sector and generic parameters") {
    QKZParams qp = desk_params(40);
    qp.h_eigen = {cplx(1.0, 0.0), cplx(0.0, 0.0)};  // a = 1 sector values
    QkzResult res = check_qkz_n2(cplx(0.25, 0.0), cplx(0.10, 0.0), qp, 256);
    CHECK(res.residual < 1e-6);
}

TEST_CASE("q-KZ residual across parameter draws") {
    DetRng rng(4711);
    for (int t = 0; t < 3; ++t) {
        QKZParams qp = desk_params(40);
        qp.pi = DynamicalParams({cplx(1.1, 0.0) + rng.next_cplx(0.3, 0.3),
                                 cplx(-0.5, 0.0) + rng.next_cplx(0.3, 0.3)});
        // complex z-phases keep |z| fixed (real q): still in the annulus
        cplx u1(0.25, rng.next_real(-0.2, 0.2));
        cplx u2(0.10, rng.next_real(-0.2, 0.2));
        QkzResult res = check_qkz_n2(u1, u2, qp, 256);
        CHECK(res.residual < 1e-6);
        CHECK(res.ladder < 1e-8);
    }
    // different kappa (q^kappa = 0.45): thinner separating annulus,
    // so the spectral decay needs a denser grid
    {
        QKZParams qp = desk_params(40);
        qp.kappa = std::log(0.45) / std::log(0.6);
        QkzResult res =
            check_qkz_n2(cplx(0.25, 0.0), cplx(0.10, 0.0), qp, 1024);
        CHECK(res.residual < 1e-6);
        CHECK(res.ladder < 1e-6);
    }
}

TEST_CASE("pairing integrand quadrature at M = 2") {
    // shape (2,2): two t-variables; Richardson self-consistency of the
    // torus integral of Phi * omega^kappa_I * omega_J.  The contour
    // radius sits in the gap between the H-pole family (below) and the
    // omega^kappa ladder / Gamma row poles (above).
    QKZParams qp = desk_params(40);
    Partition I = Partition::parse("1212", 2), J = Partition::parse("2112", 2);
    qp.upsilon = tuned_upsilon(I.shape(), qp);
    std::vector<cplx> u = {cplx(0.10, 0.0), cplx(0.08, 0.0), cplx(0.06, 0.0),
                           cplx(0.04, 0.0)};
    auto f = pairing_integrand_on_torus(I, J, u, qp);
    // the bound evaluator agrees with the direct integrand
    {
        VariableAssignment x{u, {{cplx(0.02, 0.31), cplx(-0.04, 0.12)}}};
        cplx direct = pairing_integrand(I, J, x, qp);
        cplx bound = f({x.v[0][0], x.v[0][1]});
        CHECK(std::abs(bound - direct) / std::abs(direct) < 1e-11);
    }
    cplx a = torus_quadrature(f, 2, 64, 0.84, qp.ell);
    cplx b = torus_quadrature(f, 2, 128, 0.84, qp.ell);
    CHECK(std::isfinite(std::abs(a)));
    CHECK(std::abs(a - b) / std::abs(b) < 1e-8);
}
