#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellw/rmatrix.hpp"
#include "ellw/rng.hpp"

using namespace ellw;

namespace {
const EllipticParams P;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

DynamicalParams random_pi(int N, DetRng& rng) {
    std::vector<cplx> a(N);
    for (int j = 0; j < N; ++j)
        a[j] = cplx(1.7 * (N - j), 0.0) + rng.next_cplx(0.4, 0.25);
    return DynamicalParams(a);
}
}

TEST_CASE("entries at u = 0") {
    cplx s(1.4, 0.3);
    CHECK(std::abs(entry_b(0.0, s, P)) == 0.0);
    CHECK(std::abs(entry_bbar(0.0, P)) == 0.0);
    CHECK(rel(entry_c(0.0, s, P), 1.0) < 1e-14);
    CHECK(rel(entry_cbar(0.0, s, P), 1.0) < 1e-14);
}

TEST_CASE("entry poles") {
    CHECK_THROWS_AS(entry_b(0.3, 0.0, P), PoleError);   // [s] = 0
    CHECK_THROWS_AS(entry_bbar(-1.0, P), PoleError);    // [u+1] = 0
}

TEST_CASE("rbar at u = 0 is the permutation tensor") {
    DetRng rng(5);
    for (int N : {2, 3}) {
        DynamicalParams pi = random_pi(N, rng);
        LabeledTensor R = rbar(0.0, pi, P);
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b)
                for (int c = 1; c <= N; ++c)
                    for (int d = 1; d <= N; ++d) {
                        cplx expect = (a == d && b == c) ? 1.0 : 0.0;
                        CHECK(std::abs(R.ent(a, b, c, d) - expect) < 1e-13);
                    }
    }
}

TEST_CASE("rbar weight conservation is exact") {
    DetRng rng(9);
    DynamicalParams pi = random_pi(3, rng);
    LabeledTensor R = rbar(cplx(0.31, 0.12), pi, P);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d) {
                    bool conserving = (a == c && b == d) || (a == d && b == c);
                    if (!conserving) CHECK(R.ent(a, b, c, d) == cplx(0.0));
                }
}

TEST_CASE("N=2 block matches scalar entries") {
    DetRng rng(21);
    DynamicalParams pi = random_pi(2, rng);
    cplx u = rng.next_cplx(0.5, 0.3);
    cplx s = pi.s(1, 2);
    LabeledTensor R = rbar(u, pi, P);
    CHECK(R.ent(1, 2, 1, 2) == entry_b(u, s, P));
    CHECK(R.ent(2, 1, 2, 1) == entry_bbar(u, P));
    CHECK(R.ent(1, 2, 2, 1) == entry_c(u, s, P));
    CHECK(R.ent(2, 1, 1, 2) == entry_cbar(u, s, P));
    CHECK(R.ent(1, 1, 1, 1) == cplx(1.0));
}

TEST_CASE("transpose equals dynamical inversion") {
    // tRbar(z, Pi) = Rbar(z, Pi^{-1})
    DetRng rng(13);
    for (int N : {2, 3}) {
        DynamicalParams pi = random_pi(N, rng);
        cplx u = rng.next_cplx(0.5, 0.3);
        LabeledTensor T = rbar(u, pi, P).transposed();
        LabeledTensor Rinv = rbar(u, pi.inverse(), P);
        CHECK(T.max_abs_diff(Rinv) / Rinv.max_abs() < 1e-13);
    }
}

TEST_CASE("shifting both slot weights leaves rbar invariant") {
    // Rbar(z, Pi q^{2(h^{(1)} + h^{(2)})}) = Rbar(z, Pi) per conserved block
    DetRng rng(17);
    DynamicalParams pi = random_pi(3, rng);
    cplx u = rng.next_cplx(0.5, 0.3);
    LabeledTensor R = rbar(u, pi, P);
    for (int m1 = 1; m1 <= 3; ++m1)
        for (int m2 = 1; m2 <= 3; ++m2) {
            DynamicalParams pish =
                pi.shifted_by_weight(m1, 1.0).shifted_by_weight(m2, 1.0);
            LabeledTensor Rsh = rbar(u, pish, P);
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b) {
                    cplx rhs = R.ent(a, b, m1, m2);
                    if (rhs != cplx(0.0))
                        CHECK(rel(Rsh.ent(a, b, m1, m2), rhs) < 1e-12);
                }
        }
}

TEST_CASE("scalar factors") {
    DetRng rng(31);
    CHECK(mu_plus({cplx(0.2, 0.1)}, 3, P) == cplx(1.0));  // empty product
    for (int N : {2, 3}) {
        cplx u = rng.next_cplx(0.4, 0.2);
        CHECK(rel(mu_scalar(u, N, P) * mu_scalar(-u, N, P), 1.0) < 1e-12);
        cplx rp = rho_plus(cplx(0.23, 0.11), N, P);
        CHECK(std::abs(rp) > 0.0);
        CHECK(std::isfinite(std::abs(rp)));
    }
    // mu(u_i - u_{i+1}) = mu+(.., z_{i+1}, z_i, ..)/mu+(.., z_i, z_{i+1}, ..)
    for (int N : {2, 3}) {
        cplx u1 = rng.next_cplx(0.4, 0.2), u2 = rng.next_cplx(0.4, 0.2),
             u3 = rng.next_cplx(0.4, 0.2);
        cplx lhs = mu_scalar(u1 - u2, N, P);
        cplx rhs = mu_plus({u2, u1, u3}, N, P) / mu_plus({u1, u2, u3}, N, P);
        CHECK(rel(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("dynamical Yang-Baxter equation") {
    DetRng rng(101);
    for (int N : {2, 3}) {
        DynamicalParams pi = random_pi(N, rng);
        CHECK(check_dybe(0.0, 0.0, 0.0, pi, P) < 1e-12);
    }
    {
        DynamicalParams pi = random_pi(2, rng);
        cplx u1 = rng.next_cplx(0.4, 0.2), u2 = rng.next_cplx(0.4, 0.2);
        CHECK(check_dybe(u1, u2, u2, pi, P) < 1e-10);  // u2 = u3 coincidence
    }
    for (int N : {2, 3})
        for (int t = 0; t < 5; ++t) {
            DynamicalParams pi = random_pi(N, rng);
            cplx u1 = rng.next_cplx(0.4, 0.2), u2 = rng.next_cplx(0.4, 0.2),
                 u3 = rng.next_cplx(0.4, 0.2);
            CHECK(check_dybe(u1, u2, u3, pi, P) < 1e-9);
        }
}

TEST_CASE("unitarity") {
    DetRng rng(202);
    for (int N : {2, 3}) {
        DynamicalParams pi = random_pi(N, rng);
        CHECK(check_unitarity(0.0, pi, P) < 1e-12);  // P P = id
        for (int t = 0; t < 5; ++t) {
            cplx u = rng.next_cplx(0.4, 0.2);
            CHECK(check_unitarity(u, random_pi(N, rng), P) < 1e-9);
        }
    }
    DynamicalParams pi = random_pi(3, rng);
    cplx u = rng.next_cplx(0.4, 0.2);
    LabeledTensor prod =
        rmatrix_full(u, pi, P) * rmatrix_full(-u, pi, P).swapped();
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d)
                    if (a != c || b != d)
                        CHECK(std::abs(prod.ent(a, b, c, d)) < 1e-10);
}
