#include "ellw/rmatrix.hpp"

namespace ellw {

namespace {

/// {x} = (x; p, q^{2N})
cplx curly(cplx x, int N, const EllipticParams& params) {
    return pochhammer2(x, params.p, params.qpow(2.0 * N), params);
}

}  // namespace

cplx entry_b(cplx u, cplx s, const EllipticParams& params) {
    cplx den_s = bracket_nonzero(s, params, "b: [s]");
    cplx den_u = bracket_nonzero(u + 1.0, params, "b: [u+1]");
    return bracket(s + 1.0, params) * bracket(s - 1.0, params) *
           bracket(u, params) / (den_s * den_s * den_u);
}

cplx entry_bbar(cplx u, const EllipticParams& params) {
    cplx den = bracket_nonzero(u + 1.0, params, "bbar: [u+1]");
    return bracket(u, params) / den;
}

cplx entry_c(cplx u, cplx s, const EllipticParams& params) {
    cplx den_s = bracket_nonzero(s, params, "c: [s]");
    cplx den_u = bracket_nonzero(u + 1.0, params, "c: [u+1]");
    return bracket(1.0, params) * bracket(s + u, params) / (den_s * den_u);
}

cplx entry_cbar(cplx u, cplx s, const EllipticParams& params) {
    cplx den_s = bracket_nonzero(s, params, "cbar: [s]");
    cplx den_u = bracket_nonzero(u + 1.0, params, "cbar: [u+1]");
    return bracket(1.0, params) * bracket(s - u, params) / (den_s * den_u);
}

LabeledTensor rbar(cplx u, const DynamicalParams& pi,
                   const EllipticParams& params) {
    int N = pi.N();
    LabeledTensor R(N);
    for (int j = 1; j <= N; ++j) R.ent(j, j, j, j) = 1.0;
    for (int j1 = 1; j1 <= N; ++j1)
        for (int j2 = j1 + 1; j2 <= N; ++j2) {
            cplx s = pi.s(j1, j2);
            R.ent(j1, j2, j1, j2) = entry_b(u, s, params);
            R.ent(j2, j1, j2, j1) = entry_bbar(u, params);
            R.ent(j1, j2, j2, j1) = entry_c(u, s, params);
            R.ent(j2, j1, j1, j2) = entry_cbar(u, s, params);
        }
    return R;
}

cplx rho_plus(cplx u, int N, const EllipticParams& params) {
    cplx z = params.z_of_u(u);
    cplx q2 = params.q * params.q;
    cplx q2N = params.qpow(2.0 * N);
    cplx p = params.p;
    cplx num = curly(q2N / q2 * z, N, params) * curly(q2 * z, N, params) *
               curly(p * q2N / z, N, params) * curly(p / z, N, params);
    cplx den = curly(q2N * z, N, params) * curly(z, N, params) *
               curly(p * q2N / q2 / z, N, params) * curly(p * q2 / z, N, params);
    if (std::abs(den) < params.pole_tol) throw PoleError("rho_plus denominator");
    double c = double(N - 1) / N;
    return params.qpow(-c) * params.qpow(2.0 * u * c / params.r) * num / den;
}

cplx mu_scalar(cplx u, int N, const EllipticParams& params) {
    cplx z = params.z_of_u(u);
    cplx q2 = params.q * params.q;
    cplx q2N = params.qpow(2.0 * N);
    cplx p = params.p;
    cplx num = curly(p * q2N / q2 * z, N, params) * curly(q2 * z, N, params) *
               curly(p / z, N, params) * curly(q2N / z, N, params);
    cplx den = curly(p * z, N, params) * curly(q2N * z, N, params) *
               curly(p * q2N / q2 / z, N, params) * curly(q2 / z, N, params);
    if (std::abs(den) < params.pole_tol) throw PoleError("mu denominator");
    double c = (params.r - 1.0) / params.r * double(N - 1) / N;
    return params.qpow(-2.0 * u * c) * num / den;
}

cplx mu_plus(const std::vector<cplx>& u, int N, const EllipticParams& params) {
    cplx q2N = params.qpow(2.0 * N);
    double c = double(N - 1) / N;
    cplx minus_pow = std::exp(cplx(0.0, EllipticParams::pi() * c));
    cplx out = 1.0;
    int n = static_cast<int>(u.size());
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            cplx g = gamma2(params.qpow(2.0 + 2.0 * (u[k] - u[l])), params.p,
                            q2N, params) /
                     gamma2(params.qpow(2.0 * N + 2.0 * (u[k] - u[l])),
                            params.p, q2N, params);
            out *= minus_pow *
                   params.qpow(2.0 * u[k] * params.r_star * c / params.r) * g;
        }
    return out;
}

LabeledTensor rmatrix_full(cplx u, const DynamicalParams& pi,
                           const EllipticParams& params) {
    LabeledTensor R = rbar(u, pi, params);
    R *= mu_scalar(u, pi.N(), params);
    return R;
}

MultiSiteOp embed_two_site(int n, int slot_i, int slot_j, cplx u,
                           const DynamicalParams& pi,
                           const std::vector<int>& shift_slots,
                           const EllipticParams& params, bool full_r) {
    int N = pi.N();
    MultiSiteOp op(N, n);
    // Two-site blocks depend on the spectator letters only through the
    // shifted Pi; cache per shift signature by direct recomputation over
    // spectator words (desk scale: N^n small).
    int dim = op.dim();
    for (int col = 0; col < dim; ++col) {
        std::vector<int> w = op.word_of(col);
        DynamicalParams shifted = pi;
        for (int s : shift_slots) shifted.a[w[s - 1] - 1] += 1.0;
        LabeledTensor R = full_r ? rmatrix_full(u, shifted, params)
                                 : rbar(u, shifted, params);
        int c1 = w[slot_i - 1], c2 = w[slot_j - 1];
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                cplx v = R.ent(a, b, c1, c2);
                if (v == cplx(0.0)) continue;
                std::vector<int> w2 = w;
                w2[slot_i - 1] = a;
                w2[slot_j - 1] = b;
                op.at(op.index_of(w2), col) += v;
            }
    }
    return op;
}

double check_dybe(cplx u1, cplx u2, cplx u3, const DynamicalParams& pi,
                  const EllipticParams& params) {
    // R^{(12)}(u1-u2, Pi+h^{(3)}) R^{(13)}(u1-u3, Pi) R^{(23)}(u2-u3, Pi+h^{(1)})
    //   = R^{(23)}(u2-u3, Pi) R^{(13)}(u1-u3, Pi+h^{(2)}) R^{(12)}(u1-u2, Pi)
    const int n = 3;
    MultiSiteOp L = embed_two_site(n, 1, 2, u1 - u2, pi, {3}, params) *
                    embed_two_site(n, 1, 3, u1 - u3, pi, {}, params) *
                    embed_two_site(n, 2, 3, u2 - u3, pi, {1}, params);
    MultiSiteOp R = embed_two_site(n, 2, 3, u2 - u3, pi, {}, params) *
                    embed_two_site(n, 1, 3, u1 - u3, pi, {2}, params) *
                    embed_two_site(n, 1, 2, u1 - u2, pi, {}, params);
    double scale = R.max_abs();
    return L.max_abs_diff(R) / (scale > 0.0 ? scale : 1.0);
}

double check_unitarity(cplx u, const DynamicalParams& pi,
                       const EllipticParams& params) {
    LabeledTensor R = rmatrix_full(u, pi, params);
    LabeledTensor Rswap = rmatrix_full(-u, pi, params).swapped();
    LabeledTensor prod = R * Rswap;
    LabeledTensor id = LabeledTensor::identity(pi.N());
    double scale = prod.max_abs();
    return prod.max_abs_diff(id) / (scale > 0.0 ? scale : 1.0);
}

}  // namespace ellw
