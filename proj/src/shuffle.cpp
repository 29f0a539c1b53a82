#include "ellw/shuffle.hpp"

#include <algorithm>

#include "ellw/rmatrix.hpp"
#include "ellw/rng.hpp"

namespace ellw {

WeightFunctionHandle make_wtilde_handle(const Partition& I, Convention conv,
                                        const EllipticParams& params) {
    WeightFunctionHandle h;
    h.shape = I.shape();
    h.conv = conv;
    h.word = I.word();
    h.eval = [I, conv, params](const VariableAssignment& x,
                               const DynamicalParams& pi) {
        return w_tilde(I, x, pi, conv, params);
    };
    h.entire = [I, conv, params](const VariableAssignment& x,
                                 const DynamicalParams& pi) {
        return w_entire(I, x, pi, conv, params);
    };
    return h;
}

WeightFunctionHandle make_omega_handle(const Partition& I,
                                       const EllipticParams& params) {
    WeightFunctionHandle h;
    h.shape = I.shape();
    h.conv = Convention::Unshifted;
    h.word = I.word();
    h.eval = [I, params](const VariableAssignment& x,
                         const DynamicalParams& pi) {
        return omega(I, x, pi, params);
    };
    h.entire = [I, params](const VariableAssignment& x,
                           const DynamicalParams& pi) {
        return mu_plus(x.u, I.N(), params) *
               w_entire(I, x, pi, Convention::Unshifted, params);
    };
    return h;
}

WeightFunctionHandle unit_handle(int N, Convention conv) {
    WeightFunctionHandle h;
    h.shape = LambdaShape(std::vector<int>(N, 0));
    h.conv = conv;
    h.eval = [](const VariableAssignment&, const DynamicalParams&) {
        return cplx(1.0);
    };
    h.entire = h.eval;
    return h;
}

namespace {

cplx xi_product(const VariableAssignment& x, const VariableAssignment& xp,
                double row_num_off, double row_den_off,
                const EllipticParams& params) {
    int N = x.N();
    cplx out = 1.0;
    for (int l = 1; l <= N - 1; ++l) {
        int la = static_cast<int>(x.v[l - 1].size());
        for (int a = 1; a <= la; ++a) {
            cplx va = x.at(l, a);
            int lpb = (l + 1 == N) ? xp.n()
                                   : static_cast<int>(xp.v[l].size());
            for (int b = 1; b <= lpb; ++b) {
                cplx diff = xp.at(l + 1, b) - va;
                cplx den = bracket_nonzero(diff + row_den_off, params,
                                           "xi: row denominator");
                out *= bracket(diff + row_num_off, params) / den;
            }
            int lpc = static_cast<int>(xp.v[l - 1].size());
            for (int c = 1; c <= lpc; ++c) {
                cplx diff = xp.at(l, c) - va;
                cplx den = bracket_nonzero(diff, params,
                                           "xi: column denominator");
                out *= bracket(diff + 1.0, params) / den;
            }
        }
    }
    return out;
}

}  // namespace

cplx xi_factor(const VariableAssignment& x, const VariableAssignment& xp,
               const EllipticParams& params) {
    return xi_product(x, xp, 0.0, 1.0, params);
}

cplx xi_tilde_factor(const VariableAssignment& x, const VariableAssignment& xp,
                     const EllipticParams& params) {
    cplx mu = 1.0;
    int N = x.N();
    double c = double(N - 1) / N;
    cplx minus_pow = std::exp(cplx(0.0, EllipticParams::pi() * c));
    cplx q2N = params.qpow(2.0 * N);
    // cross factor of mu^+: earlier-over-later arguments, so that
    // mu^+(z u z') = mu^+(z) mu^+(z') mu^+_{m,n}(z, z')
    for (cplx uk : x.u)
        for (cplx ul : xp.u) {
            cplx g = gamma2(params.qpow(2.0 + 2.0 * (uk - ul)), params.p, q2N,
                            params) /
                     gamma2(params.qpow(2.0 * N + 2.0 * (uk - ul)), params.p,
                            q2N, params);
            mu *= minus_pow *
                  params.qpow(2.0 * uk * params.r_star * c / params.r) * g;
        }
    return mu * xi_product(x, xp, -0.5, 0.5, params);
}

namespace {

void split_assignment(const VariableAssignment& y, const LambdaShape& shF,
                      int m, int Nrank, VariableAssignment& xf,
                      VariableAssignment& xg) {
    xf.u.assign(y.u.begin(), y.u.begin() + m);
    xg.u.assign(y.u.begin() + m, y.u.end());
    xf.v.resize(Nrank - 1);
    xg.v.resize(Nrank - 1);
    for (int l = 1; l < Nrank; ++l) {
        int mf = shF.cum(l);
        xf.v[l - 1].assign(y.v[l - 1].begin(), y.v[l - 1].begin() + mf);
        xg.v[l - 1].assign(y.v[l - 1].begin() + mf, y.v[l - 1].end());
    }
}

/// leftover of H_merged Xi after the Xi row denominators cancel against
/// the FG cross part of H_merged: the Xi row numerators, the GF cross
/// factors of H_merged, and the Xi column ratio (finite at wheels).
cplx star_entire_cross(const VariableAssignment& xf,
                       const VariableAssignment& xg, double row_num_off,
                       double h_off, const EllipticParams& params) {
    int N = xf.N();
    cplx out = 1.0;
    for (int l = 1; l <= N - 1; ++l) {
        int la = static_cast<int>(xf.v[l - 1].size());
        int lag = static_cast<int>(xg.v[l - 1].size());
        int lbg = (l + 1 == N) ? xg.n() : static_cast<int>(xg.v[l].size());
        int lbf = (l + 1 == N) ? xf.n() : static_cast<int>(xf.v[l].size());
        for (int a = 1; a <= la; ++a) {
            cplx va = xf.at(l, a);
            for (int b = 1; b <= lbg; ++b)
                out *= bracket(xg.at(l + 1, b) - va + row_num_off, params);
            for (int c = 1; c <= lag; ++c) {
                cplx diff = xg.at(l, c) - va;
                cplx den = bracket_nonzero(diff, params,
                                           "star entire: column denominator");
                out *= bracket(diff + 1.0, params) / den;
            }
        }
        for (int a = 1; a <= lag; ++a)
            for (int b = 1; b <= lbf; ++b)
                out *= bracket(xf.at(l + 1, b) - xg.at(l, a) + h_off, params);
    }
    return out;
}

WeightFunctionHandle star_impl(const WeightFunctionHandle& F,
                               const WeightFunctionHandle& G, bool omega_form,
                               const EllipticParams& params) {
    if (F.shape.N() != G.shape.N())
        throw std::domain_error("star: rank mismatch");
    if (F.conv != G.conv)
        throw std::domain_error("star: convention mismatch");
    WeightFunctionHandle out;
    std::vector<int> lam(F.shape.N());
    for (int l = 1; l <= F.shape.N(); ++l)
        lam[l - 1] = F.shape.lambda[l - 1] + G.shape.lambda[l - 1];
    out.shape = LambdaShape(lam);
    out.conv = F.conv;
    out.word = F.word;
    out.word.insert(out.word.end(), G.word.begin(), G.word.end());

    LambdaShape shF = F.shape, shG = G.shape;
    std::vector<int> gword = G.word;
    int m = shF.n();
    LambdaShape merged = out.shape;
    double norm = 1.0;
    for (int l = 1; l < merged.N(); ++l) {
        for (int j = 2; j <= shF.cum(l); ++j) norm *= j;
        for (int j = 2; j <= shG.cum(l); ++j) norm *= j;
    }
    const double row_num_off = omega_form ? -0.5 : 0.0;
    const double h_off = omega_form ? 0.5 : 1.0;

    auto evF = F.eval, evG = G.eval;
    out.eval = [=](const VariableAssignment& x, const DynamicalParams& pi) {
        if (!x.matches(merged))
            throw std::domain_error("star: assignment/shape mismatch");
        DynamicalParams piF = pi;
        for (int mu : gword) piF.a[mu - 1] -= 1.0;
        auto term = [&](const VariableAssignment& y) {
            VariableAssignment xf, xg;
            split_assignment(y, shF, m, merged.N(), xf, xg);
            cplx xi = omega_form ? xi_tilde_factor(xf, xg, params)
                                 : xi_factor(xf, xg, params);
            return evF(xf, piF) * evG(xg, pi) * xi;
        };
        return symmetrize(term, merged, x) / norm;
    };

    if (F.entire && G.entire) {
        auto enF = F.entire, enG = G.entire;
        out.entire = [=](const VariableAssignment& x,
                         const DynamicalParams& pi) {
            DynamicalParams piF = pi;
            for (int mu : gword) piF.a[mu - 1] -= 1.0;
            auto term = [&](const VariableAssignment& y) {
                VariableAssignment xf, xg;
                split_assignment(y, shF, m, merged.N(), xf, xg);
                cplx cross =
                    star_entire_cross(xf, xg, row_num_off, h_off, params);
                if (omega_form) {
                    // mu+_{m,n} part of Xi-tilde
                    int N = merged.N();
                    double c = double(N - 1) / N;
                    cplx minus_pow =
                        std::exp(cplx(0.0, EllipticParams::pi() * c));
                    cplx q2N = params.qpow(2.0 * N);
                    for (cplx uk : xf.u)
                        for (cplx ul : xg.u)
                            cross *= minus_pow *
                                     params.qpow(2.0 * uk * params.r_star * c /
                                                 params.r) *
                                     gamma2(params.qpow(2.0 + 2.0 * (uk - ul)),
                                            params.p, q2N, params) /
                                     gamma2(params.qpow(2.0 * N +
                                                        2.0 * (uk - ul)),
                                            params.p, q2N, params);
                }
                return enF(xf, piF) * enG(xg, pi) * cross;
            };
            return symmetrize(term, merged, x) / norm;
        };
    }
    return out;
}

}  // namespace

WeightFunctionHandle star(const WeightFunctionHandle& F,
                          const WeightFunctionHandle& G,
                          const EllipticParams& params) {
    if (F.conv != Convention::Shifted || G.conv != Convention::Shifted)
        throw std::domain_error("star: SHIFTED handles expected");
    return star_impl(F, G, false, params);
}

WeightFunctionHandle star_omega(const WeightFunctionHandle& F,
                                const WeightFunctionHandle& G,
                                const EllipticParams& params) {
    if (F.conv != Convention::Unshifted || G.conv != Convention::Unshifted)
        throw std::domain_error("star_omega: UNSHIFTED handles expected");
    return star_impl(F, G, true, params);
}

double check_omega_shuffle(const Partition& I, const Partition& Ip,
                           const VariableAssignment& x_merged,
                           const DynamicalParams& pi_merged,
                           const EllipticParams& params) {
    WeightFunctionHandle prod = star_omega(make_omega_handle(I, params),
                                           make_omega_handle(Ip, params),
                                           params);
    cplx lhs = prod(x_merged, pi_merged);
    cplx rhs = omega(concat(I, Ip), x_merged, pi_merged, params);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

bool has_wheel(const LambdaShape& shape) {
    int N = shape.N();
    auto cum = [&](int l) { return l == N ? shape.n() : shape.cum(l); };
    for (int l = 1; l <= N - 1; ++l)
        for (int eps : {1, -1}) {
            if (l + eps < 1 || l + eps > N) continue;
            if (cum(l) >= 2 && cum(l + eps) >= 1) return true;
        }
    return false;
}

double check_wheel(const WeightFunctionHandle& F, const DynamicalParams& pi,
                   const EllipticParams& /*params*/, int trials,
                   uint64_t seed) {
    if (!F.entire)
        throw std::domain_error("check_wheel: handle has no entire evaluator");
    const LambdaShape& sh = F.shape;
    int N = sh.N();
    auto cum = [&](int l) { return l == N ? sh.n() : sh.cum(l); };
    DetRng rng(seed);

    auto random_assignment = [&]() {
        VariableAssignment x;
        x.u.resize(sh.n());
        for (auto& z : x.u) z = rng.next_cplx(0.6, 0.35);
        x.v.resize(N - 1);
        for (int l = 1; l < N; ++l) {
            x.v[l - 1].resize(sh.cum(l));
            for (auto& z : x.v[l - 1]) z = rng.next_cplx(0.6, 0.35);
        }
        return x;
    };
    auto coord = [&](VariableAssignment& x, int l, int a) -> cplx& {
        return l == N ? x.u[a - 1] : x.v[l - 1][a - 1];
    };

    double worst = 0.0;
    for (int l = 1; l <= N - 1; ++l)
        for (int eps : {1, -1}) {
            if (l + eps < 1 || l + eps > N) continue;
            if (cum(l) < 2 || cum(l + eps) < 1) continue;
            for (int a = 1; a <= cum(l); ++a)
                for (int b = 1; b <= cum(l); ++b) {
                    if (a == b) continue;
                    for (int c = 1; c <= cum(l + eps); ++c)
                        for (int t = 0; t < trials; ++t) {
                            VariableAssignment x = random_assignment();
                            cplx vc = coord(x, l + eps, c);
                            coord(x, l, a) = vc + double(eps);
                            coord(x, l, b) = vc;
                            double val = std::abs(F.entire(x, pi));
                            // generic scale: nudge the pinned coordinates
                            VariableAssignment y = x;
                            coord(y, l, a) += rng.next_cplx(0.3, 0.2) + 0.17;
                            coord(y, l, b) += rng.next_cplx(0.3, 0.2) + 0.11;
                            double scale = std::abs(F.entire(y, pi));
                            if (scale > 0.0)
                                worst = std::max(worst, val / scale);
                        }
                }
        }
    return worst;
}

}  // namespace ellw
