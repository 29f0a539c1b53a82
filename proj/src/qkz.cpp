#include "ellw/qkz.hpp"

#include <algorithm>
#include <numeric>

#include "ellw/rmatrix.hpp"

namespace ellw {

bool zero_weight(const Partition& I) {
    const auto& lam = I.shape().lambda;
    for (int x : lam)
        if (x != lam[0]) return false;
    return true;
}

namespace {

struct PhiScalars {
    int N, n;
    std::vector<int> lam, cum;        // lambda_l, lambda^{(l)}
    std::vector<cplx> h_alpha;        // h_{alpha_l}, l = 1..N-1
    cplx h_epsN;                      // h_{epsbar_N}
    std::vector<cplx> ph_alpha;       // (P+h)_{alpha_l}
    cplx ph_epsN;                     // (P+h)_{epsbar_N}
};

PhiScalars phi_scalars(const VariableAssignment& x, const QKZParams& qp) {
    PhiScalars s;
    s.N = x.N();
    s.n = x.n();
    s.cum.resize(s.N + 1);
    s.cum[0] = 0;
    for (int l = 1; l < s.N; ++l)
        s.cum[l] = static_cast<int>(x.v[l - 1].size());
    s.cum[s.N] = s.n;
    s.lam.resize(s.N);
    for (int l = 1; l <= s.N; ++l) s.lam[l - 1] = s.cum[l] - s.cum[l - 1];

    const auto& h = qp.h_eigen;
    const auto& a = qp.pi.a;
    cplx hmean = std::accumulate(h.begin(), h.end(), cplx(0.0)) / double(s.N);
    cplx amean = std::accumulate(a.begin(), a.end(), cplx(0.0)) / double(s.N);
    s.h_alpha.resize(s.N - 1);
    s.ph_alpha.resize(s.N - 1);
    for (int l = 1; l < s.N; ++l) {
        s.h_alpha[l - 1] = h[l - 1] - h[l];
        s.ph_alpha[l - 1] = a[l - 1] - a[l];
    }
    s.h_epsN = h[s.N - 1] - hmean;
    s.ph_epsN = a[s.N - 1] - amean;
    return s;
}

/// t-independent part: C_n, operator-power z factors and the z-pair
/// triple-Gamma ratios.
cplx phi_const(const PhiScalars& s, const std::vector<cplx>& u,
               const QKZParams& qp) {
    const EllipticParams& pr = qp.ell;
    cplx q2 = pr.q * pr.q;
    cplx q2N = pr.qpow(2.0 * s.N);
    cplx qk = pr.qpow(qp.kappa);
    cplx p = pr.p;

    int sum_cum = 0, half_pairs = 0;
    for (int l = 1; l < s.N; ++l) {
        sum_cum += s.cum[l];
        half_pairs += s.cum[l] * (s.cum[l] - 1) / 2;
    }
    cplx Cn = ((s.n * s.cum[s.N - 1]) % 2 == 0) ? 1.0 : -1.0;
    Cn *= (half_pairs % 2 == 0 ? 1.0 : -1.0) *
          pr.qpow(double(half_pairs) * (pr.r - 1.0) / pr.r);
    cplx f1 = pochhammer1(p, p, pr) / pochhammer1(q2, p, pr) *
              gamma2(p, p, qk, pr) / gamma2(q2, p, qk, pr);
    cplx f2 = pochhammer2(q2N, p, q2N, pr) / pochhammer2(q2, p, q2N, pr) *
              gamma3(q2, p, qk, q2N, pr) / gamma3(q2N, p, qk, q2N, pr);
    for (int i = 0; i < sum_cum; ++i) Cn *= f1;
    for (int i = 0; i < s.n; ++i) Cn *= f2;

    cplx out = Cn;
    out *= std::exp(cplx(0.0, EllipticParams::pi()) * double(s.n) * s.h_epsN);
    for (int l = 1; l < s.N; ++l)
        out *= pr.qpow(double((s.N - l) * s.cum[l]) *
                       (s.ph_alpha[l - 1] - 1.0) / pr.r);
    cplx Ez = -double(s.cum[s.N - 1]) - s.h_epsN +
              (s.ph_epsN + double(s.cum[s.N - 1])) / pr.r;
    cplx usum = std::accumulate(u.begin(), u.end(), cplx(0.0));
    out *= pr.qpow(2.0 * usum * Ez);
    for (int k = 0; k < s.n; ++k)
        for (int l = 0; l < s.n; ++l) {
            if (k == l) continue;
            cplx d = 2.0 * (u[k] - u[l]);
            out *= gamma3(pr.qpow(2.0 + d), p, qk, q2N, pr) /
                   gamma3(pr.qpow(2.0 * s.N + d), p, qk, q2N, pr);
        }
    return out;
}

/// t-dependent part: operator-power t factors, row Gamma ratios against
/// the next column, same-column Gamma ratios.
cplx phi_tpart(const PhiScalars& s, const VariableAssignment& x,
               const QKZParams& qp) {
    const EllipticParams& pr = qp.ell;
    cplx qk = pr.qpow(qp.kappa);
    cplx p = pr.p, ps = pr.p_star;
    cplx out = 1.0;
    for (int l = 1; l < s.N; ++l) {
        cplx Et = double(s.lam[l - 1]) - s.h_alpha[l - 1] +
                  (s.ph_alpha[l - 1] - double(s.cum[l])) / pr.r;
        for (int a = 1; a <= s.cum[l]; ++a) {
            cplx va = x.at(l, a);
            out *= pr.qpow(2.0 * va * Et);
            for (int b = 1; b <= s.cum[l + 1]; ++b) {
                cplx d = 1.0 + 2.0 * (va - x.at(l + 1, b));
                out *= gamma2(pr.qpow(d), p, qk, pr) /
                       gamma2(ps * pr.qpow(d), p, qk, pr);
            }
            for (int b = a + 1; b <= s.cum[l]; ++b) {
                cplx d = 2.0 * (va - x.at(l, b));
                out *= gamma2(ps * pr.qpow(d), p, qk, pr) *
                       gamma2(ps * pr.qpow(-d), p, qk, pr) /
                       (gamma2(pr.qpow(d), p, qk, pr) *
                        gamma2(pr.qpow(-d), p, qk, pr));
            }
        }
    }
    return out;
}

}  // namespace

cplx phi_trace(const VariableAssignment& x, const QKZParams& qp) {
    PhiScalars s = phi_scalars(x, qp);
    return phi_const(s, x.u, qp) * phi_tpart(s, x, qp);
}

cplx trace_sector_normalization(const QKZParams& qp) {
    auto quad = [&](const std::vector<cplx>& v) {
        int N = static_cast<int>(v.size());
        cplx A = std::accumulate(v.begin(), v.end(), cplx(0.0));
        cplx Q = 0.0;
        for (const cplx& x : v) Q += x * x;
        return (Q - A * A / double(N) + (1.0 - 1.0 / N) * A) / 2.0;
    };
    const auto& a = qp.pi.a;
    int N = qp.N();
    cplx rho2 = 0.0;
    for (int j = 1; j <= N; ++j) rho2 += a[j - 1] * double(N - 2 * j + 1);
    cplx expo = -qp.kappa * quad(a) / qp.ell.r + qp.kappa * quad(qp.h_eigen) -
                rho2 / qp.ell.r;
    return qp.ell.qpow(expo);
}

cplx pairing_integrand(const Partition& I, const Partition& J,
                       const VariableAssignment& x, const QKZParams& qp) {
    EllipticParams ek = qp.ell_kappa();
    cplx wk = omega(I, x, qp.upsilon, ek);
    cplx w = omega(J, x, qp.pi, qp.ell);
    return phi_trace(x, qp) * wk * w;
}

std::function<cplx(const std::vector<cplx>&)> pairing_integrand_on_torus(
    const Partition& I, const Partition& J, const std::vector<cplx>& u,
    const QKZParams& qp) {
    if (!(I.shape() == J.shape()))
        throw std::domain_error("pairing: shape mismatch");
    const LambdaShape sh = I.shape();
    EllipticParams ek = qp.ell_kappa();

    VariableAssignment proto;
    proto.u = u;
    proto.v.resize(sh.N() - 1);
    for (int l = 1; l < sh.N(); ++l) proto.v[l - 1].resize(sh.cum(l));
    PhiScalars scal = phi_scalars(proto, qp);
    cplx cpart = phi_const(scal, u, qp) * mu_plus(u, sh.N(), ek) *
                 mu_plus(u, sh.N(), qp.ell);

    Partition Icap = I, Jcap = J;
    return [=](const std::vector<cplx>& v) {
        VariableAssignment x = proto;
        size_t k = 0;
        for (int l = 1; l < sh.N(); ++l)
            for (int a = 1; a <= sh.cum(l); ++a) x.v[l - 1][a - 1] = v[k++];
        return cpart * phi_tpart(scal, x, qp) *
               w_tilde(Icap, x, qp.upsilon, Convention::Unshifted, ek) *
               w_tilde(Jcap, x, qp.pi, Convention::Unshifted, qp.ell);
    };
}

DynamicalParams tuned_upsilon(const LambdaShape& shape, const QKZParams& qp) {
    int N = shape.N();
    std::vector<cplx> ups(N, cplx(0.0));
    // prescribe differences Upsilon_{l,l+1}; anchor ups[N-1] = 0
    for (int l = N - 1; l >= 1; --l) {
        cplx diff = double(shape.lambda[l - 1]) -
                    (qp.kappa / 2.0) * double(shape.cum(l - 1)) / qp.ell.r;
        ups[l - 1] = ups[l] + diff;
    }
    return DynamicalParams(ups);
}

cplx torus_quadrature(const std::function<cplx(const std::vector<cplx>&)>& f,
                      int M, int npoints, double radius,
                      const EllipticParams& params) {
    if (M < 1 || M > 2) throw std::domain_error("torus_quadrature: M in {1,2}");
    const double TWO_PI = 2.0 * EllipticParams::pi();
    std::vector<double> mags;
    mags.reserve(size_t(npoints) * (M == 2 ? npoints : 1));
    cplx sum = 0.0;
    if (M == 1) {
        for (int j = 0; j < npoints; ++j) {
            cplx t = radius * std::exp(cplx(0.0, TWO_PI * j / npoints));
            cplx val = f({params.u_of_z(t)});
            mags.push_back(std::abs(val));
            sum += val;
        }
        sum /= double(npoints);
    } else {
        for (int j = 0; j < npoints; ++j) {
            cplx t1 = radius * std::exp(cplx(0.0, TWO_PI * j / npoints));
            for (int k = 0; k < npoints; ++k) {
                cplx t2 = radius *
                          std::exp(cplx(0.0, TWO_PI * (k + 0.5) / npoints));
                cplx val = f({params.u_of_z(t1), params.u_of_z(t2)});
                mags.push_back(std::abs(val));
                sum += val;
            }
        }
        sum /= double(npoints) * double(npoints);
    }
    std::vector<double> sorted = mags;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2,
                     sorted.end());
    double median = sorted[sorted.size() / 2];
    double peak = *std::max_element(mags.begin(), mags.end());
    if (median > 0.0 && peak > 1e8 * median)
        throw ContourError("magnitude spike on quadrature grid");
    return sum;
}

namespace {

/// F_w(z_1, z_2) for N = 2 words, by quadrature over |t| = radius.
cplx f_component(const std::vector<int>& word, cplx u1, cplx u2,
                 const QKZParams& qp, int npoints, double radius) {
    Partition I(word, 2);
    std::vector<cplx> u{u1, u2};
    PhiScalars s;
    bool scal_ready = false;
    cplx cpart;
    auto integrand = [&](const std::vector<cplx>& v) {
        VariableAssignment x{u, {{v[0]}}};
        if (!scal_ready) {
            s = phi_scalars(x, qp);
            cpart = phi_const(s, u, qp) * trace_sector_normalization(qp);
            scal_ready = true;
        }
        return cpart * phi_tpart(s, x, qp) * omega(I, x, qp.pi, qp.ell);
    };
    return torus_quadrature(integrand, 1, npoints, radius, qp.ell);
}

/// separating contour radius for the configuration (|z1|, |z2|) with the
/// first argument already kappa-shifted by `shift1` in u-space
double separating_radius(const QKZParams& qp, cplx u1, cplx u2) {
    double q = std::abs(qp.ell.q);
    double z1 = std::abs(qp.ell.z_of_u(u1));
    double z2 = std::abs(qp.ell.z_of_u(u2));
    double lo = std::max(q * z1, q * z2);
    double hi = std::min(z1 / q, z2 / q);
    if (lo >= hi)
        throw ContourError("no separating annulus for quadrature");
    return std::sqrt(lo * hi);
}

}  // namespace

QkzResult check_qkz_n2(cplx u1, cplx u2, const QKZParams& qp, int npoints) {
    if (qp.N() != 2) throw std::domain_error("check_qkz_n2: N = 2 only");
    const EllipticParams& pr = qp.ell;
    double pm = std::abs(pr.p);
    for (cplx uu : {u1, u2, u1 + qp.kappa / 2.0}) {
        double zm = std::abs(pr.z_of_u(uu));
        if (zm <= pm || zm >= 1.0)
            throw std::domain_error("check_qkz_n2: need |p| < |z| < 1");
    }

    const std::vector<std::vector<int>> words{{1, 2}, {2, 1}};
    double rad_shift = separating_radius(qp, u1 + qp.kappa / 2.0, u2);
    double rad_plain = separating_radius(qp, u1, u2);
    double zmin = std::min(std::abs(pr.z_of_u(u1)), std::abs(pr.z_of_u(u2)));
    if (zmin / std::abs(pr.q) > 1.0) rad_plain = 1.0;  // unit torus separates

    auto assemble = [&](int np) {
        std::vector<cplx> lhs(2), rhs(2);
        cplx uarg = -qp.kappa / 2.0 + u2 - u1;
        cplx mus = mu_scalar(uarg, 2, pr);
        LabeledTensor R = rbar(uarg, qp.pi, pr);
        for (int wi = 0; wi < 2; ++wi) {
            const auto& w = words[wi];
            lhs[wi] = f_component(w, u1 + qp.kappa / 2.0, u2, qp, np,
                                  rad_shift);
            cplx acc = 0.0;
            for (const auto& wp : words) {
                cplx coeff = R.sub_sup(w[1], w[0], wp[1], wp[0]);
                if (coeff == cplx(0.0)) continue;
                QKZParams qps = qp;
                qps.pi.a[wp[0] - 1] -= 1.0;       // Gamma_1: (P+h) shift
                qps.h_eigen[wp[0] - 1] -= 1.0;    // ... and the h sector
                acc += mus * coeff *
                       f_component(wp, u1, u2, qps, np, rad_plain);
            }
            rhs[wi] = acc;
        }
        return std::pair{lhs, rhs};
    };

    auto [lhs, rhs] = assemble(npoints);
    auto [lhs2, rhs2] = assemble(2 * npoints);
    double num = 0.0, den = 0.0, ladder = 0.0;
    for (int wi = 0; wi < 2; ++wi) {
        num = std::max(num, std::abs(lhs[wi] - rhs[wi]));
        den = std::max(den, std::abs(rhs[wi]));
        ladder = std::max({ladder, std::abs(lhs[wi] - lhs2[wi]),
                           std::abs(rhs[wi] - rhs2[wi])});
    }
    return QkzResult{num / (den > 0.0 ? den : 1.0), ladder, rad_shift};
}

}  // namespace ellw
