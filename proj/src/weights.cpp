#include "ellw/weights.hpp"

#include <algorithm>

#include "ellw/rmatrix.hpp"

namespace ellw {

bool VariableAssignment::matches(const LambdaShape& shape) const {
    if (N() != shape.N() || n() != shape.n()) return false;
    for (int l = 1; l < N(); ++l)
        if (static_cast<int>(v[l - 1].size()) != shape.cum(l)) return false;
    return true;
}

VariableAssignment specialize_zI(const Partition& I,
                                 const std::vector<cplx>& u) {
    if (static_cast<int>(u.size()) != I.n())
        throw std::domain_error("specialize_zI: |u| != n");
    VariableAssignment x;
    x.u = u;
    x.v.resize(I.N() - 1);
    for (int l = 1; l < I.N(); ++l) {
        int m = I.shape().cum(l);
        x.v[l - 1].resize(m);
        for (int a = 1; a <= m; ++a) x.v[l - 1][a - 1] = u[I.row(l, a) - 1];
    }
    return x;
}

cplx u_term(const Partition& I, const VariableAssignment& x,
            const DynamicalParams& pi, Convention conv,
            const EllipticParams& params) {
    if (!x.matches(I.shape()))
        throw std::domain_error("u_term: assignment does not match shape");
    const double d_same = conv == Convention::Shifted ? 0.0 : -0.5;
    const double d_below = conv == Convention::Shifted ? 0.0 : -0.5;
    const double d_above = conv == Convention::Shifted ? 1.0 : 0.5;
    const int N = I.N();
    const LambdaShape& sh = I.shape();
    cplx out = 1.0;
    cplx br1 = bracket(1.0, params);
    for (int l = 1; l <= N - 1; ++l) {
        for (int a = 1; a <= sh.cum(l); ++a) {
            int row_a = I.row(l, a);
            for (int b = 1; b <= sh.cum(l + 1); ++b) {
                int row_b = I.row(l + 1, b);
                cplx diff = x.at(l + 1, b) - x.at(l, a);
                if (row_b == row_a) {
                    int s = row_a;  // i^{(N)}_s = s
                    int C = I.dyn_shift_direct(s, l);
                    cplx shift = pi.s(I.letter(s), l + 1) - double(C);
                    cplx den = bracket_nonzero(shift, params,
                                               "u_term: [(P+h)-C]");
                    out *= bracket(diff + shift + d_same, params) * br1 / den;
                } else if (row_b > row_a) {
                    out *= bracket(diff + d_below, params);
                } else {
                    out *= bracket(diff + d_above, params);
                }
            }
            // same-column pairs a < b
            for (int b = a + 1; b <= sh.cum(l); ++b) {
                cplx diff = x.at(l, b) - x.at(l, a);
                cplx den = bracket_nonzero(diff, params,
                                           "u_term: same-column [v_b - v_a]");
                out *= bracket(diff + 1.0, params) / den;
            }
        }
    }
    return out;
}

namespace {

// iterate over all per-row permutations; calls f for each permuted copy
void for_each_row_permutation(
    const LambdaShape& shape, const VariableAssignment& x,
    const std::function<void(const VariableAssignment&)>& f) {
    std::vector<std::vector<int>> perms(shape.N() - 1);
    for (int l = 1; l < shape.N(); ++l) {
        perms[l - 1].resize(shape.cum(l));
        for (int a = 0; a < shape.cum(l); ++a) perms[l - 1][a] = a;
    }
    VariableAssignment y = x;
    std::function<void(int)> rec = [&](int l) {
        if (l == shape.N()) {
            f(y);
            return;
        }
        std::vector<int>& p = perms[l - 1];
        std::sort(p.begin(), p.end());
        do {
            for (size_t a = 0; a < p.size(); ++a)
                y.v[l - 1][a] = x.v[l - 1][p[a]];
            rec(l + 1);
        } while (std::next_permutation(p.begin(), p.end()));
    };
    rec(1);
}

}  // namespace

cplx symmetrize(const std::function<cplx(const VariableAssignment&)>& f,
                const LambdaShape& shape, const VariableAssignment& x) {
    cplx sum = 0.0;
    for_each_row_permutation(shape, x,
                             [&](const VariableAssignment& y) { sum += f(y); });
    return sum;
}

cplx w_entire(const Partition& I, const VariableAssignment& x,
              const DynamicalParams& pi, Convention conv,
              const EllipticParams& params) {
    return symmetrize(
        [&](const VariableAssignment& y) {
            return u_term(I, y, pi, conv, params);
        },
        I.shape(), x);
}

cplx h_lambda(const LambdaShape& shape, const VariableAssignment& x,
              Convention conv, const EllipticParams& params) {
    const double d = conv == Convention::Shifted ? 1.0 : 0.5;
    cplx out = 1.0;
    for (int l = 1; l <= shape.N() - 1; ++l)
        for (int a = 1; a <= shape.cum(l); ++a)
            for (int b = 1; b <= shape.cum(l + 1); ++b)
                out *= bracket(x.at(l + 1, b) - x.at(l, a) + d, params);
    return out;
}

cplx w_tilde(const Partition& I, const VariableAssignment& x,
             const DynamicalParams& pi, Convention conv,
             const EllipticParams& params) {
    // per-factor pole check; the product itself may be legitimately tiny
    const double d = conv == Convention::Shifted ? 1.0 : 0.5;
    const LambdaShape& sh = I.shape();
    cplx h = 1.0;
    for (int l = 1; l <= sh.N() - 1; ++l)
        for (int a = 1; a <= sh.cum(l); ++a)
            for (int b = 1; b <= sh.cum(l + 1); ++b)
                h *= bracket_nonzero(x.at(l + 1, b) - x.at(l, a) + d, params,
                                     "w_tilde: H_lambda factor");
    return w_entire(I, x, pi, conv, params) / h;
}

cplx omega(const Partition& I, const VariableAssignment& x,
           const DynamicalParams& pi, const EllipticParams& params) {
    return mu_plus(x.u, I.N(), params) *
           w_tilde(I, x, pi, Convention::Unshifted, params);
}

cplx qp_w_factor_r(const LambdaShape& shape, int l) {
    int lp = l + 1 <= shape.N() ? shape.cum(l + 1) : 0;
    int lm = l - 1 >= 0 ? shape.cum(l - 1) : 0;
    return ((lp + lm) % 2 == 0) ? cplx(1.0) : cplx(-1.0);
}

cplx qp_w_factor_rtau(const LambdaShape& shape, const VariableAssignment& x,
                      const DynamicalParams& pi, int l, int a,
                      const EllipticParams& params) {
    const double PI = EllipticParams::pi();
    int lp = shape.cum(l + 1);
    int lm = shape.cum(l - 1);
    cplx base = -std::exp(cplx(0.0, -PI) * params.tau);
    cplx factor = std::pow(base, lp + lm);
    cplx lin = double(lp + lm) * x.at(l, a);
    for (int b = 1; b <= lp; ++b) lin -= x.at(l + 1, b);
    for (int c = 1; c <= lm; ++c) lin -= x.at(l - 1, c);
    lin -= pi.s(l, l + 1) + double(shape.lambda[l]);  // (P+h)_{l,l+1} + lambda_{l+1}
    return factor * std::exp(cplx(0.0, -2.0 * PI) / params.r * lin);
}

cplx qp_wtilde_factor_rtau(const LambdaShape& shape,
                           const DynamicalParams& pi, int l,
                           const EllipticParams& params) {
    const double PI = EllipticParams::pi();
    cplx lin = pi.s(l, l + 1) - double(shape.lambda[l - 1]);
    return std::exp(cplx(0.0, 2.0 * PI) / params.r * lin);
}

}  // namespace ellw
