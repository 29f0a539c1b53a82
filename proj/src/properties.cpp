#include "ellw/properties.hpp"

#include <algorithm>
#include <cmath>

#include "ellw/rmatrix.hpp"

namespace ellw {

namespace {

// solve A X = B in place (Gaussian elimination, partial pivoting);
// A, B are dim x dim row-major
void solve_inplace(std::vector<cplx>& A, std::vector<cplx>& B, int dim) {
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim; ++r)
            if (std::abs(A[size_t(r) * dim + col]) >
                std::abs(A[size_t(piv) * dim + col]))
                piv = r;
        if (std::abs(A[size_t(piv) * dim + col]) < 1e-300)
            throw std::runtime_error("solve: singular matrix");
        if (piv != col)
            for (int j = 0; j < dim; ++j) {
                std::swap(A[size_t(piv) * dim + j], A[size_t(col) * dim + j]);
                std::swap(B[size_t(piv) * dim + j], B[size_t(col) * dim + j]);
            }
        cplx d = A[size_t(col) * dim + col];
        for (int r = 0; r < dim; ++r) {
            if (r == col) continue;
            cplx f = A[size_t(r) * dim + col] / d;
            if (f == cplx(0.0)) continue;
            for (int j = 0; j < dim; ++j) {
                A[size_t(r) * dim + j] -= f * A[size_t(col) * dim + j];
                B[size_t(r) * dim + j] -= f * B[size_t(col) * dim + j];
            }
        }
    }
    for (int r = 0; r < dim; ++r) {
        cplx d = A[size_t(r) * dim + r];
        for (int j = 0; j < dim; ++j) B[size_t(r) * dim + j] /= d;
    }
}

std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = s[t[i] - 1];
    return out;
}

std::vector<int> invert(const std::vector<int>& s) {
    std::vector<int> out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[s[i] - 1] = static_cast<int>(i) + 1;
    return out;
}

}  // namespace

std::vector<int> identity_perm(int n) {
    std::vector<int> s(n);
    for (int i = 1; i <= n; ++i) s[i - 1] = i;
    return s;
}

std::vector<int> longest_element(int n) {
    std::vector<int> s(n);
    for (int i = 1; i <= n; ++i) s[i - 1] = n + 1 - i;
    return s;
}

WMatrix w_matrix(const std::vector<int>& sigma, const LambdaShape& shape,
                 const std::vector<cplx>& u, const DynamicalParams& pi,
                 const EllipticParams& params) {
    WMatrix W;
    W.shape = shape;
    W.ordering = enumerate_partitions(shape);
    int d = W.dim();
    W.m.assign(d, std::vector<cplx>(d, cplx(0.0)));
    for (int i = 0; i < d; ++i) {
        VariableAssignment zi = specialize_zI(W.ordering[i], u);
        for (int j = 0; j < d; ++j) {
            auto [Jp, up] = apply_sigma(sigma, W.ordering[j], u);
            VariableAssignment x{up, zi.v};
            W.m[i][j] = w_tilde(Jp, x, pi, Convention::Shifted, params);
        }
    }
    return W;
}

double check_transition(int i, const Partition& I, const VariableAssignment& x,
                        const std::vector<cplx>& u, const DynamicalParams& pi,
                        const EllipticParams& params) {
    int n = I.n();
    if (i < 1 || i >= n) throw std::domain_error("check_transition: bad i");
    int mi = I.letter(i), mi1 = I.letter(i + 1);

    std::vector<int> wsw = I.word();
    std::swap(wsw[i - 1], wsw[i]);
    Partition Isw(wsw, I.N());
    std::vector<cplx> usw = u;
    std::swap(usw[i - 1], usw[i]);
    cplx lhs = w_tilde(Isw, VariableAssignment{usw, x.v}, pi,
                       Convention::Shifted, params);

    DynamicalParams pish = pi;
    for (int j = i; j <= n; ++j) pish.a[I.letter(j) - 1] -= 1.0;
    LabeledTensor R = rbar(u[i - 1] - u[i], pish, params);

    cplx rhs = 0.0;
    for (auto [c, d] : {std::pair{mi, mi1}, std::pair{mi1, mi}}) {
        cplx coeff = R.sub_sup(mi, mi1, c, d);
        if (coeff == cplx(0.0)) continue;
        std::vector<int> w2 = I.word();
        w2[i - 1] = c;
        w2[i] = d;
        rhs += coeff * w_tilde(Partition(w2, I.N()), VariableAssignment{u, x.v},
                               pi, Convention::Shifted, params);
        if (mi == mi1) break;  // single diagonal term
    }
    return std::abs(lhs - rhs) / std::abs(rhs);
}

std::vector<int> reduced_word(const std::vector<int>& sigma,
                              const std::vector<int>& sigma_p) {
    std::vector<int> w = compose(invert(sigma_p), sigma);
    int n = static_cast<int>(w.size());
    std::vector<int> ks;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 1; k < n; ++k) {
            if (w[k - 1] > w[k]) {
                ks.push_back(k);
                std::swap(w[k - 1], w[k]);
                changed = true;
            }
        }
    }
    return ks;
}

MultiSiteOp rcal_with_word(const std::vector<int>& sigma,
                           const std::vector<int>& sigma_p,
                           const std::vector<int>& positions,
                           const std::vector<cplx>& u,
                           const DynamicalParams& pi,
                           const EllipticParams& params) {
    int n = static_cast<int>(sigma.size());
    int N = pi.N();
    MultiSiteOp M = MultiSiteOp::identity(N, n);
    std::vector<int> sc = sigma;
    for (int k : positions) {
        MultiSiteOp E(N, n);
        int zi = sc[k - 1], zi1 = sc[k];  // index-space positions at k, k+1
        cplx uarg = u[zi1 - 1] - u[zi - 1];
        for (int row = 0; row < E.dim(); ++row) {
            std::vector<int> w = E.word_of(row);
            int alpha = w[zi - 1], beta = w[zi1 - 1];
            DynamicalParams pish = pi;
            for (int j = 1; j <= k - 1; ++j) pish.a[w[sc[j - 1] - 1] - 1] += 1.0;
            LabeledTensor R = rbar(uarg, pish, params);
            for (auto [a, b] : {std::pair{alpha, beta}, std::pair{beta, alpha}}) {
                cplx coeff = R.sub_sup(beta, alpha, a, b);
                if (coeff == cplx(0.0)) continue;
                std::vector<int> w2 = w;
                w2[zi1 - 1] = a;
                w2[zi - 1] = b;
                E.at(row, E.index_of(w2)) += coeff;
                if (alpha == beta) break;
            }
        }
        M = M * E;
        std::swap(sc[k - 1], sc[k]);
    }
    if (sc != sigma_p) throw std::logic_error("rcal: word does not reach sigma'");
    return M;
}

MultiSiteOp rcal(const std::vector<int>& sigma, const std::vector<int>& sigma_p,
                 const std::vector<cplx>& u, const DynamicalParams& pi,
                 const EllipticParams& params) {
    return rcal_with_word(sigma, sigma_p, reduced_word(sigma, sigma_p), u, pi,
                          params);
}

cplx q_func(const Partition& I, const std::vector<cplx>& u,
            const EllipticParams& params) {
    cplx out = 1.0;
    for (int k = 1; k <= I.N(); ++k)
        for (int l = k + 1; l <= I.N(); ++l)
            for (int a : I.color_class(k))
                for (int b : I.color_class(l))
                    out *= bracket(u[b - 1] - u[a - 1] + 1.0, params);
    return out;
}

cplx r_func(const Partition& I, const std::vector<cplx>& u,
            const EllipticParams& params) {
    cplx out = 1.0;
    for (int k = 1; k <= I.N(); ++k)
        for (int l = k + 1; l <= I.N(); ++l)
            for (int a : I.color_class(k))
                for (int b : I.color_class(l))
                    out *= bracket(u[b - 1] - u[a - 1], params);
    return out;
}

cplx s_func(const Partition& I, const std::vector<cplx>& u,
            const EllipticParams& params) {
    cplx out = 1.0;
    for (int k = 1; k <= I.N(); ++k)
        for (int l = k + 1; l <= I.N(); ++l)
            for (int a : I.color_class(k))
                for (int b : I.color_class(k))
                    out *= bracket(u[a - 1] - u[b - 1] + 1.0, params);
    for (int k = 1; k <= I.N() - 1; ++k)
        for (int l = 1; l <= I.N() - 1; ++l) {
            if (k == l) continue;
            for (int a : I.color_class(k))
                for (int b : I.color_class(l))
                    out *= bracket(u[a - 1] - u[b - 1] + 1.0, params);
        }
    return out;
}

double check_orthogonality(const Partition& J, const Partition& K,
                           const std::vector<cplx>& u,
                           const DynamicalParams& pi,
                           const EllipticParams& params) {
    if (!(J.shape() == K.shape()))
        throw std::domain_error("check_orthogonality: shape mismatch");
    const LambdaShape& sh = J.shape();
    int n = J.n();

    // Pi^{-1} q^{2 sum_j <epsbar_{mu_j}, h>} with the lambda-associated weight
    DynamicalParams pi2 = pi.inverse();
    for (int l = 1; l <= sh.N(); ++l) pi2.a[l - 1] += double(sh.lambda[l - 1]);

    std::vector<int> s0 = longest_element(n);
    auto [K0, u0] = apply_sigma(s0, K, u);

    cplx sum = 0.0;
    double max_term = 0.0;
    for (const Partition& I : enumerate_partitions(sh)) {
        VariableAssignment zi = specialize_zI(I, u);
        cplx w1 = w_entire(J, VariableAssignment{u, zi.v}, pi2,
                           Convention::Shifted, params);
        cplx w2 = w_entire(K0, VariableAssignment{u0, zi.v}, pi,
                           Convention::Shifted, params);
        cplx qv = q_func(I, u, params);
        cplx rv = r_func(I, u, params);
        cplx sv = s_func(I, u, params);
        if (!std::isfinite(std::abs(qv * rv * sv)) ||
            std::abs(qv * rv * sv) == 0.0)
            throw PoleError("orthogonality: Q R S vanishes");
        cplx term = w1 * w2 / (qv * rv * sv * sv);
        sum += term;
        max_term = std::max(max_term, std::abs(term));
    }
    cplx delta = (J == K) ? cplx(1.0) : cplx(0.0);
    return std::abs(sum - delta) / (max_term > 0.0 ? max_term : 1.0);
}

double check_wmatrix_rcal(const std::vector<int>& sigma,
                          const std::vector<int>& sigma_p,
                          const LambdaShape& shape,
                          const std::vector<cplx>& u,
                          const DynamicalParams& pi,
                          const EllipticParams& params) {
    WMatrix Ws = w_matrix(sigma, shape, u, pi, params);
    WMatrix Wsp = w_matrix(sigma_p, shape, u, pi, params);
    int d = Ws.dim();
    std::vector<cplx> A(size_t(d) * d), B(size_t(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            A[size_t(i) * d + j] = Wsp.m[i][j];
            B[size_t(i) * d + j] = Ws.m[i][j];
        }
    solve_inplace(A, B, d);  // B := Wsp^{-1} Ws

    DynamicalParams pish = pi;
    for (int l = 1; l <= shape.N(); ++l)
        pish.a[l - 1] -= double(shape.lambda[l - 1]);
    MultiSiteOp R = rcal(sigma, sigma_p, u, pish, params);
    // restrict to the shape block, transposed
    double num = 0.0, den = 0.0;
    for (int i = 0; i < d; ++i) {
        int ri = R.index_of(Ws.ordering[i].word());
        for (int j = 0; j < d; ++j) {
            int rj = R.index_of(Ws.ordering[j].word());
            cplx target = R.at(rj, ri);  // transpose
            num = std::max(num, std::abs(B[size_t(i) * d + j] - target));
            den = std::max(den, std::abs(target));
        }
    }
    return num / (den > 0.0 ? den : 1.0);
}

double check_rcal_transpose(const std::vector<int>& sigma,
                            const std::vector<int>& sigma_p,
                            const LambdaShape& shape,
                            const std::vector<cplx>& u,
                            const DynamicalParams& pi,
                            const EllipticParams& params) {
    DynamicalParams pish = pi;
    for (int l = 1; l <= shape.N(); ++l)
        pish.a[l - 1] -= double(shape.lambda[l - 1]);
    MultiSiteOp Rsh = rcal(sigma, sigma_p, u, pish, params);
    MultiSiteOp Rinv = rcal(sigma, sigma_p, u, pi.inverse(), params);
    auto parts = enumerate_partitions(shape);
    double num = 0.0, den = 0.0;
    for (const Partition& I : parts) {
        int ri = Rsh.index_of(I.word());
        for (const Partition& J : parts) {
            int rj = Rsh.index_of(J.word());
            cplx lhs = Rsh.at(rj, ri);  // transpose entry (I,J)
            cplx rhs = Rinv.at(ri, rj);
            num = std::max(num, std::abs(lhs - rhs));
            den = std::max(den, std::abs(rhs));
        }
    }
    return num / (den > 0.0 ? den : 1.0);
}

}  // namespace ellw
