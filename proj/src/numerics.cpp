#include "ellw/numerics.hpp"

namespace ellw {

namespace {
constexpr double kSkipTol = 1e-18;  // |x a^n| below this: factor == 1 in double
}

cplx pochhammer1(cplx x, cplx a, const EllipticParams& params) {
    if (std::abs(a) >= 1.0) throw std::domain_error("pochhammer1: |a| >= 1");
    cplx out = 1.0, xa = x;
    for (int n = 0; n < params.K; ++n) {
        out *= (1.0 - xa);
        xa *= a;
        if (std::abs(xa) < kSkipTol) break;
    }
    return out;
}

cplx pochhammer2(cplx x, cplx a, cplx b, const EllipticParams& params) {
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw std::domain_error("pochhammer2: base modulus >= 1");
    cplx out = 1.0, xa = x;
    for (int m = 0; m < params.K; ++m) {
        if (std::abs(xa) < kSkipTol) break;
        out *= pochhammer1(xa, b, params);
        xa *= a;
    }
    return out;
}

cplx pochhammer3(cplx x, cplx a, cplx b, cplx c, const EllipticParams& params) {
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0 || std::abs(c) >= 1.0)
        throw std::domain_error("pochhammer3: base modulus >= 1");
    cplx out = 1.0, xa = x;
    for (int l = 0; l < params.K; ++l) {
        if (std::abs(xa) < kSkipTol) break;
        out *= pochhammer2(xa, b, c, params);
        xa *= a;
    }
    return out;
}

cplx gamma2(cplx x, cplx a, cplx b, const EllipticParams& params) {
    cplx den = pochhammer2(x, a, b, params);
    if (std::abs(den) < params.pole_tol) {
        // identify the vanishing factor 1 - x a^m b^n
        int mbest = 0, nbest = 0;
        double best = 1e300;
        cplx xa = x;
        for (int m = 0; m < params.K; ++m) {
            cplx xab = xa;
            for (int n = 0; n < params.K; ++n) {
                double d = std::abs(1.0 - xab);
                if (d < best) {
                    best = d;
                    mbest = m;
                    nbest = n;
                }
                xab *= b;
                if (std::abs(xab) < 1e-18) break;
            }
            xa *= a;
            if (std::abs(xa) < 1e-18) break;
        }
        throw PoleError("gamma2 denominator factor (m,n) = (" +
                        std::to_string(mbest) + "," + std::to_string(nbest) +
                        ")");
    }
    return pochhammer2(a * b / x, a, b, params) / den;
}

cplx gamma3(cplx x, cplx a, cplx b, cplx c, const EllipticParams& params) {
    return pochhammer3(x, a, b, c, params) *
           pochhammer3(a * b * c / x, a, b, c, params);
}

cplx theta_p(cplx z, cplx nome, const EllipticParams& params) {
    if (std::abs(z) == 0.0) throw std::domain_error("theta_p: z = 0");
    return pochhammer1(z, nome, params) * pochhammer1(nome / z, nome, params) *
           pochhammer1(nome, nome, params);
}

cplx bracket(cplx u, const EllipticParams& params) {
    return params.qpow(u * u / params.r - u) *
           theta_p(params.z_of_u(u), params.p, params);
}

cplx bracket_star(cplx u, const EllipticParams& params) {
    return params.qpow(u * u / params.r_star - u) *
           theta_p(params.z_of_u(u), params.p_star, params);
}

cplx bracket_nonzero(cplx u, const EllipticParams& params, const char* label) {
    cplx theta = theta_p(params.z_of_u(u), params.p, params);
    if (std::abs(theta) < params.pole_tol) throw PoleError(label);
    return params.qpow(u * u / params.r - u) * theta;
}

}  // namespace ellw
