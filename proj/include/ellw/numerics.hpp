#ifndef ELLW_NUMERICS_HPP
#define ELLW_NUMERICS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ellw {

using cplx = std::complex<double>;

/// Error thrown when a denominator factor falls below the pole tolerance.
/// what() carries a label identifying the offending factor.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& label)
        : std::runtime_error("pole: " + label) {}
};

/// Ground parameters of every formula in the library.
///
/// q is the base (real in (0,1) by default), r > 1 the elliptic level
/// parameter, r_star = r - k the starred variant (k = 1, the level-1
/// convention, unless overridden).  Nomes p = q^{2r}, p* = q^{2 r*}.
/// tau = -pi i / (r log q), so that q^{2 r tau} = e^{-2 pi i} and both
/// quasi-periodicity laws of the bracket hold verbatim.
struct EllipticParams {
    cplx q{0.6, 0.0};
    double r = 6.0;
    double r_star = 5.0;
    int K = 40;                 // product truncation order
    double pole_tol = 1e-13;

    cplx log_q;                 // principal log
    cplx p, p_star, tau;

    EllipticParams() { init(); }
    EllipticParams(cplx q_, double r_, double r_star_ = -1.0, int K_ = 40)
        : q(q_), r(r_), r_star(r_star_ < 0 ? r_ - 1.0 : r_star_), K(K_) {
        init();
    }

    void init() {
        if (std::abs(q) >= 1.0 || std::abs(q) == 0.0)
            throw std::domain_error("EllipticParams: need 0 < |q| < 1");
        if (r <= 0.0 || r_star <= 0.0)
            throw std::domain_error("EllipticParams: need r > 0 and r_star > 0");
        log_q = std::log(q);
        p = qpow(2.0 * r);
        p_star = qpow(2.0 * r_star);
        if (std::abs(p) >= 1.0 || std::abs(p_star) >= 1.0)
            throw std::domain_error("EllipticParams: |p| or |p*| >= 1");
        tau = cplx(0.0, -1.0) * pi() / (r * log_q);
    }

    /// q^w with the principal branch of log q.
    cplx qpow(cplx w) const { return std::exp(w * log_q); }
    /// multiplicative coordinate z = q^{2u}
    cplx z_of_u(cplx u) const { return qpow(2.0 * u); }
    /// u = log(z)/(2 log q), principal log
    cplx u_of_z(cplx z) const { return std::log(z) / (2.0 * log_q); }

    static double pi() { return 3.14159265358979323846; }
};

// Truncated infinite products.  All products run over exponents < K;
// factors within 1e-18 of 1 are skipped (a no-op at double precision).
cplx pochhammer1(cplx x, cplx a, const EllipticParams& params);
cplx pochhammer2(cplx x, cplx a, cplx b, const EllipticParams& params);
cplx pochhammer3(cplx x, cplx a, cplx b, cplx c, const EllipticParams& params);

/// Gamma(x; a, b) = (ab/x; a, b) / (x; a, b).  Pole when the denominator
/// vanishes within pole_tol.
cplx gamma2(cplx x, cplx a, cplx b, const EllipticParams& params);
/// Gamma(x; a, b, c) = (x; a, b, c) (abc/x; a, b, c), entire in x.
cplx gamma3(cplx x, cplx a, cplx b, cplx c, const EllipticParams& params);

/// Theta_p(z) = (z; nome)(nome/z; nome)(nome; nome)
cplx theta_p(cplx z, cplx nome, const EllipticParams& params);

/// [u] = q^{u^2/r - u} Theta_p(q^{2u})
cplx bracket(cplx u, const EllipticParams& params);
/// [u]* = q^{u^2/r* - u} Theta_{p*}(q^{2u})
cplx bracket_star(cplx u, const EllipticParams& params);

/// Denominator-safe bracket: throws PoleError(label) when the theta
/// part vanishes within pole_tol.  The check is on the theta factor
/// alone, so it is insensitive to the huge prefactor magnitudes that
/// q^{u^2/r} develops at large |Im u|.
cplx bracket_nonzero(cplx u, const EllipticParams& params, const char* label);

}  // namespace ellw

#endif
