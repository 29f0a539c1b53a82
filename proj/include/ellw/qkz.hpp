#ifndef ELLW_QKZ_HPP
#define ELLW_QKZ_HPP

#include <functional>

#include "ellw/weights.hpp"

namespace ellw {

/// Thrown when the quadrature grid appears to straddle a pole.
class ContourError : public std::runtime_error {
public:
    explicit ContourError(const std::string& msg)
        : std::runtime_error("contour: " + msg) {}
};

/// Parameters of the trace / q-KZ machinery.
///
/// The operator-valued exponents of the trace factor are evaluated on
/// scalar sector data: `pi` holds the (P+h)_{eps_j} eigenvalues and
/// `h_eigen` the h_{eps_j} eigenvalues (h_{alpha_l} and h_{epsbar_N}
/// are formed from differences / the mean).  The dynamical shift of the
/// q-KZ equation moves both vectors in lockstep.  `upsilon` is the
/// auxiliary dynamical set of the paired weight function.
struct QKZParams {
    EllipticParams ell;
    double kappa = 1.0;
    int sector = 0;  // a in {0..N-1}
    DynamicalParams pi;
    DynamicalParams upsilon;
    std::vector<cplx> h_eigen;

    QKZParams() = default;
    QKZParams(EllipticParams e, double kappa_, DynamicalParams pi_)
        : ell(std::move(e)), kappa(kappa_), pi(std::move(pi_)) {
        upsilon = pi;
        h_eigen.assign(pi.N(), cplx(0.0));
        validate();
    }
    int N() const { return pi.N(); }
    cplx q_kappa() const { return ell.qpow(kappa); }
    void validate() const {
        if (std::abs(q_kappa()) >= 1.0)
            throw std::domain_error("QKZParams: |q^kappa| >= 1");
    }

    /// elliptic parameters with nome p replaced by q^kappa (r -> kappa/2)
    EllipticParams ell_kappa() const {
        double rk = kappa / 2.0;
        double rsk = rk > 1.0 ? rk - 1.0 : rk;
        return EllipticParams(ell.q, rk, rsk, ell.K);
    }
};

/// lambda_1 = ... = lambda_N (the trace exists only at weight zero).
bool zero_weight(const Partition& I);

/// The scalarized trace factor Phi(t, z) for the shape carried by x,
/// exactly as displayed (so the n = 0 degenerate value is C_0 = 1).
cplx phi_trace(const VariableAssignment& x, const QKZParams& qp);

/// The sector-dependent zero-mode constant of the evaluated trace:
/// q^{-kappa D(a)/1 + kappa D(h) - (a, 2 rho)/r} with D(v) =
/// (sum v^2 - (sum v)^2/N + (1 - 1/N) sum v)/2 (the a-part divided by
/// r).  Fixed by requiring the trace cyclicity property to hold; the
/// q-KZ assembly multiplies F = norm * integral(Phi omega).
cplx trace_sector_normalization(const QKZParams& qp);

/// Phi * omega^kappa_I(t,z,Upsilon) * omega_J(t,z,Pi).
cplx pairing_integrand(const Partition& I, const Partition& J,
                       const VariableAssignment& x, const QKZParams& qp);

/// The same integrand bound to a fixed z-row, as a function of the
/// torus variables (u-space, row-major over l then a).  The
/// t-independent factors (the z-pair triple-Gamma ladder of Phi and
/// both mu^+ prefactors) are computed once.
std::function<cplx(const std::vector<cplx>&)> pairing_integrand_on_torus(
    const Partition& I, const Partition& J, const std::vector<cplx>& u,
    const QKZParams& qp);

/// Upsilon differences that make the pairing integrand single-valued
/// in every t^{(l)}_a at h = 0: Upsilon_{l,l+1} = lambda_l -
/// (kappa/2) lambda^{(l-1)} / r.
DynamicalParams tuned_upsilon(const LambdaShape& shape, const QKZParams& qp);

/// Trapezoidal rule over M in {1,2} circles |t| = radius; t^{(l)}_a =
/// radius e^{i theta}.  f receives the u-space coordinates of the torus
/// variables.  The second grid is offset half a step so t_1 != t_2.
/// A magnitude spike > 1e8 x median raises ContourError.
cplx torus_quadrature(const std::function<cplx(const std::vector<cplx>&)>& f,
                      int M, int npoints, double radius,
                      const EllipticParams& params);

struct QkzResult {
    double residual;       // max-norm over components, normalized
    double ladder;         // |change| of F components, npoints vs 2x
    double radius_shifted; // contour used for the kappa-shifted side
};

/// Direct numerical check of the face-type q-KZ equation at N = 2,
/// n = 2, i = 1: F(q^kappa z_1, z_2; Pi) against mu Rbar, the Gamma_1
/// shift (both the (P+h)- and h-vectors move) and quadrature of
/// Phi x omega on separating contours.
QkzResult check_qkz_n2(cplx u1, cplx u2, const QKZParams& qp,
                       int npoints = 512);

}  // namespace ellw

#endif
