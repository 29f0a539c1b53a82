#ifndef ELLW_RMATRIX_HPP
#define ELLW_RMATRIX_HPP

#include <vector>

#include "ellw/dynamical.hpp"
#include "ellw/numerics.hpp"
#include "ellw/tensor.hpp"

namespace ellw {

// Entries of the bare R-matrix.  u is the additive spectral parameter
// (z = q^{2u}), s a dynamical difference (P+h)_{j1,j2}.
cplx entry_b(cplx u, cplx s, const EllipticParams& params);
cplx entry_bbar(cplx u, const EllipticParams& params);
cplx entry_c(cplx u, cplx s, const EllipticParams& params);
cplx entry_cbar(cplx u, cplx s, const EllipticParams& params);

/// Bare R-matrix Rbar(z, Pi) on C^N (x) C^N.  Weight conservation holds
/// by construction; diagonal (j,j;j,j) entries are 1.
LabeledTensor rbar(cplx u, const DynamicalParams& pi,
                   const EllipticParams& params);

/// rho^+(z) = q^{-(N-1)/N} z^{(N-1)/(rN)} * ratio of {.} = (.; p, q^{2N})
/// products.  Exposed for completeness; it has a pole at u = 0 and does
/// not satisfy the inversion relation numerically (see mu_scalar).
cplx rho_plus(cplx u, int N, const EllipticParams& params);

/// mu(z): the scalar of the vertex-operator R = mu(z) Rbar(z, Pi).
/// Satisfies mu(u) mu(-u) = 1, making R exactly unitary.
cplx mu_scalar(cplx u, int N, const EllipticParams& params);

/// mu^+(z_1..z_n) = prod_{k<l} (-)^{(N-1)/N} z_k^{r*(N-1)/(rN)}
///   Gamma(q^2 z_k/z_l; p, q^{2N}) / Gamma(q^{2N} z_k/z_l; p, q^{2N}).
/// (-1)^c is the principal branch e^{i pi c}.
cplx mu_plus(const std::vector<cplx>& u, int N, const EllipticParams& params);

/// Full R = mu(z) Rbar(z, Pi) used by the q-KZ equation.
LabeledTensor rmatrix_full(cplx u, const DynamicalParams& pi,
                           const EllipticParams& params);

/// Embed a two-site tensor into slots (i, j) of (C^N)^{(x)n}, with the
/// dynamical argument shifted blockwise: for each basis word, Pi is
/// shifted by +1 along every spectator letter listed in shift_slots.
MultiSiteOp embed_two_site(
    int n, int slot_i, int slot_j, cplx u,
    const DynamicalParams& pi, const std::vector<int>& shift_slots,
    const EllipticParams& params,
    bool full_r = false);

/// Max-norm residual of the dynamical Yang-Baxter equation on
/// (C^N)^{(x)3}, normalized by the max entry of the RHS.
double check_dybe(cplx u1, cplx u2, cplx u3, const DynamicalParams& pi,
                  const EllipticParams& params);

/// Residual of R(z, Pi) R^{(21)}(1/z, Pi) = id with R = mu Rbar.
double check_unitarity(cplx u, const DynamicalParams& pi,
                       const EllipticParams& params);

}  // namespace ellw

#endif
