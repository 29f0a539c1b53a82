#ifndef ELLW_WEIGHTS_HPP
#define ELLW_WEIGHTS_HPP

#include <functional>
#include <vector>

#include "ellw/dynamical.hpp"
#include "ellw/numerics.hpp"
#include "ellw/partitions.hpp"

namespace ellw {

/// SHIFTED is the convention of the properties sections; UNSHIFTED the
/// one the weight functions are first derived in.  SHIFTED at v equals
/// UNSHIFTED at v^{(l)} + l/2 (all rows, including v^{(N)} = u).
enum class Convention { Shifted, Unshifted };

/// u-space variables: u_1..u_n plus the ragged rows v^{(l)}_a
/// (l = 1..N-1, a = 1..lambda^{(l)}); v^{(N)}_a := u_a by convention.
struct VariableAssignment {
    std::vector<cplx> u;
    std::vector<std::vector<cplx>> v;  // rows 1..N-1

    VariableAssignment() = default;
    VariableAssignment(std::vector<cplx> u_, std::vector<std::vector<cplx>> v_)
        : u(std::move(u_)), v(std::move(v_)) {}

    int n() const { return static_cast<int>(u.size()); }
    int N() const { return static_cast<int>(v.size()) + 1; }
    cplx at(int l, int a) const {
        return l == N() ? u[a - 1] : v[l - 1][a - 1];
    }
    cplx& vref(int l, int a) { return v[l - 1][a - 1]; }

    bool matches(const LambdaShape& shape) const;
};

/// t = z_I specialization: v^{(l)}_a = u_{i^{(l)}_a}.
VariableAssignment specialize_zI(const Partition& I,
                                 const std::vector<cplx>& u);

/// The (unsymmetrized) product U_I.  Offsets per convention:
///   same-row  [v^{(l+1)}_b - v^{(l)}_a + (P+h)_{mu_s,l+1} - C + d][1] /
///             [(P+h)_{mu_s,l+1} - C]           d = 0 | -1/2
///   below-row [v^{(l+1)}_b - v^{(l)}_a + d]    d = 0 | -1/2
///   above-row [v^{(l+1)}_b - v^{(l)}_a + d]    d = 1 | +1/2
///   same-col  [v^{(l)}_b - v^{(l)}_a + 1] / [v^{(l)}_b - v^{(l)}_a]
cplx u_term(const Partition& I, const VariableAssignment& x,
            const DynamicalParams& pi, Convention conv,
            const EllipticParams& params);

/// Sym over each v-row: plain sum over all per-row permutations of f,
/// no 1/lambda! normalization.
cplx symmetrize(const std::function<cplx(const VariableAssignment&)>& f,
                const LambdaShape& shape, const VariableAssignment& x);

/// W_I = Sym U_I
cplx w_entire(const Partition& I, const VariableAssignment& x,
              const DynamicalParams& pi, Convention conv,
              const EllipticParams& params);

/// H_lambda = prod over rows of [v^{(l+1)}_b - v^{(l)}_a + d],
/// d = 1 (shifted) or 1/2 (unshifted)
cplx h_lambda(const LambdaShape& shape, const VariableAssignment& x,
              Convention conv, const EllipticParams& params);

/// Wtilde_I = W_I / H_lambda
cplx w_tilde(const Partition& I, const VariableAssignment& x,
             const DynamicalParams& pi, Convention conv,
             const EllipticParams& params);

/// omega_I = mu^+(z) Wtilde_I, UNSHIFTED convention.
cplx omega(const Partition& I, const VariableAssignment& x,
           const DynamicalParams& pi, const EllipticParams& params);

/// Predicted quasi-periodicity multipliers (SHIFTED convention),
/// lambda^{(0)} = 0 and lambda^{(N)} = n at the boundary.
/// W_I under v^{(l)}_a -> v^{(l)}_a + r:
cplx qp_w_factor_r(const LambdaShape& shape, int l);
/// W_I under v^{(l)}_a -> v^{(l)}_a + r tau:
cplx qp_w_factor_rtau(const LambdaShape& shape, const VariableAssignment& x,
                      const DynamicalParams& pi, int l, int a,
                      const EllipticParams& params);
/// Wtilde_I under v^{(l)}_a -> v^{(l)}_a + r tau:
cplx qp_wtilde_factor_rtau(const LambdaShape& shape,
                           const DynamicalParams& pi, int l,
                           const EllipticParams& params);

}  // namespace ellw

#endif
