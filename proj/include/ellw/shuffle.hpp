#ifndef ELLW_SHUFFLE_HPP
#define ELLW_SHUFFLE_HPP

#include <functional>

#include "ellw/weights.hpp"

namespace ellw {

/// A graded symmetric-function handle: shape, convention, carried word
/// (dynamical bookkeeping of the star product) and an evaluator over
/// (VariableAssignment, DynamicalParams).  Evaluators read both the
/// t-rows and the z-row from the assignment.
struct WeightFunctionHandle {
    LambdaShape shape;
    Convention conv = Convention::Shifted;
    std::vector<int> word;
    std::function<cplx(const VariableAssignment&, const DynamicalParams&)> eval;
    /// evaluator of the entire numerator H_lambda * F, usable where
    /// H_lambda vanishes (wheel configurations)
    std::function<cplx(const VariableAssignment&, const DynamicalParams&)>
        entire;

    cplx operator()(const VariableAssignment& x,
                    const DynamicalParams& pi) const {
        return eval(x, pi);
    }
};

WeightFunctionHandle make_wtilde_handle(const Partition& I, Convention conv,
                                        const EllipticParams& params);
WeightFunctionHandle make_omega_handle(const Partition& I,
                                       const EllipticParams& params);
/// The 0-shape constant 1 (two-sided star unit).
WeightFunctionHandle unit_handle(int N, Convention conv);

/// Xi(t, t', z, z') of the SHIFTED star product:
///   prod_l prod_a ( prod_b [v'^{(l+1)}_b - v^{(l)}_a]/[same + 1]
///                   prod_c [v'^{(l)}_c - v^{(l)}_a + 1]/[same] ).
cplx xi_factor(const VariableAssignment& x, const VariableAssignment& xp,
               const EllipticParams& params);

/// Xi-tilde of the omega star product (UNSHIFTED): mu^+_{m,n}(z, z')
/// times the same product with row offsets -1/2 and +1/2.
cplx xi_tilde_factor(const VariableAssignment& x, const VariableAssignment& xp,
                     const EllipticParams& params);

/// F * G on shape lambda + lambda'.  The merged assignment splits per
/// row into F's first lambda^{(l)} entries and G's rest (and likewise
/// the z-row at F.n()); F sees its dynamical parameters shifted by -1
/// along G's word; the product is symmetrized over each merged row and
/// divided by prod lambda^{(l)}! lambda'^{(l)}!.
WeightFunctionHandle star(const WeightFunctionHandle& F,
                          const WeightFunctionHandle& G,
                          const EllipticParams& params);
/// Same with Xi-tilde (UNSHIFTED omega version, Appendix C).
WeightFunctionHandle star_omega(const WeightFunctionHandle& F,
                                const WeightFunctionHandle& G,
                                const EllipticParams& params);

/// Relative residual of (omega_I * omega_I') = omega_{I+I'} at the
/// given merged point.
double check_omega_shuffle(const Partition& I, const Partition& Ip,
                           const VariableAssignment& x_merged,
                           const DynamicalParams& pi_merged,
                           const EllipticParams& params);

/// Max over wheel configurations of |H_lambda * F| (via the handle's
/// entire evaluator), normalized by a nearby generic value.  Wheel
/// configurations: l in 1..N-1 with lambda^{(l)} >= 2, eps = +-1 with
/// l + eps in 1..N (the neighbor row may be the z-row, t^{(N)} = z),
/// v^{(l)}_a = v^{(l+eps)}_c + eps, v^{(l)}_b = v^{(l+eps)}_c; free
/// coordinates are re-drawn `trials` times per configuration.
double check_wheel(const WeightFunctionHandle& F, const DynamicalParams& pi,
                   const EllipticParams& params, int trials = 3,
                   uint64_t seed = 12345);

bool has_wheel(const LambdaShape& shape);

}  // namespace ellw

#endif
