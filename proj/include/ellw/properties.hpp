#ifndef ELLW_PROPERTIES_HPP
#define ELLW_PROPERTIES_HPP

#include <vector>

#include "ellw/tensor.hpp"
#include "ellw/weights.hpp"

namespace ellw {

/// Square matrix over the fixed enumeration of I_lambda; entries
/// M[I][J] = Wtilde_{sigma,J}(z_I, z, Pi) (SHIFTED convention).
struct WMatrix {
    LambdaShape shape;
    std::vector<Partition> ordering;         // enumerate_partitions(shape)
    std::vector<std::vector<cplx>> m;        // row I, column J

    int dim() const { return static_cast<int>(ordering.size()); }
};

/// Wtilde_{sigma,J}(t, z, Pi) = Wtilde_{sigma^{-1}(J)}(t, sigma(z), Pi)
/// evaluated at t = z_I for every I, J of the shape.
WMatrix w_matrix(const std::vector<int>& sigma, const LambdaShape& shape,
                 const std::vector<cplx>& u, const DynamicalParams& pi,
                 const EllipticParams& params);

/// Relative residual of the transition property at adjacent index i:
/// the swapped-word function at swapped z against the Rbar-combination.
double check_transition(int i, const Partition& I, const VariableAssignment& x,
                        const std::vector<cplx>& u, const DynamicalParams& pi,
                        const EllipticParams& params);

/// R^{(sigma,sigma')}(z, Pi) on (C^N)^{(x)n}, built from Rbar factors
/// along a reduced word of sigma'^{-1} sigma.  The default reduced word
/// is the descent-greedy one; pass an explicit word to test
/// independence.
MultiSiteOp rcal(const std::vector<int>& sigma, const std::vector<int>& sigma_p,
                 const std::vector<cplx>& u, const DynamicalParams& pi,
                 const EllipticParams& params);
MultiSiteOp rcal_with_word(const std::vector<int>& sigma,
                           const std::vector<int>& sigma_p,
                           const std::vector<int>& positions,
                           const std::vector<cplx>& u,
                           const DynamicalParams& pi,
                           const EllipticParams& params);
/// Descent-greedy reduced word of sigma'^{-1} sigma (positions k of
/// adjacent swaps, applied left to right).
std::vector<int> reduced_word(const std::vector<int>& sigma,
                              const std::vector<int>& sigma_p);

// Orthogonality ingredients at the specialization z_I (SHIFTED).
cplx q_func(const Partition& I, const std::vector<cplx>& u,
            const EllipticParams& params);
cplx r_func(const Partition& I, const std::vector<cplx>& u,
            const EllipticParams& params);
/// S(z_I); the printed index bounds are resolved so that
/// Q(z_I) S(z_I) = H_lambda(z_I) holds identically (diagonal pairs
/// a = b contribute [1] factors).
cplx s_func(const Partition& I, const std::vector<cplx>& u,
            const EllipticParams& params);

/// | sum_I W_J(z_I,z,Pi^{-1} q^{2 sum}) W_{sigma0(K)}(z_I,sigma0(z),Pi)
///   / (Q R S^2) - delta_{J,K} |, normalized by the largest term.
double check_orthogonality(const Partition& J, const Partition& K,
                           const std::vector<cplx>& u,
                           const DynamicalParams& pi,
                           const EllipticParams& params);

/// Residual of Whatsigma'^{-1} Whatsigma = t(Rcal)(z, Pi q^{-2 sum}),
/// restricted to the I_lambda block.
double check_wmatrix_rcal(const std::vector<int>& sigma,
                          const std::vector<int>& sigma_p,
                          const LambdaShape& shape,
                          const std::vector<cplx>& u,
                          const DynamicalParams& pi,
                          const EllipticParams& params);

/// Residual of t(Rcal)(z, Pi q^{-2 sum}) = Rcal(z, Pi^{-1}) on the
/// shape-lambda block.
double check_rcal_transpose(const std::vector<int>& sigma,
                            const std::vector<int>& sigma_p,
                            const LambdaShape& shape,
                            const std::vector<cplx>& u,
                            const DynamicalParams& pi,
                            const EllipticParams& params);

/// longest element sigma0(i) = n+1-i
std::vector<int> longest_element(int n);
/// identity permutation
std::vector<int> identity_perm(int n);

}  // namespace ellw

#endif
