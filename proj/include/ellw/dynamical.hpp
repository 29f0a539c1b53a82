#ifndef ELLW_DYNAMICAL_HPP
#define ELLW_DYNAMICAL_HPP

#include <vector>

#include "ellw/numerics.hpp"

namespace ellw {

/// The dynamical-parameter vector a_j = (P+h)_{eps_j}; everything the
/// formulas consume is a difference s_{j,k} = a_j - a_k, so the additive
/// ambiguity of the vector is irrelevant.
///
/// Pi q^{-2<epsbar_mu, h>} corresponds to shift_by_weight(mu, -1): the
/// -1/N part of epsbar_mu cancels in every difference.  Pi -> Pi^{-1}
/// is a -> -a.
struct DynamicalParams {
    std::vector<cplx> a;

    DynamicalParams() = default;
    explicit DynamicalParams(std::vector<cplx> a_) : a(std::move(a_)) {}

    int N() const { return static_cast<int>(a.size()); }
    /// s_{j,k} = (P+h)_{j,k} = a_j - a_k
    cplx s(int j, int k) const { return a[j - 1] - a[k - 1]; }

    DynamicalParams shifted_by_weight(int mu, double c) const {
        DynamicalParams out = *this;
        out.a[mu - 1] += c;
        return out;
    }
    /// shift_by_weight over every letter of a word, each with coefficient c
    DynamicalParams shifted_by_word(const std::vector<int>& word,
                                    double c) const {
        DynamicalParams out = *this;
        for (int mu : word) out.a[mu - 1] += c;
        return out;
    }
    DynamicalParams inverse() const {
        DynamicalParams out = *this;
        for (auto& x : out.a) x = -x;
        return out;
    }
};

}  // namespace ellw

#endif
