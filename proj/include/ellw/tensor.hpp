#ifndef ELLW_TENSOR_HPP
#define ELLW_TENSOR_HPP

#include <functional>
#include <vector>

#include "ellw/numerics.hpp"

namespace ellw {

/// Two-site tensor on C^N x C^N.
///
/// Storage convention: R = sum ent(a,b,c,d) E_{a,c} (x) E_{b,d}, i.e.
/// R (v_c (x) v_d) = sum_{a,b} ent(a,b,c,d) v_a (x) v_b.  In the
/// conventional index notation R_{a b}^{c d} = ent(a,b,c,d): subscripts
/// label the output pair, superscripts the summed (input) pair.
class LabeledTensor {
public:
    LabeledTensor() = default;
    explicit LabeledTensor(int N) : N_(N), e_(size_t(N) * N * N * N, cplx(0.0)) {}

    int N() const { return N_; }
    cplx& ent(int a, int b, int c, int d) { return e_[idx(a, b, c, d)]; }
    cplx ent(int a, int b, int c, int d) const { return e_[idx(a, b, c, d)]; }
    /// entry in subscript-superscript notation R_{ab}^{cd}
    cplx sub_sup(int a, int b, int c, int d) const { return ent(a, b, c, d); }

    /// slot swap: R^{(21)}; ent21(a,b,c,d) = ent(b,a,d,c)
    LabeledTensor swapped() const {
        LabeledTensor out(N_);
        for (int a = 1; a <= N_; ++a)
            for (int b = 1; b <= N_; ++b)
                for (int c = 1; c <= N_; ++c)
                    for (int d = 1; d <= N_; ++d)
                        out.ent(a, b, c, d) = ent(b, a, d, c);
        return out;
    }
    /// transpose as an N^2 x N^2 matrix: out(a,b,c,d) = ent(c,d,a,b)
    LabeledTensor transposed() const {
        LabeledTensor out(N_);
        for (int a = 1; a <= N_; ++a)
            for (int b = 1; b <= N_; ++b)
                for (int c = 1; c <= N_; ++c)
                    for (int d = 1; d <= N_; ++d)
                        out.ent(a, b, c, d) = ent(c, d, a, b);
        return out;
    }

    LabeledTensor operator*(const LabeledTensor& o) const {
        LabeledTensor out(N_);
        for (int a = 1; a <= N_; ++a)
            for (int b = 1; b <= N_; ++b)
                for (int c = 1; c <= N_; ++c)
                    for (int d = 1; d <= N_; ++d) {
                        cplx s = 0.0;
                        for (int e = 1; e <= N_; ++e)
                            for (int f = 1; f <= N_; ++f)
                                s += ent(a, b, e, f) * o.ent(e, f, c, d);
                        out.ent(a, b, c, d) = s;
                    }
        return out;
    }
    LabeledTensor& operator*=(cplx s) {
        for (auto& x : e_) x *= s;
        return *this;
    }

    static LabeledTensor identity(int N) {
        LabeledTensor out(N);
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) out.ent(a, b, a, b) = 1.0;
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : e_) m = std::max(m, std::abs(x));
        return m;
    }
    double max_abs_diff(const LabeledTensor& o) const {
        double m = 0.0;
        for (size_t i = 0; i < e_.size(); ++i)
            m = std::max(m, std::abs(e_[i] - o.e_[i]));
        return m;
    }

private:
    size_t idx(int a, int b, int c, int d) const {
        return ((size_t(a - 1) * N_ + (b - 1)) * N_ + (c - 1)) * N_ + (d - 1);
    }
    int N_ = 0;
    std::vector<cplx> e_;
};

/// Dense operator on (C^N)^{(x) n}, basis = words (mu_1..mu_n) in
/// row-major order with mu_1 slowest.  Used by the DYBE checker and the
/// R^{(sigma,sigma')} construction.
class MultiSiteOp {
public:
    MultiSiteOp(int N, int n)
        : N_(N), n_(n), dim_(1), m_() {
        for (int i = 0; i < n; ++i) dim_ *= N;
        m_.assign(size_t(dim_) * dim_, cplx(0.0));
    }

    int N() const { return N_; }
    int n() const { return n_; }
    int dim() const { return dim_; }
    cplx& at(int row, int col) { return m_[size_t(row) * dim_ + col]; }
    cplx at(int row, int col) const { return m_[size_t(row) * dim_ + col]; }

    static MultiSiteOp identity(int N, int n) {
        MultiSiteOp out(N, n);
        for (int i = 0; i < out.dim_; ++i) out.at(i, i) = 1.0;
        return out;
    }

    /// word of basis index (1-based letters)
    std::vector<int> word_of(int index) const {
        std::vector<int> w(n_);
        for (int i = n_ - 1; i >= 0; --i) {
            w[i] = index % N_ + 1;
            index /= N_;
        }
        return w;
    }
    int index_of(const std::vector<int>& w) const {
        int idx = 0;
        for (int i = 0; i < n_; ++i) idx = idx * N_ + (w[i] - 1);
        return idx;
    }

    MultiSiteOp operator*(const MultiSiteOp& o) const {
        MultiSiteOp out(N_, n_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                cplx v = at(i, k);
                if (v == cplx(0.0)) continue;
                for (int j = 0; j < dim_; ++j) out.at(i, j) += v * o.at(k, j);
            }
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : m_) m = std::max(m, std::abs(x));
        return m;
    }
    double max_abs_diff(const MultiSiteOp& o) const {
        double m = 0.0;
        for (size_t i = 0; i < m_.size(); ++i)
            m = std::max(m, std::abs(m_[i] - o.m_[i]));
        return m;
    }

private:
    int N_, n_, dim_;
    std::vector<cplx> m_;
};

}  // namespace ellw

#endif
