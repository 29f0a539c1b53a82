#ifndef ELLW_PARTITIONS_HPP
#define ELLW_PARTITIONS_HPP

#include <string>
#include <vector>

#include "ellw/numerics.hpp"

namespace ellw {

/// Color multiplicities lambda = (lambda_1..lambda_N) with the derived
/// cumulative sums lambda^{(l)} and the variable count
/// M = sum_{l<N} (N-l) lambda_l = sum_{l<N} lambda^{(l)}.
struct LambdaShape {
    std::vector<int> lambda;  // size N

    LambdaShape() = default;
    explicit LambdaShape(std::vector<int> lam);

    int N() const { return static_cast<int>(lambda.size()); }
    int n() const;
    /// lambda^{(l)} = lambda_1 + ... + lambda_l; cum(0) = 0, cum(N) = n.
    int cum(int l) const;
    int M() const;
    long multinomial() const;
    std::string to_string() const;  // "2,2,1"
    static LambdaShape parse(const std::string& s);

    bool operator==(const LambdaShape& o) const { return lambda == o.lambda; }
};

/// A partition of [1,n] into N color classes, stored as the word
/// (mu_1..mu_n), mu_i in {1..N}.  All index sets are derived:
///   I_l = { i : mu_i = l },  I^{(l)} = I_1 u ... u I_l (sorted),
///   i^{(l)}_a = a-th smallest element of I^{(l)}.
/// Rows and columns are 1-indexed throughout.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> word, int N);

    static Partition from_word(const std::vector<int>& word, int N) {
        return Partition(word, N);
    }
    static Partition parse(const std::string& digits, int N);

    int n() const { return static_cast<int>(word_.size()); }
    int N() const { return N_; }
    const std::vector<int>& word() const { return word_; }
    int letter(int i) const { return word_[i - 1]; }  // mu_i

    const std::vector<int>& color_class(int l) const { return I_[l - 1]; }
    /// i^{(l)}_a (1 <= a <= lambda^{(l)}); row(N, a) = a.
    int row(int l, int a) const { return Icum_[l - 1][a - 1]; }
    const LambdaShape& shape() const { return shape_; }

    /// C_{mu_s, l+1}(s) = sum_{j>s} (delta_{mu_j, mu_s} - delta_{mu_j, l+1});
    /// requires mu_s <= l <= N-1.
    int dyn_shift_direct(int s, int l) const;
    /// Combinatorial case-split evaluation of the same quantity.
    int dyn_shift_combinatorial(int s, int l) const;

    std::string to_string() const;  // "21312"
    bool operator==(const Partition& o) const {
        return N_ == o.N_ && word_ == o.word_;
    }

private:
    std::vector<int> word_;
    int N_ = 0;
    LambdaShape shape_;
    std::vector<std::vector<int>> I_;     // I_l, sorted
    std::vector<std::vector<int>> Icum_;  // I^{(l)}, sorted
};

/// I <= J iff i^{(l)}_a <= j^{(l)}_a for all l, a.  Shapes must agree.
bool leq(const Partition& I, const Partition& J);

/// All partitions of the given shape, in one fixed linear extension of
/// the partial order, decreasing: reversed lexicographic word order.
std::vector<Partition> enumerate_partitions(const LambdaShape& shape);

/// sigma^{-1}(I) = I_{mu_{sigma(1)} ... mu_{sigma(n)}} and sigma(u);
/// sigma is 1-indexed, sigma[i-1] = sigma(i).
std::pair<Partition, std::vector<cplx>> apply_sigma(
    const std::vector<int>& sigma, const Partition& I,
    const std::vector<cplx>& u);

/// Concatenation I + I': the primed rows are shifted by n(I) and unioned
/// color-class by color-class; equivalently the words concatenate.
Partition concat(const Partition& I, const Partition& Iprime);

}  // namespace ellw

#endif
