#include "ellw/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace ellw {

LambdaShape::LambdaShape(std::vector<int> lam) : lambda(std::move(lam)) {
    for (int x : lambda)
        if (x < 0) throw std::domain_error("LambdaShape: negative part");
}

int LambdaShape::n() const {
    return std::accumulate(lambda.begin(), lambda.end(), 0);
}

int LambdaShape::cum(int l) const {
    if (l < 0 || l > N()) throw std::out_of_range("LambdaShape::cum");
    return std::accumulate(lambda.begin(), lambda.begin() + l, 0);
}

int LambdaShape::M() const {
    int m = 0;
    for (int l = 1; l < N(); ++l) m += cum(l);
    return m;
}

long LambdaShape::multinomial() const {
    long out = 1;
    int seen = 0;
    for (int lam : lambda)
        for (int j = 1; j <= lam; ++j) out = out * (++seen) / j;
    return out;
}

std::string LambdaShape::to_string() const {
    std::string s;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda[i]);
    }
    return s;
}

LambdaShape LambdaShape::parse(const std::string& s) {
    std::vector<int> lam;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        lam.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return LambdaShape(lam);
}

Partition::Partition(std::vector<int> word, int N)
    : word_(std::move(word)), N_(N) {
    std::vector<int> lam(N, 0);
    I_.assign(N, {});
    for (int i = 1; i <= n(); ++i) {
        int mu = word_[i - 1];
        if (mu < 1 || mu > N)
            throw std::domain_error("Partition: letter out of range 1..N");
        I_[mu - 1].push_back(i);
        ++lam[mu - 1];
    }
    shape_ = LambdaShape(lam);
    Icum_.assign(N, {});
    std::vector<int> acc;
    for (int l = 1; l <= N; ++l) {
        acc.insert(acc.end(), I_[l - 1].begin(), I_[l - 1].end());
        std::sort(acc.begin(), acc.end());
        Icum_[l - 1] = acc;
    }
}

Partition Partition::parse(const std::string& digits, int N) {
    std::vector<int> w;
    w.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::domain_error("Partition::parse");
        w.push_back(c - '0');
    }
    return Partition(std::move(w), N);
}

int Partition::dyn_shift_direct(int s, int l) const {
    if (s < 1 || s > n()) throw std::domain_error("dyn_shift: s out of range");
    int mu_s = word_[s - 1];
    if (mu_s > l || l > N_ - 1)
        throw std::domain_error("dyn_shift: need mu_s <= l <= N-1");
    int out = 0;
    for (int j = s + 1; j <= n(); ++j) {
        if (word_[j - 1] == mu_s) ++out;
        if (word_[j - 1] == l + 1) --out;
    }
    return out;
}

int Partition::dyn_shift_combinatorial(int s, int l) const {
    int mu_s = word_[s - 1];
    if (mu_s > l || l > N_ - 1)
        throw std::domain_error("dyn_shift: need mu_s <= l <= N-1");
    const auto& Imu = I_[mu_s - 1];
    const auto& Il1 = I_[l];  // I_{l+1}
    int stilde = 0;          // position of s inside I_{mu_s}
    for (size_t a = 0; a < Imu.size(); ++a)
        if (Imu[a] == s) stilde = static_cast<int>(a) + 1;
    int lam_mu = shape_.lambda[mu_s - 1];
    int lam_l1 = shape_.lambda[l];
    if (lam_l1 == 0 || s > Il1.back()) return lam_mu - stilde;
    // m_{mu_s,l+1}(s) = min{ j : s < i_{l+1,j} }
    int m = 0;
    for (size_t j = 0; j < Il1.size(); ++j)
        if (s < Il1[j]) { m = static_cast<int>(j) + 1; break; }
    return lam_mu - lam_l1 - stilde + m - 1;
}

std::string Partition::to_string() const {
    std::string s;
    for (int mu : word_) s += static_cast<char>('0' + mu);
    return s;
}

bool leq(const Partition& I, const Partition& J) {
    if (I.N() != J.N() || I.n() != J.n() || !(I.shape() == J.shape()))
        throw std::domain_error("leq: shape mismatch");
    for (int l = 1; l <= I.N(); ++l)
        for (int a = 1; a <= I.shape().cum(l); ++a)
            if (I.row(l, a) > J.row(l, a)) return false;
    return true;
}

std::vector<Partition> enumerate_partitions(const LambdaShape& shape) {
    std::vector<int> w;
    for (int l = 1; l <= shape.N(); ++l)
        w.insert(w.end(), shape.lambda[l - 1], l);
    std::sort(w.begin(), w.end());
    std::vector<Partition> out;
    do {
        out.emplace_back(w, shape.N());
    } while (std::next_permutation(w.begin(), w.end()));
    std::reverse(out.begin(), out.end());  // decreasing in the partial order
    return out;
}

std::pair<Partition, std::vector<cplx>> apply_sigma(
    const std::vector<int>& sigma, const Partition& I,
    const std::vector<cplx>& u) {
    int n = I.n();
    if (static_cast<int>(sigma.size()) != n ||
        static_cast<int>(u.size()) != n)
        throw std::domain_error("apply_sigma: size mismatch");
    std::vector<int> w(n);
    std::vector<cplx> su(n);
    for (int i = 1; i <= n; ++i) {
        w[i - 1] = I.letter(sigma[i - 1]);
        su[i - 1] = u[sigma[i - 1] - 1];
    }
    return {Partition(std::move(w), I.N()), std::move(su)};
}

Partition concat(const Partition& I, const Partition& Iprime) {
    if (I.N() != Iprime.N()) throw std::domain_error("concat: N mismatch");
    std::vector<int> w = I.word();
    w.insert(w.end(), Iprime.word().begin(), Iprime.word().end());
    return Partition(std::move(w), I.N());
}

}  // namespace ellw
