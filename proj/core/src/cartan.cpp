#include "klr/cartan.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace klr {

CartanDatum::CartanDatum(int ell) : ell_(ell) {
    if (ell < 2) throw std::invalid_argument("rank must be at least 2");
}

int CartanDatum::a(int i, int j) const {
    if (!valid_node(i) || !valid_node(j)) throw std::out_of_range("node out of range");
    if (i == j) return 2;
    if (std::abs(i - j) != 1) return 0;
    if (i == 1 && j == 0) return -2;
    if (i == ell_ - 1 && j == ell_) return -2;
    return -1;
}

int CartanDatum::d(int i) const {
    if (!valid_node(i)) throw std::out_of_range("node out of range");
    return (i == 0 || i == ell_) ? 2 : 1;
}

RootVector RootVector::unit(int size, int j) {
    RootVector v = zero(size);
    v[j] = 1;
    return v;
}

long long RootVector::height() const {
    long long h = 0;
    for (long long x : c_) h += x;
    return h;
}

bool RootVector::nonnegative() const {
    for (long long x : c_)
        if (x < 0) return false;
    return true;
}

bool RootVector::is_zero() const {
    for (long long x : c_)
        if (x != 0) return false;
    return true;
}

RootVector& RootVector::operator+=(const RootVector& o) {
    if (size() != o.size()) throw std::invalid_argument("size mismatch");
    for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
    if (size() != o.size()) throw std::invalid_argument("size mismatch");
    for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RootVector& RootVector::operator*=(long long s) {
    for (auto& x : c_) x *= s;
    return *this;
}

std::string RootVector::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ')';
    return os.str();
}

RootVector delta(const CartanDatum& dd) {
    RootVector v = RootVector::zero(dd.size());
    for (int i = 0; i <= dd.ell(); ++i) v[i] = (i == 0 || i == dd.ell()) ? 1 : 2;
    return v;
}

RootVector xi(const CartanDatum& dd, int k, Sign sign, int i) {
    if (!dd.valid_node(k)) throw std::out_of_range("node out of range");
    if (i < 0 || i % 2 != 0) throw std::invalid_argument("step must be even and nonnegative");
    const int target = k + sign_value(sign) * i;
    if (!dd.valid_node(target)) throw std::out_of_range("k +- i outside the node set");

    RootVector v = RootVector::zero(dd.size());
    if (i == 0) return v;
    if (sign == Sign::plus) {
        for (int j = 1; j < i; ++j) v[k + j] = j;
        for (int m = k + i; m <= dd.ell() - 1; ++m) v[m] = i;
        v[dd.ell()] += i / 2;
    } else {
        for (int j = 1; j < i; ++j) v[k - j] = j;
        for (int m = 1; m <= k - i; ++m) v[m] = i;
        v[0] += i / 2;
    }
    return v;
}

long long pairing(const CartanDatum& dd, int j, const Weight& w) {
    if (!dd.valid_node(j)) throw std::out_of_range("node out of range");
    long long p = (j == w.k) ? 1 : 0;
    for (int i = 0; i <= dd.ell(); ++i) p -= static_cast<long long>(dd.a(j, i)) * w.beta[i];
    return p;
}

long long bilinear(const CartanDatum& dd, const RootVector& x, const RootVector& y) {
    long long v = 0;
    for (int i = 0; i <= dd.ell(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j <= dd.ell(); ++j)
            v += x[i] * y[j] * dd.d(i) * dd.a(i, j);
    }
    return v;
}

long long bilinear_fundamental(const CartanDatum& dd, int k, const RootVector& y) {
    if (!dd.valid_node(k)) throw std::out_of_range("node out of range");
    return static_cast<long long>(dd.d(k)) * y[k];
}

long long defect(const CartanDatum& dd, int k, const RootVector& beta) {
    const long long norm = bilinear(dd, beta, beta);
    // (beta, beta) is even: the diagonal contributes 2 d_i beta_i^2 and the
    // off-diagonal pairs up.
    return bilinear_fundamental(dd, k, beta) - norm / 2;
}

Weight reflect(const CartanDatum& dd, int j, const Weight& w) {
    Weight out = w;
    out.beta[j] += pairing(dd, j, w);
    return out;
}

Weight act(const CartanDatum& dd, const WeylWord& word, const Weight& w) {
    Weight out = w;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        out = reflect(dd, *it, out);
    return out;
}

std::optional<Dominantized> dominantize(const CartanDatum& dd, const Weight& w) {
    const long long cap = 10LL * dd.ell() * (std::llabs(w.beta.height()) + 1);
    Weight cur = w;
    std::vector<int> applied;
    for (long long step = 0; step <= cap; ++step) {
        int neg = -1;
        for (int j = 0; j <= dd.ell(); ++j) {
            if (pairing(dd, j, cur) < 0) {
                neg = j;
                break;
            }
        }
        if (neg < 0) {
            WeylWord word;
            word.letters.assign(applied.rbegin(), applied.rend());
            return Dominantized{cur, word};
        }
        cur = reflect(dd, neg, cur);
        applied.push_back(neg);
    }
    return std::nullopt;
}

}  // namespace klr
