#pragma once

#include <optional>
#include <string>
#include <vector>

namespace klr {

// Affine Cartan datum of type C with node set {0, 1, ..., ell}, ell >= 2.
// The matrix is tridiagonal with doubled arrows at both ends, and is
// symmetrized by d = (2, 1, ..., 1, 2).
class CartanDatum {
public:
    explicit CartanDatum(int ell);

    int ell() const { return ell_; }
    int size() const { return ell_ + 1; }
    bool valid_node(int i) const { return 0 <= i && i <= ell_; }

    int a(int i, int j) const;
    int d(int i) const;

private:
    int ell_;
};

// Element of the root lattice, coefficients over alpha_0..alpha_ell.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(std::vector<long long> coeffs) : c_(std::move(coeffs)) {}
    static RootVector zero(int size) { return RootVector(std::vector<long long>(size, 0)); }
    static RootVector unit(int size, int j);

    int size() const { return static_cast<int>(c_.size()); }
    long long operator[](int i) const { return c_[i]; }
    long long& operator[](int i) { return c_[i]; }
    const std::vector<long long>& coeffs() const { return c_; }

    long long height() const;
    bool nonnegative() const;
    bool is_zero() const;

    RootVector& operator+=(const RootVector& o);
    RootVector& operator-=(const RootVector& o);
    RootVector& operator*=(long long s);
    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
    friend RootVector operator*(long long s, RootVector a) { return a *= s; }
    friend bool operator==(const RootVector&, const RootVector&) = default;

    std::string str() const;  // "(1,2,1,0)"

private:
    std::vector<long long> c_;
};

enum class Sign { plus, minus };
inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Level-one weight Lambda_k - beta, stored relative to a fixed Lambda_k.
struct Weight {
    int k = 0;
    RootVector beta;
    friend bool operator==(const Weight&, const Weight&) = default;
};

// Word in simple reflections; act() applies the letters right to left.
struct WeylWord {
    std::vector<int> letters;
    friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

// Null root (1, 2, ..., 2, 1); pairs to zero against every coroot.
RootVector delta(const CartanDatum& dd);

// The staircase element attached to node k and an even step i >= 0 in the
// direction of sign; xi(k, sign, 0) = 0.  Pairings satisfy
// <h_j, xi> = -1 at j = k, +1 at j = k +- i, 0 elsewhere.
RootVector xi(const CartanDatum& dd, int k, Sign sign, int i);

long long pairing(const CartanDatum& dd, int j, const Weight& w);
long long bilinear(const CartanDatum& dd, const RootVector& x, const RootVector& y);
long long bilinear_fundamental(const CartanDatum& dd, int k, const RootVector& y);

// (Lambda_k, beta) - (beta, beta)/2; always an exact integer.
long long defect(const CartanDatum& dd, int k, const RootVector& beta);

Weight reflect(const CartanDatum& dd, int j, const Weight& w);
Weight act(const CartanDatum& dd, const WeylWord& word, const Weight& w);

struct Dominantized {
    Weight weight;  // dominant: pairing(j, weight) >= 0 for all j
    WeylWord word;  // act(word, input) == weight
};

// Chamber walk reflecting at the smallest negative node each step.
// Returns nullopt only if the iteration cap is hit.
std::optional<Dominantized> dominantize(const CartanDatum& dd, const Weight& w);

}  // namespace klr
