#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace klr {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in q with exact integer coefficients.
// The zero coefficient is never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(Int c);
    static LaurentPoly term(Int c, int exp);

    bool is_zero() const { return terms_.empty(); }
    Int coeff(int exp) const;
    int min_exp() const;  // pre: !is_zero()
    int max_exp() const;  // pre: !is_zero()
    Int at_one() const;
    bool nonneg_coeffs() const;

    void add_term(const Int& c, int exp);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    const std::map<int, Int>& terms() const { return terms_; }

    // Ascending exponents: "0", "1", "q", "q^-1", "1+2q^2+q^4", "1-q".
    std::string str() const;

private:
    std::map<int, Int> terms_;
};

}  // namespace klr
