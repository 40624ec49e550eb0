#include "klr/laurent.hpp"

#include <sstream>

namespace klr {

LaurentPoly LaurentPoly::constant(Int c) {
    LaurentPoly p;
    p.add_term(c, 0);
    return p;
}

LaurentPoly LaurentPoly::term(Int c, int exp) {
    LaurentPoly p;
    p.add_term(c, exp);
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

Int LaurentPoly::at_one() const {
    Int v = 0;
    for (const auto& [e, c] : terms_) v += c;
    return v;
}

bool LaurentPoly::nonneg_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

void LaurentPoly::add_term(const Int& c, int exp) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            out.add_term(ca * cb, ea + eb);
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? '-' : '+');
        }
        if (mag != 1 || e == 0) os << mag;
        if (e != 0) {
            os << 'q';
            if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace klr
