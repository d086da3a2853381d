#include "webs/laurent.hpp"

#include "webs/error.hpp"

#include <sstream>

namespace webs {

LaurentPoly LaurentPoly::constant(long long c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::q_power(int exp) {
    LaurentPoly p;
    p.add_term(exp, 1);
    return p;
}

void LaurentPoly::add_term(int exp, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (auto [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly r = *this;
    r += other;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly r;
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : other.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

long long LaurentPoly::eval_at_one() const {
    long long s = 0;
    for (auto [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.add_term(-e, c);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
        if (!first) os << ' ';
        os << e << ':' << c;
        first = false;
    }
    return os.str();
}

LaurentPoly quantum_int(int n) {
    if (n < 1) throw Error("NonPositive", "quantum integer needs n >= 1, got " + std::to_string(n));
    LaurentPoly p;
    for (int e = n - 1; e >= 1 - n; e -= 2) p.add_term(e, 1);
    return p;
}

} // namespace webs
