#pragma once

#include <map>
#include <string>

namespace webs {

// Laurent polynomial in q with exact integer coefficients.
// Invariant: no zero coefficient is ever stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(long long c);
    static LaurentPoly q_power(int exp); // q^exp

    void add_term(int exp, long long coeff);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly& operator*=(const LaurentPoly& other);
    bool operator==(const LaurentPoly& other) const = default;

    long long eval_at_one() const;
    LaurentPoly bar() const; // q -> q^{-1}
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, long long>& terms() const { return terms_; }

    // Sparse text form, exponent-ascending: "-2:1 0:1 2:1"; "0" when zero.
    std::string str() const;

private:
    std::map<int, long long> terms_;
};

// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.  Throws NonPositive for n < 1.
LaurentPoly quantum_int(int n);

} // namespace webs
