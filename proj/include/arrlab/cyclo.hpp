#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "arrlab/errors.hpp"

namespace arrlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number: always reduced, denominator > 0, zero is 0/1.
// boost::multiprecision::cpp_rational maintains exactly these invariants.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (optional leading sign, arbitrary precision).
Rational parse_rational(const std::string& text);

// Canonical string form: "p/q" when q > 1, otherwise "p".
std::string rational_string(const Rational& r);

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, little-endian, monic,
// degree phi(n). Computed by exact division of x^n - 1 by the product of
// the cyclotomic polynomials of the proper divisors of n; cached per n.
// n is capped at 10^4.
const std::vector<BigInt>& cyclotomic_polynomial(int n);

/// An element of the cyclotomic field Q(zeta_n), stored as the canonical
/// remainder modulo the n-th cyclotomic polynomial: phi(n) rational
/// coefficients, index i holding the coefficient of zeta_n^i. Two values of
/// the same order are equal iff their coefficient vectors are equal.
/// Order 1 embeds the rationals. Values are immutable.
class CycRat {
public:
    CycRat() : order_(1), coeffs_(1) {}
    explicit CycRat(Rational value, int order = 1);
    CycRat(long long value, int order) : CycRat(Rational(value), order) {}

    // Reduces an arbitrary polynomial in zeta_n modulo Phi_n.
    static CycRat from_polynomial(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // True when the value lies in Q (all coefficients above index 0 vanish).
    bool is_rational() const;
    Rational rational_part() const { return coeffs_[0]; }

    CycRat inverse() const;

    friend CycRat operator+(const CycRat& a, const CycRat& b);
    friend CycRat operator-(const CycRat& a, const CycRat& b);
    friend CycRat operator*(const CycRat& a, const CycRat& b);
    friend CycRat operator/(const CycRat& a, const CycRat& b);
    CycRat operator-() const;

    friend bool operator==(const CycRat& a, const CycRat& b);
    friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }
    // Total order used for canonical sorting: (order, coefficient vector).
    friend bool operator<(const CycRat& a, const CycRat& b);

    std::string str() const;

private:
    int order_;
    std::vector<Rational> coeffs_; // size euler_phi(order_), canonical

    static void require_same_order(const CycRat& a, const CycRat& b);
};

// Canonical form of zeta_n^(k mod n).
CycRat zeta_power(int n, long long k);

} // namespace arrlab
