#ifndef TRIGONAL_UNIPOLY_HPP
#define TRIGONAL_UNIPOLY_HPP

#include <vector>

#include "trigonal/rational.hpp"

namespace trig {

// Dense univariate polynomial over Q, coefficients ascending (x^0 first).
// Invariant: the highest-index coefficient is nonzero unless the
// polynomial is zero (empty coefficient list).
struct UniPoly {
    QVec c;

    UniPoly() = default;
    explicit UniPoly(QVec coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& v);
    // x^k with coefficient v.
    static UniPoly monomial(int k, const Rational& v = Rational(1));

    bool is_zero() const { return c.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rational coeff(int k) const;
    Rational leading() const;

    void normalize(); // strip trailing zeros

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c == o.c; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;

    // p(x) -> p(x^r)
    UniPoly compose_power(int r) const;
    // p(x) -> p(x + beta)
    UniPoly shift(const Rational& beta) const;
    // p(x) -> x^k * p(x)
    UniPoly shl(int k) const;
};

// Euclidean division: returns (quotient, remainder).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd over Q (zero polynomial if both inputs are zero).
UniPoly poly_gcd(UniPoly a, UniPoly b);

// Exact division; throws MalformedInput if the remainder is nonzero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Value of the degree-d homogenization of p at [X0:Y0]:
//   sum_k coeff_k X0^k Y0^(d-k).   Requires d >= degree(p).
Rational homogeneous_eval(const UniPoly& p, int d, const Rational& X0,
                          const Rational& Y0);

} // namespace trig

#endif
