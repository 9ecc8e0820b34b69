#ifndef TRIGONAL_JET_HPP
#define TRIGONAL_JET_HPP

#include <vector>

#include "trigonal/rational.hpp"
#include "trigonal/unipoly.hpp"

namespace trig {

// Truncated power series in t: the class of a series modulo t^trunc.
// coefficients has exactly `trunc` entries (coefficient of t^i at index i).
struct Jet {
    int trunc = 0;
    QVec c;

    Jet() = default;
    explicit Jet(int truncation);
    Jet(int truncation, QVec coeffs); // pads / rejects overlong

    static Jet zero(int truncation) { return Jet(truncation); }
    static Jet one(int truncation);
    static Jet monomial(int truncation, int k, const Rational& v = Rational(1));
    static Jet from_poly(const UniPoly& p, int truncation);

    bool is_zero() const;
    Rational coeff(int k) const;

    // t-adic valuation; returns trunc when the jet is zero mod t^trunc.
    int valuation() const;

    Jet operator-() const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet operator*(const Rational& s) const;
    bool operator==(const Jet& o) const { return trunc == o.trunc && c == o.c; }

    // Multiplicative inverse; requires valuation 0.
    Jet inverse() const;

    // Divide by t^k (requires valuation >= k); result truncation trunc-k.
    Jet shift_down(int k) const;
    // Multiply by t^k, same truncation (top coefficients fall off).
    Jet shift_up(int k) const;

    // Reinterpret modulo t^p for p <= trunc (or pad with zeros if p > trunc;
    // padding is only sound when the caller knows the series terminates).
    Jet truncated(int p) const;
    Jet padded(int p) const;

    // t -> t^N; truncation becomes trunc*N.
    Jet substitute_power(int N) const;
};

} // namespace trig

#endif
