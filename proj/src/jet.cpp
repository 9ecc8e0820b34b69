#include "trigonal/jet.hpp"

namespace trig {

Jet::Jet(int truncation) : trunc(truncation) {
    if (truncation <= 0) throw MalformedInput("jet truncation must be positive");
    c.assign(static_cast<size_t>(truncation), Rational(0));
}

Jet::Jet(int truncation, QVec coeffs) : Jet(truncation) {
    if (static_cast<int>(coeffs.size()) > truncation)
        throw MalformedInput("jet coefficient list longer than truncation");
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = std::move(coeffs[i]);
}

Jet Jet::one(int truncation) {
    Jet j(truncation);
    j.c[0] = 1;
    return j;
}

Jet Jet::monomial(int truncation, int k, const Rational& v) {
    Jet j(truncation);
    if (k < truncation) j.c[static_cast<size_t>(k)] = v;
    return j;
}

Jet Jet::from_poly(const UniPoly& p, int truncation) {
    Jet j(truncation);
    for (int i = 0; i < truncation && i <= p.degree(); ++i)
        j.c[static_cast<size_t>(i)] = p.coeff(i);
    return j;
}

bool Jet::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

Rational Jet::coeff(int k) const {
    if (k < 0 || k >= trunc) return Rational(0);
    return c[static_cast<size_t>(k)];
}

int Jet::valuation() const {
    for (int i = 0; i < trunc; ++i)
        if (c[static_cast<size_t>(i)] != 0) return i;
    return trunc;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

static void require_same_trunc(const Jet& a, const Jet& b) {
    if (a.trunc != b.trunc)
        throw MalformedInput("jet arithmetic requires equal truncation");
}

Jet Jet::operator+(const Jet& o) const {
    require_same_trunc(*this, o);
    Jet r = *this;
    for (int i = 0; i < trunc; ++i) r.c[static_cast<size_t>(i)] += o.c[static_cast<size_t>(i)];
    return r;
}

Jet Jet::operator-(const Jet& o) const { return *this + (-o); }

Jet Jet::operator*(const Jet& o) const {
    require_same_trunc(*this, o);
    Jet r(trunc);
    for (int i = 0; i < trunc; ++i) {
        if (c[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j < trunc; ++j)
            r.c[static_cast<size_t>(i + j)] += c[static_cast<size_t>(i)] * o.c[static_cast<size_t>(j)];
    }
    return r;
}

Jet Jet::operator*(const Rational& s) const {
    Jet r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

Jet Jet::inverse() const {
    if (c[0] == 0) throw MalformedInput("jet inverse of non-unit");
    Jet r(trunc);
    r.c[0] = Rational(1) / c[0];
    for (int k = 1; k < trunc; ++k) {
        Rational s(0);
        for (int i = 1; i <= k; ++i)
            s += c[static_cast<size_t>(i)] * r.c[static_cast<size_t>(k - i)];
        r.c[static_cast<size_t>(k)] = -s / c[0];
    }
    return r;
}

Jet Jet::shift_down(int k) const {
    if (k == 0) return *this;
    if (valuation() < k) throw MalformedInput("shift_down below valuation");
    if (trunc - k <= 0) throw PrecisionExhausted("shift_down exhausts truncation");
    Jet r(trunc - k);
    for (int i = 0; i < trunc - k; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i + k)];
    return r;
}

Jet Jet::shift_up(int k) const {
    Jet r(trunc);
    for (int i = 0; i + k < trunc; ++i) r.c[static_cast<size_t>(i + k)] = c[static_cast<size_t>(i)];
    return r;
}

Jet Jet::truncated(int p) const {
    if (p == trunc) return *this;
    if (p > trunc) throw MalformedInput("truncated() cannot raise precision");
    Jet r(p);
    for (int i = 0; i < p; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
    return r;
}

Jet Jet::padded(int p) const {
    if (p < trunc) return truncated(p);
    Jet r(p);
    for (int i = 0; i < trunc; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
    return r;
}

Jet Jet::substitute_power(int N) const {
    if (N < 1) throw MalformedInput("substitute_power needs N >= 1");
    Jet r(trunc * N);
    for (int i = 0; i < trunc; ++i) r.c[static_cast<size_t>(i) * N] = c[static_cast<size_t>(i)];
    return r;
}

} // namespace trig
