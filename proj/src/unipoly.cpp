#include "trigonal/unipoly.hpp"

namespace trig {

UniPoly::UniPoly(QVec coeffs) : c(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rational& v) {
    UniPoly p;
    if (v != 0) p.c = {v};
    return p;
}

UniPoly UniPoly::monomial(int k, const Rational& v) {
    UniPoly p;
    if (v != 0) {
        p.c.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.c[static_cast<size_t>(k)] = v;
    }
    return p;
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
    return c[static_cast<size_t>(k)];
}

Rational UniPoly::leading() const {
    return c.empty() ? Rational(0) : c.back();
}

void UniPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    UniPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    for (size_t i = 1; i < c.size(); ++i)
        r.c.push_back(c[i] * Rational(static_cast<long>(i)));
    r.normalize();
    return r;
}

UniPoly UniPoly::compose_power(int r) const {
    UniPoly out;
    if (is_zero()) return out;
    out.c.assign((c.size() - 1) * static_cast<size_t>(r) + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) out.c[i * static_cast<size_t>(r)] = c[i];
    out.normalize();
    return out;
}

UniPoly UniPoly::shift(const Rational& beta) const {
    // Horner in (x + beta)
    UniPoly out;
    UniPoly lin(QVec{beta, Rational(1)});
    for (size_t i = c.size(); i-- > 0;) out = out * lin + UniPoly::constant(c[i]);
    return out;
}

UniPoly UniPoly::shl(int k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly r;
    r.c.assign(static_cast<size_t>(k), Rational(0));
    r.c.insert(r.c.end(), c.begin(), c.end());
    return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw MalformedInput("polynomial division by zero");
    UniPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational f = r.leading() / b.leading();
        q = q + UniPoly::monomial(k, f);
        r = r - b.shl(k) * f;
    }
    return {q, r};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rational(1) / a.leading());
    return a;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw MalformedInput("inexact polynomial division");
    return q;
}

Rational homogeneous_eval(const UniPoly& p, int d, const Rational& X0,
                          const Rational& Y0) {
    if (p.degree() > d) throw MalformedInput("degree exceeds homogenization");
    Rational v(0);
    Rational Xp(1);
    QVec Ypow(static_cast<size_t>(d) + 1, Rational(1));
    for (int i = 1; i <= d; ++i) Ypow[static_cast<size_t>(i)] = Ypow[static_cast<size_t>(i - 1)] * Y0;
    for (int k = 0; k <= p.degree(); ++k) {
        v += p.coeff(k) * Xp * Ypow[static_cast<size_t>(d - k)];
        Xp *= X0;
    }
    return v;
}

} // namespace trig
