#include "trigonal/picard.hpp"

namespace trig {

namespace {

void check_genus(int g) {
    if (g < 2) throw MalformedInput("genus must be at least 2");
}

void check_same(const DivClass& a, const DivClass& b) {
    if (a.g != b.g) throw DimensionMismatch("mixed genus contexts");
}

} // namespace

DivClass DivClass::operator+(const DivClass& o) const {
    check_same(*this, o);
    return {u + o.u, v + o.v, g};
}

DivClass DivClass::operator-(const DivClass& o) const {
    check_same(*this, o);
    return {u - o.u, v - o.v, g};
}

DivClass standard_class(StdName name, int g) {
    check_genus(g);
    switch (name) {
    case StdName::Lambda:
        return {rat(g + 1, 2 * (g + 2)), rat(-1), g};
    case StdName::Delta:
        return {rat(4 * g + 6, g + 2), rat(-9), g};
    case StdName::T:
        return {rat(0), rat(3), g};
    case StdName::Br2:
        return {rat(4), rat(0), g};
    case StdName::Sigma2:
        return {rat(-1, (g + 2) * (g + 2)), rat(0), g};
    case StdName::K:
        // K = -(b+2)/(2b) (3T + delta) + 2T with b = 2g+4
        return {rat(-(g + 3) * (2 * g + 3), (g + 2) * (g + 2)), rat(6), g};
    }
    throw MalformedInput("unknown class name");
}

DivClass d_class(int g, int l) {
    check_genus(g);
    if (l < 0 || l > g + 2) throw MalformedInput("need 0 <= l <= g+2");
    int b = 2 * g + 4;
    Rational w = rat(2 * l, b);
    return {w * w - 1, rat(4), g};
}

std::pair<Rational, Rational> to_lambda_delta(const DivClass& D) {
    check_genus(D.g);
    if (D.g == 3) throw BasisDegenerate("lambda and delta are parallel at g = 3");
    // solve x*lambda + y*delta = D
    Rational a1 = rat(D.g + 1, 2 * (D.g + 2));
    Rational a2 = rat(4 * D.g + 6, D.g + 2);
    Rational det = a1 * (-9) + a2; // = (3-g)/(2(g+2))
    Rational x = (D.u * (-9) - a2 * D.v) / det;
    Rational y = (a1 * D.v + D.u) / det;
    return {x, y};
}

Rational pairing(const DivClass& D, const Rational& c1sq, const Rational& c2) {
    return D.u * c1sq + D.v * c2;
}

std::pair<DivClass, DivClass> nef_cone(int g, int l) {
    check_genus(g);
    if (l <= 0 || l >= g || (g - l) % 2 != 0)
        throw MalformedInput("need 0 < l < g with l = g mod 2");
    return {d_class(g, l), d_class(g, l + 2)};
}

namespace {

// coordinates of D in the (D_l, D_{l+2}) cone basis
std::pair<Rational, Rational> cone_coords(const DivClass& D, int g, int l) {
    auto [A, B] = nef_cone(g, l);
    Rational det = A.u * B.v - B.u * A.v;
    return {(D.u * B.v - B.u * D.v) / det, (A.u * D.v - D.u * A.v) / det};
}

} // namespace

bool is_nef(const DivClass& D, int g, int l) {
    auto [a, b] = cone_coords(D, g, l);
    return a >= 0 && b >= 0;
}

bool is_ample(const DivClass& D, int g, int l) {
    auto [a, b] = cone_coords(D, g, l);
    return a > 0 && b > 0;
}

Rational ray_lambda_ratio(int g, int l) {
    check_genus(g);
    if (l < 0 || l > g + 2) throw MalformedInput("need 0 <= l <= g+2");
    // ratio of the lambda coefficient to minus the delta coefficient of D_l
    return rat((7 * g + 6) * (g + 2) + 9 * l * l) / rat(g * (g + 2) + l * l);
}

ChamberFan chamber_fan(int g) {
    check_genus(g);
    ChamberFan fan;
    fan.g = g;
    fan.k_ratio = rat(3 * (2 * g + 3) * (g - 1)) / rat(g * g - 3);
    int l0 = g % 2;
    for (int l = l0; l <= g + 2; l += 2) {
        ChamberRay r;
        r.l = l;
        DivClass D = d_class(g, l);
        r.u = D.u;
        r.v = D.v;
        r.lambda_ratio = ray_lambda_ratio(g, l);
        std::vector<std::string> labels;
        if (l == l0) labels.push_back("effective-edge");
        if (l == 2 && g % 2 == 0) labels.push_back("maroni-contraction");
        if (l == g) labels.push_back("hyperelliptic-contraction");
        if (l == g + 2) labels.push_back("nef-edge");
        for (size_t i = 0; i < labels.size(); ++i)
            r.label += (i ? "+" : "") + labels[i];
        fan.rays.push_back(std::move(r));
    }
    return fan;
}

std::pair<int, int> stratum_dimensions(int g, int l) {
    check_genus(g);
    if (l < 0 || l > g || (g - l) % 2 != 0)
        throw MalformedInput("need 0 <= l <= g with l = g mod 2");
    int maroni;
    if (l == 0)
        maroni = 2 * g + 2;
    else if (3 * l <= g + 2)
        maroni = 2 * g + 3 - l;
    else
        maroni = (3 * g + l) / 2 + 1;
    int mu = (3 * l <= g + 2) ? l - 1 : (g - l) / 2;
    return {maroni, mu};
}

int collision_bound(const std::vector<int>& parts) {
    if (parts.empty()) throw MalformedInput("empty partition");
    int s = static_cast<int>(parts.size()) - 2;
    for (int b : parts) {
        if (b < 1) throw MalformedInput("partition entries must be positive");
        s += b / 6;
    }
    return s;
}

DivClass test_family_a(int m, int n) {
    if (m <= 0 || n < m) throw MalformedInput("need 0 < m <= n");
    int g = m + n - 2;
    return {rat((m + n) * (m + n)), rat(m * n), g};
}

Rational test_family_b(int m, int n, int j) {
    if (m <= 0 || n <= m) throw MalformedInput("need 0 < m < n");
    if (j < 0) throw MalformedInput("need j >= 0");
    return rat((n - m) * (n - m) - j * j) / rat((m + n) * (m + n));
}

} // namespace trig
