#ifndef TRIGONAL_PICARD_HPP
#define TRIGONAL_PICARD_HPP

#include <string>
#include <utility>
#include <vector>

#include "trigonal/errors.hpp"
#include "trigonal/rational.hpp"

namespace trig {

// Divisor class u*c1^2 + v*c2 on the rank-two rational Picard group,
// carrying the genus for basis conversions.
struct DivClass {
    Rational u, v;
    int g = 2;

    bool operator==(const DivClass& o) const {
        return u == o.u && v == o.v && g == o.g;
    }
    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;
    DivClass operator*(const Rational& s) const { return {u * s, v * s, g}; }
};

enum class StdName { Lambda, Delta, T, Br2, Sigma2, K };

DivClass standard_class(StdName name, int g);

// The nef-wall classes D_l = (4c2 - c1^2) + (2l/b)^2 c1^2, b = 2g+4.
DivClass d_class(int g, int l);

// Coordinates in the (lambda, delta) basis; undefined at g = 3.
std::pair<Rational, Rational> to_lambda_delta(const DivClass& D);

// Intersection number against a family with given Chern degrees.
Rational pairing(const DivClass& D, const Rational& c1sq, const Rational& c2);

// Nef and ample cones of the model at level l (0 < l < g, l = g mod 2).
std::pair<DivClass, DivClass> nef_cone(int g, int l);
bool is_nef(const DivClass& D, int g, int l);
bool is_ample(const DivClass& D, int g, int l);

// Ratio of the lambda coefficient to minus the delta coefficient along the
// ray of D_l; scale-invariant, so well defined for every g >= 2.
Rational ray_lambda_ratio(int g, int l);

struct ChamberRay {
    int l = 0;
    Rational u, v;
    Rational lambda_ratio;
    std::string label; // endpoint annotations, empty for interior walls
};

struct ChamberFan {
    int g = 2;
    std::vector<ChamberRay> rays; // l = l0, l0+2, ..., g+2
    Rational k_ratio;             // lambda ratio of the canonical ray
};

ChamberFan chamber_fan(int g);

// (dim of the Maroni stratum, dim of the mu stratum) at level l.
std::pair<int, int> stratum_dimensions(int g, int l);

// Upper bound for the dimension of the locus where the branch points
// collide according to the given partition.
int collision_bound(const std::vector<int>& parts);

// Chern degrees of the blown-up-plane test family.
DivClass test_family_a(int m, int n);

// Pairing of D_j against the weighted test family, normalized up to one
// positive scalar.
Rational test_family_b(int m, int n, int j);

} // namespace trig

#endif
