#ifndef TRIGONAL_MODELS_HPP
#define TRIGONAL_MODELS_HPP

#include <array>

#include "trigonal/cover.hpp"
#include "trigonal/crimps.hpp"
#include "trigonal/splitting.hpp"

namespace trig {

// A line in the space of traceless functions on the three sheets:
// representative triple summing to 0, not all zero, up to scale.
struct TracelessLine {
    std::array<Rational, 3> v;
};

// Point of the coarse S3-quotient line, as the degree-6 invariant pair
// [sigma2^3 : sigma3^2] of a traceless triple.
struct CoarsePoint {
    Rational p, q;
};

// Projection of an arbitrary triple modulo constants; throws
// MalformedInput when the projection is zero.
TracelessLine traceless_line(const std::array<Rational, 3>& values);

CoarsePoint coarse_point(const TracelessLine& line);
bool coarse_equal(const CoarsePoint& a, const CoarsePoint& b);

// Cross-ratio of an unbalanced marked cover over the marked point at
// infinity: the image of the 1-dimensional space of sections of F(m) in
// the fiber at infinity, in sheet coordinates.
std::pair<TracelessLine, CoarsePoint> cross_ratio(const MirandaCover& cover);

// Same invariant computed on a globalized crimp lattice (sheet picture
// required); sections found by exact linear algebra against the lattice.
std::pair<TracelessLine, CoarsePoint> cross_ratio(const LatticeSheaf& F);

// Principal part of an unbalanced etale crimp: the leading sheet triple of
// the reduced generator of valuation m.
std::pair<TracelessLine, CoarsePoint> principal_part(const CrimpGens& c);

// Coordinates on the even-genus final model: the normalized cubic has
// value s t (s+t) over infinity and centered branching, leaving
// a_1..a_h, b_1..b_h, c_1..c_h, d_2..d_h with h = (g+2)/2; index i
// carries weight i, and d_1 = (b_1 + c_1 - 2 a_1)/2 is implicit.
struct WPoint {
    int h = 2;
    QVec a, b, c, d; // sizes h, h, h, h-1 (d starts at index 2)

    int genus() const { return 2 * h - 2; }
    void validate() const;
    bool operator==(const WPoint& o) const {
        return h == o.h && a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

// Constant change of the bundle frame: the cubic (a, b, c, d) rewritten in
// the frame (s, t) -> (M00 s + M01 t, M10 s + M11 t).
MirandaCover transform_frame(const MirandaCover& cover,
                             const std::array<Rational, 4>& M);

WPoint even_normal_form(const MirandaCover& cover);

// The balanced cover presented by a W point.
MirandaCover cover_from_wpoint(const WPoint& w);

// Equivalence under S3 x weighted scaling, decided exactly over Q.
bool orbit_equivalent(const WPoint& p, const WPoint& q);

} // namespace trig

#endif
