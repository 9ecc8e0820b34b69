#ifndef TRIGONAL_COVER_HPP
#define TRIGONAL_COVER_HPP

#include <array>

#include "trigonal/unipoly.hpp"

namespace trig {

// A binary form on P^1: the homogenization of `p` to degree `deg`.
struct BinaryForm {
    int deg = 0;
    UniPoly p;

    Rational eval(const Rational& X0, const Rational& Y0) const {
        return homogeneous_eval(p, deg, X0, Y0);
    }
};

// Triple cover of P^1 in Miranda form: E = O(m) + O(n) with m <= n, and a
// cubic section with coefficients a, b, c, d of degrees at most
// 2m-n, m, n, 2n-m (a = 0 forced when 2m-n < 0).  The fiber coordinate u
// satisfies a u^3 + b u^2 + c u + d = 0.  Marked point sigma = infinity.
struct MirandaCover {
    int m = 0, n = 0;
    UniPoly a, b, c, d;

    MirandaCover() = default;
    MirandaCover(int m_, int n_, UniPoly a_, UniPoly b_, UniPoly c_, UniPoly d_);

    void validate() const; // throws MalformedInput on degree violations
};

// Multiplication table of the pushforward algebra on the basis
// {1, z, w}: e_i * e_j = sum_k table[i][j][k] e_k.
struct CoverAlgebra {
    std::array<std::array<std::array<UniPoly, 3>, 3>, 3> table;
};

enum class FiberType { Etale, Simple, Total };

// Delta = 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2, homogenized to
// degree 2(m+n).  Throws DegenerateCover when Delta is identically zero.
BinaryForm discriminant(const MirandaCover& cover);

// Branch degree b = 2(m+n) = 2g+4.
int branch_degree(const MirandaCover& cover);

int genus(const MirandaCover& cover);

CoverAlgebra algebra_from_cubic(const MirandaCover& cover);

// Factorization shape of the cubic at a rational point of P^1.
FiberType fiber_type(const MirandaCover& cover, const Rational& X0,
                     const Rational& Y0);

// Pullback under the degree-r cyclic cover of P^1 branched at 0 and
// infinity: splitting degrees (rm, rn), coefficients composed with x^r.
MirandaCover cyclic_pullback(const MirandaCover& cover, int r);

// Values of the four cubic coefficients at a point, each evaluated through
// its homogenization (degrees 2m-n, m, n, 2n-m).
std::array<Rational, 4> cubic_at_point(const MirandaCover& cover,
                                       const Rational& X0, const Rational& Y0);

} // namespace trig

#endif
