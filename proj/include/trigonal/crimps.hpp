#ifndef TRIGONAL_CRIMPS_HPP
#define TRIGONAL_CRIMPS_HPP

#include <optional>
#include <string>

#include "trigonal/splitting.hpp"

namespace trig {

// Ramification type of the normalized triple cover of the formal disk.
// The ambient normalized algebra S~ is, respectively:
//   Etale:  R + R + R                (three jets in t, truncation N)
//   Total:  R[x]/(x^3 - t)          (one jet in x, truncation 3N)
//   Simple: R[x]/(x^2 - t) + R      (a jet in x, trunc 2N; a jet in t, trunc N)
enum class LocalRamType { Etale, Total, Simple };

// Element of the ambient algebra, stored as truncated series per part.
struct CrimpElem {
    std::vector<Jet> parts;
};

// A crimp: the R-subalgebra spanned by 1, the generators, and t^N * S~.
struct CrimpGens {
    LocalRamType ram = LocalRamType::Etale;
    int N = 0;
    std::vector<CrimpElem> gens;
};

struct CrimpStratum {
    int b = 0;            // branch degree
    Rational l;           // mu invariant of the stratum
    LocalRamType ram = LocalRamType::Etale;
    int dimension = 0;
    int components = 1;
    int m = 0, n = 0;     // quotient exponents (x-valuations when ramified)
    std::string normal_form;
};

// Ambient element constructors and arithmetic (exposed for tests).
CrimpElem crimp_one(const CrimpGens& c);
CrimpElem crimp_mul(const CrimpGens& c, const CrimpElem& a, const CrimpElem& b);
CrimpElem crimp_tshift(const CrimpGens& c, const CrimpElem& a, int j = 1);
// Coordinates of an element in S~ / t^N S~ (a vector of length 3N).
QVec crimp_flatten(const CrimpGens& c, const CrimpElem& a);

bool is_subalgebra(const CrimpGens& c);

// (mu, delta).  delta is the colength of the subalgebra in its
// normalization, so 2*delta = b - (branching of the normalization):
// etale mu = n-m, delta = n+m; total mu = |v1-v2|/3, delta =
// floor(v1/3)+floor(v2/3); simple mu = |v1-v2|/2, delta = floor((v1+v2)/2).
std::pair<Rational, int> mu_delta(const CrimpGens& c);

// Stratum classification; nullopt = Empty.
std::optional<CrimpStratum> stratum(int b, const Rational& l, LocalRamType ram);

CrimpGens sample_crimp(const CrimpStratum& s, const QVec& params,
                       int component = 1);

// Independent dimension count: the tangent space to the closure conditions
// at the sample point, modulo directions that do not move the module.
int stratum_tangent_dimension(const CrimpStratum& s, const CrimpGens& sample);

// Global concentrated-branching cover with local algebra c at 0, trivial
// elsewhere; etale type only.
LatticeSheaf globalize(const CrimpGens& c);

// The etale crimp with generator (t, t^g, -t^g) and t^(g+1) * S~.
CrimpGens hyperelliptic_limit(int g);

} // namespace trig

#endif
