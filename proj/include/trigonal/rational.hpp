#ifndef TRIGONAL_RATIONAL_HPP
#define TRIGONAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "trigonal/errors.hpp"

namespace trig {

// Exact rational scalar.  mpq_class keeps values in lowest terms with a
// positive denominator as long as every entry point canonicalizes, which
// the helpers below guarantee.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", or "p/q" (no floats).  Throws MalformedInput.
Rational rat_from_string(const std::string& s);

// Serializes as "p" or "p/q" with any sign on the numerator.
std::string rat_to_string(const Rational& q);

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

} // namespace trig

#endif
