#ifndef TRIGONAL_FAMILIES_HPP
#define TRIGONAL_FAMILIES_HPP

#include <optional>
#include <vector>

#include "trigonal/jet.hpp"

namespace trig {

// One-parameter family of rank-2 bundles on P^1 over the formal disk,
// presented as an extension of O(-m) by O(-n) with class
// e(X, Y) = sum_i e[i] X^i Y^(n-m-2-i) in H^1(O(m-n)) tensor R.
struct ExtensionFamily {
    int m = 0, n = 0;
    int t_trunc = 0;
    std::vector<Jet> e; // n-m-1 jets, all with truncation t_trunc

    void validate() const;
};

enum class StepKind { BaseChange, Transform, Represent, Fiber };

struct TraceStep {
    StepKind kind = StepKind::Fiber;
    int base_change_N = 0;       // BaseChange only
    int maroni = 0;              // Fiber: central-fiber Maroni invariant
    Rational mu;                 // Fiber: crimp mu via the blow-down cokernel
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
};

// Elementary transformation along the central fiber: coefficient i of the
// class is multiplied by t^(m-n+1+i).  NotIntegral when a negative power
// would be required.
ExtensionFamily transform_class(const ExtensionFamily& f);

// t -> t^N.
ExtensionFamily base_change(const ExtensionFamily& f, int N);

// Smith exponents of the blow-down cokernel of the transformed family;
// equals (m, n) exactly.
std::pair<int, int> blow_down_cokernel(const ExtensionFamily& f);

// Splitting type of the extension of O(-m) by O(-n) over Q with class e0
// (a vector of n-m-1 rationals).
std::pair<int, int> central_splitting(int m, int n, const QVec& e0);

// Semistable-reduction loop: rewrites the family until the central fiber
// has Maroni invariant <= l.  Requires l = n-m mod 2; the generic fiber
// must already be l-balanced.
std::pair<ExtensionFamily, ReductionTrace> balance_limit(const ExtensionFamily& f,
                                                         int l);

// Hassett-type stability of the marked branch configuration: sigma disjoint
// from the branch divisor, eps * mult <= 1 at every point, and the twisted
// log canonical degree eps*b - 1 positive.
bool epsilon_stable(const std::vector<int>& multiplicities, bool sigma_disjoint,
                    const Rational& eps);

} // namespace trig

#endif
