#ifndef TRIGONAL_SPLITTING_HPP
#define TRIGONAL_SPLITTING_HPP

#include <array>
#include <optional>

#include "trigonal/cover.hpp"
#include "trigonal/jet.hpp"

namespace trig {

// Rank-2 subsheaf F of the trivial sheaf O^2 on P^1, full rank generically,
// described by local data at 0: the lattice spanned over Q[[t]] by the
// generator columns plus t^trunc times the full lattice.  Optionally the
// same shape of constraint at infinity (local coordinate s = 1/x);
// by default the lattice at infinity is full.
//
// When the sheaf arises from an etale crimp, the three-sheet picture at 0
// is kept alongside (sheet_gens, spanning together with (1,1,1) and
// t^trunc times the full rank-3 lattice); balance_by_twist requires it.
struct LatticeSheaf {
    int trunc = 0;
    std::vector<std::array<Jet, 2>> gens0;
    bool constrain_inf = false;
    int trunc_inf = 0;
    std::vector<std::array<Jet, 2>> gens_inf;

    bool has_sheets = false;
    std::vector<std::array<Jet, 3>> sheet_gens0;
};

// h^0 of F(k): pairs of polynomials of degree <= k whose jets at 0 (and at
// infinity, if constrained) lie in the lattice.
int h0_twist(const LatticeSheaf& F, int k);

// The unique (m', n'), m' <= n', with F isomorphic to O(-m') + O(-n').
std::pair<int, int> splitting_type(const LatticeSheaf& F);

// Total colength of the lattice data (codimension of the generator span
// in the full truncated lattice, summed over constrained points).
int colength(const LatticeSheaf& F);

// Maroni invariant.  r = 1: n - m.  r in {2, 3}: the invariant of the
// degree-r cyclic pullback divided by r (marked fiber at infinity must be
// etale).
Rational maroni(const MirandaCover& cover, int r = 1);

// Greedy search for an effective divisor D of degree n - m on the split
// normalization, supported away from 0 and infinity, with at most two
// sheets used, such that the twisted pushforward has splitting (m, m).
// Returns per-sheet degrees (d1, d2, d3).
std::array<int, 3> balance_by_twist(const LatticeSheaf& F, int m, int n);

} // namespace trig

#endif
