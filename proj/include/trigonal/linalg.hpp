#ifndef TRIGONAL_LINALG_HPP
#define TRIGONAL_LINALG_HPP

#include <optional>

#include "trigonal/rational.hpp"

namespace trig {

// Exact rational linear algebra via fraction-free (Bareiss) elimination.
//
// The elimination kernel has two code paths: a serial reference
// implementation and an OpenMP row-parallel one.  They are exactly
// equivalent (same pivot choices, same arithmetic) and cross-checked in
// the test suite; the benchmark target compares their throughput.
enum class ElimMode { Serial, Parallel };

// Process-wide default used by the high-level wrappers.
ElimMode default_elim_mode();
void set_default_elim_mode(ElimMode m);

// Row echelon form (fraction-free).  Returns the pivot columns; M is
// replaced by an echelon matrix row-equivalent to the input.
std::vector<int> echelonize(QMat& M, ElimMode mode);

int rank(const QMat& A, ElimMode mode);
int rank(const QMat& A);

// Exact solution of A x = b, or nullopt when b is outside the column span.
std::optional<QVec> linear_solve(const QMat& A, const QVec& b);

// Basis of the right kernel of A.
std::vector<QVec> kernel_basis(const QMat& A);

} // namespace trig

#endif
