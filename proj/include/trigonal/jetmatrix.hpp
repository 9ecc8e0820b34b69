#ifndef TRIGONAL_JETMATRIX_HPP
#define TRIGONAL_JETMATRIX_HPP

#include <optional>
#include <vector>

#include "trigonal/jet.hpp"

namespace trig {

// Matrix over the truncated power-series ring Q[[t]]/t^trunc.
struct JetMatrix {
    int rows = 0, cols = 0, trunc = 0;
    std::vector<Jet> e; // row-major

    JetMatrix() = default;
    JetMatrix(int r, int c, int truncation);

    Jet& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Jet& at(int i, int j) const {
        return e[static_cast<size_t>(i) * cols + j];
    }

    static JetMatrix identity(int nn, int truncation);
};

// Result of a Smith-type reduction over Q[[t]].  `exponents` are the
// certified elementary-divisor exponents (ascending); `unresolved_rows`
// counts rows of the cokernel presentation left without a pivot because
// every remaining entry vanished to the working precision (for a matrix of
// full row rank this is 0).  `precision` is the t-adic precision still
// valid when reduction stopped.
struct SmithResult {
    std::vector<int> exponents;
    int unresolved_rows = 0;
    int precision = 0;
};

SmithResult smith_reduce(JetMatrix M);

// Spec-facing operation: the exponents, or nullopt (Indeterminate) when
// some exponent cannot be certified below the truncation (unresolved rows
// or exhausted precision).
std::optional<std::vector<int>> smith_exponents(const JetMatrix& M);

// Kernel of M as a module over Q[[t]] modulo t^precision: column
// operations are tracked so that the returned columns v satisfy
// M v = 0 mod t^precision.  Each kernel element is a column of length
// M.cols at the original truncation.
struct JetKernel {
    std::vector<std::vector<Jet>> basis;
    int precision = 0;
};

JetKernel jet_kernel(const JetMatrix& M);

} // namespace trig

#endif
