#include "trigonal/linalg.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trig {

namespace {
std::atomic<ElimMode> g_mode{
#ifdef _OPENMP
    ElimMode::Parallel
#else
    ElimMode::Serial
#endif
};
} // namespace

ElimMode default_elim_mode() { return g_mode.load(); }
void set_default_elim_mode(ElimMode m) { g_mode.store(m); }

std::vector<int> echelonize(QMat& M, ElimMode mode) {
    std::vector<int> pivots;
    if (M.empty()) return pivots;
    const int rows = static_cast<int>(M.size());
    const int cols = static_cast<int>(M[0].size());
    Rational prev(1);
    int pr = 0;
    for (int j = 0; j < cols && pr < rows; ++j) {
        int piv = -1;
        for (int i = pr; i < rows; ++i)
            if (M[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != pr) std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(pr)]);
        const Rational pivot = M[static_cast<size_t>(pr)][static_cast<size_t>(j)];
        // Fraction-free (Bareiss) update of the rows below the pivot.  The
        // serial and OpenMP paths perform identical arithmetic.
        auto update_row = [&](int i) {
            auto& Ri = M[static_cast<size_t>(i)];
            const auto& Rp = M[static_cast<size_t>(pr)];
            const Rational f = Ri[static_cast<size_t>(j)];
            for (int jj = j; jj < cols; ++jj) {
                Ri[static_cast<size_t>(jj)] =
                    (Ri[static_cast<size_t>(jj)] * pivot - f * Rp[static_cast<size_t>(jj)]) / prev;
            }
            Ri[static_cast<size_t>(j)] = 0;
        };
        if (mode == ElimMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (int i = pr + 1; i < rows; ++i) update_row(i);
        } else {
            for (int i = pr + 1; i < rows; ++i) update_row(i);
        }
        prev = pivot;
        pivots.push_back(j);
        ++pr;
    }
    return pivots;
}

int rank(const QMat& A, ElimMode mode) {
    QMat M = A;
    return static_cast<int>(echelonize(M, mode).size());
}

int rank(const QMat& A) { return rank(A, default_elim_mode()); }

std::optional<QVec> linear_solve(const QMat& A, const QVec& b) {
    const size_t rows = A.size();
    if (b.size() != rows) throw MalformedInput("linear_solve shape mismatch");
    const size_t cols = rows ? A[0].size() : 0;
    QMat M(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        if (A[i].size() != cols) throw MalformedInput("ragged matrix");
        for (size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
        M[i][cols] = b[i];
    }
    auto pivots = echelonize(M, default_elim_mode());
    for (int p : pivots)
        if (p == static_cast<int>(cols)) return std::nullopt; // NoSolution
    QVec x(cols, Rational(0));
    for (size_t r = pivots.size(); r-- > 0;) {
        const size_t pc = static_cast<size_t>(pivots[r]);
        Rational s = M[r][cols];
        for (size_t j = pc + 1; j < cols; ++j) s -= M[r][j] * x[j];
        x[pc] = s / M[r][pc];
    }
    return x;
}

std::vector<QVec> kernel_basis(const QMat& A) {
    const size_t rows = A.size();
    const size_t cols = rows ? A[0].size() : 0;
    QMat M = A;
    auto pivots = echelonize(M, default_elim_mode());
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<QVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec x(cols, Rational(0));
        x[f] = 1;
        for (size_t r = pivots.size(); r-- > 0;) {
            const size_t pc = static_cast<size_t>(pivots[r]);
            if (pc > f) continue;
            Rational s(0);
            for (size_t j = pc + 1; j < cols; ++j)
                if (M[r][j] != 0 && x[j] != 0) s += M[r][j] * x[j];
            x[pc] = -s / M[r][pc];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace trig
