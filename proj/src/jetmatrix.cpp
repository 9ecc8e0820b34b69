#include "trigonal/jetmatrix.hpp"

#include <algorithm>

namespace trig {

JetMatrix::JetMatrix(int r, int c, int truncation) : rows(r), cols(c), trunc(truncation) {
    if (r <= 0 || c <= 0) throw MalformedInput("jet matrix needs positive shape");
    e.assign(static_cast<size_t>(r) * c, Jet(truncation));
}

JetMatrix JetMatrix::identity(int nn, int truncation) {
    JetMatrix M(nn, nn, truncation);
    for (int i = 0; i < nn; ++i) M.at(i, i) = Jet::one(truncation);
    return M;
}

namespace {

// Valuation clipped to the current working precision.
int val_clipped(const Jet& j, int prec) {
    int v = j.valuation();
    return std::min(v, prec);
}

struct Reduction {
    JetMatrix M;
    JetMatrix V; // column transform, only when tracked
    bool track_cols = false;
    int prec = 0;
    std::vector<int> exponents;
    int pivots = 0;

    void col_axpy(int dst, int src, const Jet& q) {
        // col_dst -= q * col_src
        for (int i = 0; i < M.rows; ++i) M.at(i, dst) = M.at(i, dst) - q * M.at(i, src);
        if (track_cols)
            for (int i = 0; i < V.rows; ++i) V.at(i, dst) = V.at(i, dst) - q * V.at(i, src);
    }

    void run() {
        prec = M.trunc;
        int k = 0;
        while (k < M.rows && k < M.cols && prec > 0) {
            // minimal-valuation pivot in the trailing submatrix
            int bi = -1, bj = -1, bv = prec;
            for (int i = k; i < M.rows; ++i)
                for (int j = k; j < M.cols; ++j) {
                    int v = val_clipped(M.at(i, j), prec);
                    if (v < bv) { bv = v; bi = i; bj = j; }
                }
            if (bi < 0) break; // submatrix vanishes to working precision
            if (bi != k)
                for (int j = 0; j < M.cols; ++j) std::swap(M.at(k, j), M.at(bi, j));
            if (bj != k) {
                for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, k), M.at(i, bj));
                if (track_cols)
                    for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, k), V.at(i, bj));
            }
            const int v = bv;
            Jet uinv = M.at(k, k).shift_down(v).inverse().padded(M.trunc);
            for (int i = k + 1; i < M.rows; ++i) {
                if (val_clipped(M.at(i, k), prec) >= prec) { M.at(i, k) = Jet(M.trunc); continue; }
                Jet q = M.at(i, k).shift_down(v).padded(M.trunc) * uinv;
                for (int j = 0; j < M.cols; ++j)
                    M.at(i, j) = M.at(i, j) - (q * M.at(k, j));
            }
            for (int j = k + 1; j < M.cols; ++j) {
                if (val_clipped(M.at(k, j), prec) >= prec) { M.at(k, j) = Jet(M.trunc); continue; }
                Jet q = M.at(k, j).shift_down(v).padded(M.trunc) * uinv;
                col_axpy(j, k, q);
            }
            exponents.push_back(v);
            prec -= v;
            ++k;
        }
        pivots = k;
    }
};

} // namespace

SmithResult smith_reduce(JetMatrix M) {
    Reduction r;
    r.M = std::move(M);
    r.run();
    SmithResult out;
    out.exponents = std::move(r.exponents);
    out.unresolved_rows = r.M.rows - r.pivots;
    out.precision = r.prec;
    return out;
}

std::optional<std::vector<int>> smith_exponents(const JetMatrix& M) {
    SmithResult s = smith_reduce(M);
    if (s.unresolved_rows > 0) return std::nullopt; // Indeterminate
    return s.exponents;
}

JetKernel jet_kernel(const JetMatrix& M) {
    Reduction r;
    r.M = M;
    r.V = JetMatrix::identity(M.cols, M.trunc);
    r.track_cols = true;
    r.run();
    JetKernel out;
    out.precision = r.prec;
    for (int j = r.pivots; j < M.cols; ++j) {
        std::vector<Jet> col;
        col.reserve(static_cast<size_t>(M.cols));
        for (int i = 0; i < M.cols; ++i) col.push_back(r.V.at(i, j));
        out.basis.push_back(std::move(col));
    }
    return out;
}

} // namespace trig
