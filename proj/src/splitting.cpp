#include "trigonal/splitting.hpp"

#include "trigonal/linalg.hpp"

namespace trig {

namespace {

// Columns of the Q-span of { t^j * g : g generator, 0 <= j < N } inside
// the truncated lattice Q^(rank*N), one block row range per coordinate.
template <size_t R>
QMat generator_span(const std::vector<std::array<Jet, R>>& gens, int N) {
    QMat cols;
    for (const auto& g : gens)
        for (int j = 0; j < N; ++j) {
            QVec col(static_cast<size_t>(R) * N, Rational(0));
            for (size_t rho = 0; rho < R; ++rho)
                for (int i = j; i < N; ++i)
                    col[rho * static_cast<size_t>(N) + static_cast<size_t>(i)] =
                        g[rho].coeff(i - j);
            cols.push_back(std::move(col));
        }
    return cols;
}

int rank_of_columns(const QMat& cols) {
    if (cols.empty()) return 0;
    // transpose: rank is invariant
    QMat M(cols[0].size(), QVec(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) M[i][j] = cols[j][i];
    return rank(M);
}

// h^0 of the solution space { sections : jet constraints } where the
// constraint matrix rows are J * u = G * y: dimension of the projection of
// ker [J | -G] onto the u coordinates.
int h0_projected(const QMat& Jcols, const QMat& Gcols, size_t nrows) {
    const size_t cols_total = Jcols.size() + Gcols.size();
    QMat A(nrows, QVec(cols_total, Rational(0)));
    for (size_t j = 0; j < Jcols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i) A[i][j] = Jcols[j][i];
    for (size_t j = 0; j < Gcols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i) A[i][Jcols.size() + j] = -Gcols[j][i];
    int ker_A = static_cast<int>(cols_total) - rank(A);
    int ker_G = static_cast<int>(Gcols.size()) - rank_of_columns(Gcols);
    return ker_A - ker_G;
}

} // namespace

int h0_twist(const LatticeSheaf& F, int k) {
    if (F.trunc <= 0) throw MalformedInput("lattice sheaf needs positive truncation");
    if (k < 0) return 0;
    const int N0 = F.trunc;
    const int Ni = F.constrain_inf ? F.trunc_inf : 0;
    const size_t rows = 2 * static_cast<size_t>(N0 + Ni);

    QMat Jcols, Gcols;
    // section coefficient columns: coordinate rho, monomial x^j
    for (int rho = 0; rho < 2; ++rho)
        for (int j = 0; j <= k; ++j) {
            QVec col(rows, Rational(0));
            if (j < N0)
                col[static_cast<size_t>(rho) * N0 + static_cast<size_t>(j)] = 1;
            if (F.constrain_inf) {
                // local coordinate s = 1/x: x^j becomes s^(k-j) in O(k)
                int i = k - j;
                if (i < Ni)
                    col[2 * static_cast<size_t>(N0) + static_cast<size_t>(rho) * Ni +
                        static_cast<size_t>(i)] = 1;
            }
            Jcols.push_back(std::move(col));
        }
    auto put_block = [&rows](QMat& dst, const QMat& block, size_t row_off) {
        for (const auto& c : block) {
            QVec col(rows, Rational(0));
            for (size_t i = 0; i < c.size(); ++i) col[row_off + i] = c[i];
            dst.push_back(std::move(col));
        }
    };
    put_block(Gcols, generator_span<2>(F.gens0, N0), 0);
    if (F.constrain_inf)
        put_block(Gcols, generator_span<2>(F.gens_inf, Ni), 2 * static_cast<size_t>(N0));
    return h0_projected(Jcols, Gcols, rows);
}

int colength(const LatticeSheaf& F) {
    int c = 2 * F.trunc - rank_of_columns(generator_span<2>(F.gens0, F.trunc));
    if (F.constrain_inf)
        c += 2 * F.trunc_inf - rank_of_columns(generator_span<2>(F.gens_inf, F.trunc_inf));
    return c;
}

std::pair<int, int> splitting_type(const LatticeSheaf& F) {
    const int col = colength(F);
    if (col > 2 * F.trunc - 2)
        throw PrecisionExhausted("colength too close to truncation");
    for (int k = 0; k <= col; ++k) {
        if (h0_twist(F, k) > 0) {
            int mp = k, np = col - k;
            if (mp > np) throw PrecisionExhausted("inconsistent h0 scan");
            return {mp, np};
        }
    }
    throw PrecisionExhausted("h0 scan found no section up to the colength");
}

Rational maroni(const MirandaCover& cover, int r) {
    if (r == 1) return Rational(cover.n - cover.m);
    if (r != 2 && r != 3) throw MalformedInput("maroni: r must be 1, 2 or 3");
    if (fiber_type(cover, rat(1), rat(0)) != FiberType::Etale)
        throw MalformedInput("maroni: marked fiber at infinity must be etale");
    MirandaCover p = cyclic_pullback(cover, r);
    return rat(p.n - p.m, r);
}

namespace {

// h^0 of (pushforward of O_C(D))(k) for the globalized etale crimp with
// sheet divisor polynomials w_i supported away from 0; sections are
// (q_i / w_i) with deg q_i <= k + deg w_i and joint jets at 0 in the
// crimp lattice.
int h0_rank3(const LatticeSheaf& F, const std::array<UniPoly, 3>& w, int k) {
    const int N = F.trunc;
    const size_t rows = 3 * static_cast<size_t>(N);
    QMat Jcols, Gcols;
    for (int sheet = 0; sheet < 3; ++sheet) {
        Jet winv = Jet::from_poly(w[static_cast<size_t>(sheet)], N).inverse();
        const int dmax = k + w[static_cast<size_t>(sheet)].degree();
        for (int j = 0; j <= dmax; ++j) {
            QVec col(rows, Rational(0));
            for (int i = j; i < N; ++i)
                col[static_cast<size_t>(sheet) * N + static_cast<size_t>(i)] =
                    winv.coeff(i - j);
            Jcols.push_back(std::move(col));
        }
    }
    std::vector<std::array<Jet, 3>> gens = F.sheet_gens0;
    std::array<Jet, 3> one{Jet::one(N), Jet::one(N), Jet::one(N)};
    gens.push_back(one);
    Gcols = generator_span<3>(gens, N);
    return h0_projected(Jcols, Gcols, rows);
}

// Splitting type of the twisted rank-2 quotient bundle (pushforward modulo
// the structure sheaf): h^0 of the quotient at twist k is h0_rank3(k) minus
// h^0(O(k)), exactly, for k >= -1 (the H^1 obstruction vanishes there).
std::pair<int, int> quotient_splitting(const LatticeSheaf& F,
                                       const std::array<UniPoly, 3>& w, int span) {
    std::array<int, 2> exps{};
    int found = 0;
    int prev = h0_rank3(F, w, -1);
    int prev_diff = 0;
    for (int k = 0; k <= span && found < 2; ++k) {
        int q = h0_rank3(F, w, k) - (k + 1);
        // exponent multiplicity at k is the second difference of h^0
        for (int s = 0; s < (q - prev) - prev_diff; ++s) {
            if (found < 2) exps[static_cast<size_t>(found)] = k;
            ++found;
        }
        prev_diff = q - prev;
        prev = q;
    }
    if (found < 2) throw PrecisionExhausted("quotient exponent scan incomplete");
    return {exps[0], exps[1]};
}

} // namespace

std::array<int, 3> balance_by_twist(const LatticeSheaf& F, int m, int n) {
    if (!F.has_sheets || F.sheet_gens0.empty())
        throw NotSplitNormalization("three-sheet structure unavailable");
    if (m > n) throw MalformedInput("need m <= n");
    std::array<UniPoly, 3> w{UniPoly::constant(rat(1)), UniPoly::constant(rat(1)),
                             UniPoly::constant(rat(1))};
    const int span = m + n + 3;
    auto exps = quotient_splitting(F, w, span);
    if (exps != std::pair<int, int>{m, n})
        throw MalformedInput("declared splitting type does not match the lattice");
    int guard = 0;
    while (exps.first != exps.second) {
        if (++guard > 4 * (n - m + 1))
            throw PrecisionExhausted("balance_by_twist did not converge");
        bool accepted = false;
        for (int sheet = 0; sheet < 3 && !accepted; ++sheet) {
            // candidate points tried in a fixed order per the tie-break rule
            for (long alpha = 1; alpha <= 3 && !accepted; ++alpha) {
                std::array<UniPoly, 3> cand = w;
                cand[static_cast<size_t>(sheet)] =
                    cand[static_cast<size_t>(sheet)] * UniPoly(QVec{rat(-alpha), rat(1)});
                auto e2 = quotient_splitting(F, cand, span);
                if (e2.first == exps.first && e2.second == exps.second - 1) {
                    w = cand;
                    exps = e2;
                    accepted = true;
                }
            }
        }
        if (!accepted) throw PrecisionExhausted("no balancing point accepted");
    }
    return {w[0].degree(), w[1].degree(), w[2].degree()};
}

} // namespace trig
