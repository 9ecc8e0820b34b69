#include "trigonal/families.hpp"

#include <algorithm>
#include <map>

#include "trigonal/jetmatrix.hpp"
#include "trigonal/linalg.hpp"
#include "trigonal/unipoly.hpp"

namespace trig {

void ExtensionFamily::validate() const {
    if (m <= 0 || n <= m) throw MalformedInput("need 0 < m < n");
    if (t_trunc <= 0) throw MalformedInput("need positive truncation");
    if (static_cast<int>(e.size()) != n - m - 1)
        throw DimensionMismatch("class needs n-m-1 coefficients");
    for (const auto& j : e)
        if (j.trunc != t_trunc) throw MalformedInput("jet truncation mismatch");
}

ExtensionFamily transform_class(const ExtensionFamily& f) {
    f.validate();
    const int gap = f.n - f.m;
    const int loss = std::max(0, gap - 1);
    const int T2 = f.t_trunc - loss;
    if (T2 <= 0) throw PrecisionExhausted("transform exceeds truncation");
    ExtensionFamily out;
    out.m = f.m;
    out.n = f.n;
    out.t_trunc = T2;
    for (size_t i = 0; i < f.e.size(); ++i) {
        int w = f.m - f.n + 1 + static_cast<int>(i);
        if (w < 0) {
            if (f.e[i].valuation() < -w)
                throw NotIntegral("class valuation too small for the transform");
            out.e.push_back(f.e[i].shift_down(-w).truncated(T2));
        } else {
            out.e.push_back(f.e[i].shift_up(w).truncated(T2));
        }
    }
    return out;
}

ExtensionFamily base_change(const ExtensionFamily& f, int N) {
    f.validate();
    if (N < 1) throw MalformedInput("base change exponent must be >= 1");
    ExtensionFamily out;
    out.m = f.m;
    out.n = f.n;
    out.t_trunc = f.t_trunc * N;
    for (const auto& j : f.e) out.e.push_back(j.substitute_power(N));
    return out;
}

std::pair<int, int> blow_down_cokernel(const ExtensionFamily& f) {
    ExtensionFamily g = transform_class(f);
    // evaluation-map cokernel over k[u]: columns u^n and w(u) + u^m with
    // w(u) collecting the central transformed class
    const int T = f.m + f.n + 2;
    JetMatrix M(2, 2, T);
    M.at(0, 0) = Jet::monomial(T, f.n);
    M.at(0, 1) = Jet::zero(T);
    M.at(1, 1) = Jet::monomial(T, f.m);
    Jet w(T);
    for (size_t i = 0; i < g.e.size(); ++i)
        w = w + Jet::monomial(T, f.n - 1 - static_cast<int>(i), g.e[i].coeff(0));
    M.at(1, 0) = w;
    auto exps = smith_exponents(M);
    if (!exps) throw PrecisionExhausted("cokernel exponents unresolved");
    std::sort(exps->begin(), exps->end());
    return {(*exps)[0], (*exps)[1]};
}

namespace {

int h0_central(int m, int n, const QVec& e0, int k) {
    int free_part = std::max(0, k - n + 1);
    int cols = k - m + 1;
    if (cols <= 0) return free_part;
    int rows = n - k - 1;
    if (rows <= 0) return free_part + cols;
    QMat M(static_cast<size_t>(rows), QVec(static_cast<size_t>(cols), Rational(0)));
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
            int idx = i + j;
            if (idx < static_cast<int>(e0.size()))
                M[static_cast<size_t>(j)][static_cast<size_t>(i)] = e0[static_cast<size_t>(idx)];
        }
    return free_part + cols - rank(M);
}

} // namespace

std::pair<int, int> central_splitting(int m, int n, const QVec& e0) {
    if (m <= 0 || n <= m) throw MalformedInput("need 0 < m < n");
    if (static_cast<int>(e0.size()) != n - m - 1)
        throw DimensionMismatch("class needs n-m-1 coefficients");
    for (int k = m; k <= m + n; ++k)
        if (h0_central(m, n, e0, k) > 0) return {k, m + n - k};
    throw PrecisionExhausted("no section found in the splitting scan");
}

// ---------------------------------------------------------------------------
// re-presentation machinery: polynomials in x with jet coefficients, and
// Laurent polynomials for transition-matrix arithmetic

namespace {

using JPoly = std::vector<Jet>; // coefficient of x^i at index i, shared trunc

JPoly jp_zero() { return {}; }

void jp_trim(JPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

JPoly jp_add(const JPoly& a, const JPoly& b, int T) {
    JPoly r(std::max(a.size(), b.size()), Jet::zero(T));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    jp_trim(r);
    return r;
}

JPoly jp_neg(const JPoly& a) {
    JPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

JPoly jp_mul(const JPoly& a, const JPoly& b, int T) {
    if (a.empty() || b.empty()) return {};
    JPoly r(a.size() + b.size() - 1, Jet::zero(T));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    jp_trim(r);
    return r;
}

JPoly jp_from_unipoly(const UniPoly& p, int T) {
    JPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.push_back(Jet(T, QVec{p.coeff(i)}));
    jp_trim(r);
    return r;
}

UniPoly jp_central(const JPoly& p) {
    QVec c;
    for (const auto& j : p) c.push_back(j.coeff(0));
    return UniPoly(std::move(c));
}

// extended euclid over Q[x]: u*a + v*b = 1 for coprime a, b
std::pair<UniPoly, UniPoly> ext_euclid_unit(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(rat(1)), s1;
    UniPoly t0, t1 = UniPoly::constant(rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0) throw BasisDegenerate("section components not coprime");
    Rational ginv = Rational(1) / r0.coeff(0);
    return {s0 * ginv, t0 * ginv};
}

// complete (a, b), coprime at t = 0, to a determinant-1 frame:
// a*d - b*c = 1 exactly modulo t^T
std::pair<JPoly, JPoly> bezout_complete(const JPoly& a, const JPoly& b, int T) {
    UniPoly a0 = jp_central(a), b0 = jp_central(b);
    auto [u, v] = ext_euclid_unit(a0, b0); // u a0 + v b0 = 1
    UniPoly d0 = u, c0 = -v;              // a0 d0 - b0 c0 = 1
    JPoly c = jp_from_unipoly(c0, T), d = jp_from_unipoly(d0, T);
    JPoly one{Jet::one(T)};
    for (int iter = 0; iter <= T + 1; ++iter) {
        JPoly r = jp_add(jp_mul(a, d, T), jp_neg(jp_add(jp_mul(b, c, T), one, T)), T);
        if (r.empty()) return {c, d};
        int vmin = T;
        for (const auto& j : r) vmin = std::min(vmin, j.valuation());
        if (vmin <= 0) throw BasisDegenerate("bezout lifting lost its base point");
        // rho = coefficient of t^vmin in the residual
        QVec rc;
        for (const auto& j : r) rc.push_back(j.coeff(vmin));
        UniPoly rho(std::move(rc));
        // d -= t^v rho d0, c -= t^v rho c0 raises the residual valuation
        auto lift_scaled = [&](const UniPoly& p) {
            JPoly out;
            UniPoly q = rho * p;
            for (int i = 0; i <= q.degree(); ++i)
                out.push_back(Jet::monomial(T, vmin, q.coeff(i)));
            jp_trim(out);
            return out;
        };
        d = jp_add(d, jp_neg(lift_scaled(d0)), T);
        c = jp_add(c, jp_neg(lift_scaled(c0)), T);
    }
    throw PrecisionExhausted("bezout lifting did not stabilize");
}

using LPoly = std::map<int, Jet>; // Laurent polynomial in x

void lp_set(LPoly& p, int k, const Jet& v) {
    if (v.is_zero()) return;
    auto it = p.find(k);
    if (it == p.end()) p.emplace(k, v);
    else {
        it->second = it->second + v;
        if (it->second.is_zero()) p.erase(it);
    }
}

LPoly lp_mul(const LPoly& a, const LPoly& b) {
    LPoly r;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) lp_set(r, i + j, ci * cj);
    return r;
}

LPoly lp_from_jpoly(const JPoly& p, int dir /* +1: x, -1: 1/x */) {
    LPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        lp_set(r, dir * static_cast<int>(i), p[i]);
    return r;
}

using LMat = std::array<std::array<LPoly, 2>, 2>;

LMat lm_mul(const LMat& A, const LMat& B) {
    LMat R;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            LPoly acc = lp_mul(A[static_cast<size_t>(i)][0], B[0][static_cast<size_t>(j)]);
            for (const auto& [k, v] : lp_mul(A[static_cast<size_t>(i)][1], B[1][static_cast<size_t>(j)]))
                lp_set(acc, k, v);
            R[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(acc);
        }
    return R;
}

// Change the presentation of the family to an extension of O(-m') by
// O(-n'), where (m', n') is the central splitting type: find a section of
// V(n') that is nowhere zero on the central fiber, complete it to frames
// at 0 and infinity, and read the new class off the new transition matrix.
ExtensionFamily represent(const ExtensionFamily& f, int mp, int np) {
    const int m = f.m, n = f.n;
    const int gap = n - m;

    // sections of V(n'): b of degree <= n'-m with (w b)_p = 0 for
    // n'-n < p < 0, where w = sum e_i x^(i+m-n+1)
    const int bdeg = np - m;
    const int rows = n - np - 1;
    int prec = f.t_trunc;
    std::vector<std::vector<Jet>> basis;
    if (rows <= 0) {
        for (int q = 0; q <= bdeg; ++q) {
            std::vector<Jet> col(static_cast<size_t>(bdeg) + 1, Jet::zero(f.t_trunc));
            col[static_cast<size_t>(q)] = Jet::one(f.t_trunc);
            basis.push_back(std::move(col));
        }
    } else {
        JetMatrix W(rows, bdeg + 1, f.t_trunc);
        for (int r = 0; r < rows; ++r) {
            int p = np - n + 1 + r;
            for (int q = 0; q <= bdeg; ++q) {
                int idx = p - q + n - m - 1;
                if (idx >= 0 && idx < static_cast<int>(f.e.size()))
                    W.at(r, q) = f.e[static_cast<size_t>(idx)];
            }
        }
        JetKernel K = jet_kernel(W);
        if (K.basis.empty()) throw BasisDegenerate("no section of the required twist");
        basis = K.basis;
        prec = std::min(prec, K.precision);
    }
    if (prec <= 0) throw PrecisionExhausted("representation lost all precision");

    auto truncate_col = [&](std::vector<Jet> col) {
        int vmin = prec;
        for (const auto& j : col) vmin = std::min(vmin, j.valuation());
        for (auto& j : col) j = (vmin > 0 ? j.shift_down(vmin).truncated(prec) : j.truncated(prec));
        return col;
    };

    // candidate sections: basis columns, then pairwise sums
    std::vector<std::vector<Jet>> cands;
    for (const auto& col : basis) cands.push_back(truncate_col(col));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            std::vector<Jet> col = basis[i];
            for (size_t k = 0; k < col.size(); ++k) col[k] = col[k] + basis[j][k];
            cands.push_back(truncate_col(col));
        }

    const int T = prec;
    std::vector<Jet> ecut;
    for (const auto& j : f.e) ecut.push_back(j.truncated(T));

    auto wb_coeff = [&](const std::vector<Jet>& b, int p) {
        Jet acc = Jet::zero(T);
        for (int q = 0; q <= bdeg; ++q) {
            int idx = p - q + n - m - 1;
            if (idx >= 0 && idx < static_cast<int>(ecut.size()))
                acc = acc + ecut[static_cast<size_t>(idx)] * b[static_cast<size_t>(q)].truncated(T);
        }
        return acc;
    };

    for (const auto& cand : cands) {
        std::vector<Jet> b;
        for (const auto& j : cand) b.push_back(j.truncated(T));
        // constraint window must vanish identically at this precision
        bool ok = true;
        for (int p = np - n + 1; p < 0 && ok; ++p)
            if (!wb_coeff(b, p).is_zero()) ok = false;
        if (!ok) continue;

        // chart-0 components: a = -(w b)_{>= 0}
        JPoly bp(b.begin(), b.end());
        jp_trim(bp);
        JPoly ap;
        {
            int top = bdeg + 0 + 1; // (w b) degrees reach at most bdeg - 1 + ... keep slack
            for (int p = 0; p <= top + gap; ++p) ap.push_back(-wb_coeff(b, p));
            jp_trim(ap);
        }
        UniPoly a0 = jp_central(ap), b0 = jp_central(bp);
        if (a0.is_zero() && b0.is_zero()) continue;
        if (!a0.is_zero() && !b0.is_zero() && poly_gcd(a0, b0).degree() > 0) continue;
        if (b0.is_zero() && a0.degree() > 0) continue;
        if (a0.is_zero() && b0.degree() > 0) continue;
        // infinity-chart components
        JPoly at, bt; // polynomials in s
        for (int j = 0; j <= np - m - 1; ++j) at.push_back(wb_coeff(b, np - n - j));
        jp_trim(at);
        for (int j = 0; j <= np - m; ++j) {
            int idx = np - m - j;
            bt.push_back(idx < static_cast<int>(b.size()) ? b[static_cast<size_t>(idx)]
                                                          : Jet::zero(T));
        }
        jp_trim(bt);
        Rational inf1 = jp_central(at).coeff(0), inf2 = jp_central(bt).coeff(0);
        if (inf1 == 0 && inf2 == 0) continue;

        // frames with determinant 1 on both charts
        auto [c, d] = bezout_complete(ap, bp, T);
        auto [ct, dt] = bezout_complete(at, bt, T);

        LMat P0;
        P0[0][0] = lp_from_jpoly(ap, +1);
        P0[0][1] = lp_from_jpoly(c, +1);
        P0[1][0] = lp_from_jpoly(bp, +1);
        P0[1][1] = lp_from_jpoly(d, +1);
        LMat Pinv; // inverse of the infinity frame, evaluated at s = 1/x
        Pinv[0][0] = lp_from_jpoly(dt, -1);
        Pinv[0][1] = lp_from_jpoly(jp_neg(ct), -1);
        Pinv[1][0] = lp_from_jpoly(jp_neg(bt), -1);
        Pinv[1][1] = lp_from_jpoly(at, -1);
        LMat TV;
        lp_set(TV[0][0], n, Jet::one(T));
        for (size_t i = 0; i < ecut.size(); ++i)
            lp_set(TV[0][1], m + 1 + static_cast<int>(i), ecut[i]);
        lp_set(TV[1][1], m, Jet::one(T));

        LMat M = lm_mul(Pinv, lm_mul(TV, P0));
        // expected shape [[x^n', u], [0, x^m']]
        auto expect_monomial = [&](const LPoly& p, int k) {
            for (const auto& [e, v] : p) {
                if (e == k) {
                    if (!(v == Jet::one(T))) return false;
                } else if (!v.is_zero()) {
                    return false;
                }
            }
            return p.count(k) == 1;
        };
        if (!M[1][0].empty()) continue;
        if (!expect_monomial(M[0][0], np) || !expect_monomial(M[1][1], mp)) continue;

        ExtensionFamily out;
        out.m = mp;
        out.n = np;
        out.t_trunc = T;
        for (int i = 0; i < np - mp - 1; ++i) {
            auto it = M[0][1].find(mp + 1 + i);
            out.e.push_back(it == M[0][1].end() ? Jet::zero(T) : it->second);
        }
        out.validate();
        return out;
    }
    throw BasisDegenerate("no nowhere-vanishing central section found");
}

QVec central_values(const ExtensionFamily& f) {
    QVec v;
    for (const auto& j : f.e) v.push_back(j.coeff(0));
    return v;
}

bool all_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// splitting type of the generic fiber, from specializations of t
std::pair<int, int> generic_splitting(const ExtensionFamily& f) {
    std::pair<int, int> best{0, f.m + f.n};
    for (long t0 : {1L, 2L, 3L, 5L, 7L}) {
        QVec e0;
        for (const auto& j : f.e) {
            UniPoly p(j.c);
            e0.push_back(p.eval(rat(t0)));
        }
        auto s = central_splitting(f.m, f.n, e0);
        if (s.first > best.first) best = s;
    }
    return best;
}

} // namespace

std::pair<ExtensionFamily, ReductionTrace> balance_limit(const ExtensionFamily& f,
                                                         int l) {
    f.validate();
    if (l < 0) throw MalformedInput("l must be nonnegative");
    if ((f.n - f.m - l) % 2 != 0)
        throw MalformedInput("l must have the parity of n-m");
    ReductionTrace trace;
    ExtensionFamily cur = f;
    if (f.n - f.m <= l) return {cur, trace};

    bool e_zero = true;
    for (const auto& j : f.e)
        if (!j.is_zero()) e_zero = false;
    if (e_zero) throw NonGenericInput("generic fiber is not l-balanced (e = 0)");
    {
        auto [mg, ng] = generic_splitting(f);
        if (ng - mg > l)
            throw NonGenericInput("generic fiber is not l-balanced");
    }

    auto central_maroni = [](const ExtensionFamily& g) {
        QVec e0 = central_values(g);
        if (all_zero(e0)) return std::pair<int, int>{g.n - g.m, 0};
        auto [mp, np] = central_splitting(g.m, g.n, e0);
        return std::pair<int, int>{np - mp, 1};
    };

    const int guard_max = 4 * (f.n - f.m) * f.t_trunc + 16;
    for (int guard = 0;; ++guard) {
        if (guard > guard_max) throw PrecisionExhausted("balance_limit iteration guard");
        auto [mar, nonzero] = central_maroni(cur);
        if (mar <= l) return {cur, trace};
        if (nonzero) {
            // class nonzero mod t but unbalanced: change the presentation
            // to match the central splitting before rewriting further
            auto [mp, np] = central_splitting(cur.m, cur.n, central_values(cur));
            cur = represent(cur, mp, np);
            trace.steps.push_back({StepKind::Represent, 0, 0, Rational(0)});
            continue;
        }
        // family is a blow-up: base-change minimally, then transform
        int N = 1;
        for (size_t i = 0; i < cur.e.size(); ++i) {
            int w = cur.m - cur.n + 1 + static_cast<int>(i);
            if (w >= 0 || cur.e[i].is_zero()) continue;
            int v = cur.e[i].valuation();
            N = std::max(N, (-w + v - 1) / v);
        }
        if (N > 1) {
            cur = base_change(cur, N);
            trace.steps.push_back({StepKind::BaseChange, N, 0, Rational(0)});
        }
        auto cok = blow_down_cokernel(cur);
        cur = transform_class(cur);
        trace.steps.push_back({StepKind::Transform, 0, 0, Rational(0)});
        trace.steps.push_back({StepKind::Fiber, 0, central_maroni(cur).first,
                               Rational(cok.second - cok.first)});
    }
}

bool epsilon_stable(const std::vector<int>& multiplicities, bool sigma_disjoint,
                    const Rational& eps) {
    if (multiplicities.empty()) throw MalformedInput("empty branch configuration");
    int b = 0;
    for (int m : multiplicities) {
        if (m <= 0) throw MalformedInput("multiplicities must be positive");
        b += m;
    }
    if (eps <= 0 || eps > 1) throw MalformedInput("eps must lie in (0, 1]");
    if (!sigma_disjoint) return false;
    for (int m : multiplicities)
        if (eps * m > 1) return false;
    return eps * b - 1 > 0;
}

} // namespace trig
