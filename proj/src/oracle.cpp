#include "lhom/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lhom/chain.hpp"

namespace lhom {
namespace oracle {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

ZMat zmul(const ZMat& a, const ZMat& b) {
    if (a.nc != b.nr) throw std::invalid_argument("oracle zmul: shape mismatch");
    ZMat c(a.nr, b.nc);
    for (int i = 0; i < a.nr; ++i)
        for (int k = 0; k < a.nc; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.nc; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

// Integer column echelon reduction; returns the number of echelon columns
// and leaves A reduced, with the same column operations applied to T.
int column_echelon(ZMat& A, ZMat& T) {
    int lead = 0;
    for (int r = 0; r < A.nr && lead < A.nc; ++r) {
        while (true) {
            int best = -1;
            int count = 0;
            for (int j = lead; j < A.nc; ++j) {
                if (A(r, j) == 0) continue;
                ++count;
                if (best < 0 || iabs(A(r, j)) < iabs(A(r, best))) best = j;
            }
            if (count == 0) break;
            if (count == 1) {
                for (int i = 0; i < A.nr; ++i) std::swap(A(i, lead), A(i, best));
                for (int i = 0; i < T.nr; ++i) std::swap(T(i, lead), T(i, best));
                ++lead;
                break;
            }
            for (int j = lead; j < A.nc; ++j) {
                if (j == best || A(r, j) == 0) continue;
                Int q = A(r, j) / A(r, best);
                if (q == 0) continue;
                for (int i = 0; i < A.nr; ++i) A(i, j) -= q * A(i, best);
                for (int i = 0; i < T.nr; ++i) T(i, j) -= q * T(i, best);
            }
            // truncated division may leave remainders; loop again
            bool progress = false;
            for (int j = lead; j < A.nc; ++j)
                if (j != best && A(r, j) != 0) progress = true;
            if (!progress) {
                for (int i = 0; i < A.nr; ++i) std::swap(A(i, lead), A(i, best));
                for (int i = 0; i < T.nr; ++i) std::swap(T(i, lead), T(i, best));
                ++lead;
                break;
            }
        }
    }
    return lead;
}

std::optional<std::vector<Rat>> rat_solve(const ZMat& M, const std::vector<Int>& y) {
    Mat<Rat> A(M.nr, M.nc + 1);
    for (int i = 0; i < M.nr; ++i) {
        for (int j = 0; j < M.nc; ++j) A(i, j) = Rat(M(i, j));
        A(i, M.nc) = Rat(y[i]);
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col <= M.nc && row < M.nr; ++col) {
        int pr = -1;
        for (int i = row; i < M.nr; ++i)
            if (A(i, col) != 0) { pr = i; break; }
        if (pr < 0) continue;
        for (int j = 0; j <= M.nc; ++j) std::swap(A(row, j), A(pr, j));
        Rat piv = A(row, col);
        for (int j = col; j <= M.nc; ++j) A(row, j) /= piv;
        for (int i = 0; i < M.nr; ++i) {
            if (i == row || A(i, col) == 0) continue;
            Rat f = A(i, col);
            for (int j = col; j <= M.nc; ++j) A(i, j) -= f * A(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<Rat> x(static_cast<size_t>(M.nc), Rat(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) {
        if (pivot_col[r] == M.nc) return std::nullopt;
        x[static_cast<size_t>(pivot_col[r])] = A(static_cast<int>(r), M.nc);
    }
    return x;
}

}  // namespace

std::vector<Int> snf_factors(const ZMat& M) {
    ZMat A = M;
    std::vector<Int> factors;
    int r0 = 0, c0 = 0;
    while (r0 < A.nr && c0 < A.nc) {
        int pi = -1, pj = -1;
        for (int i = r0; i < A.nr; ++i)
            for (int j = c0; j < A.nc; ++j)
                if (A(i, j) != 0 &&
                    (pi < 0 || iabs(A(i, j)) < iabs(A(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        for (int j = 0; j < A.nc; ++j) std::swap(A(r0, j), A(pi, j));
        for (int i = 0; i < A.nr; ++i) std::swap(A(i, c0), A(i, pj));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = r0 + 1; i < A.nr; ++i) {
                if (A(i, c0) == 0) continue;
                Int q = A(i, c0) / A(r0, c0);
                for (int j = c0; j < A.nc; ++j) A(i, j) -= q * A(r0, j);
                if (A(i, c0) != 0) {  // remainder smaller than pivot: swap up
                    for (int j = 0; j < A.nc; ++j) std::swap(A(r0, j), A(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = c0 + 1; j < A.nc; ++j) {
                if (A(r0, j) == 0) continue;
                Int q = A(r0, j) / A(r0, c0);
                for (int i = r0; i < A.nr; ++i) A(i, j) -= q * A(i, c0);
                if (A(r0, j) != 0) {
                    for (int i = 0; i < A.nr; ++i) std::swap(A(i, c0), A(i, j));
                    clean = false;
                }
            }
        }
        factors.push_back(iabs(A(r0, c0)));
        ++r0;
        ++c0;
    }
    // enforce the divisibility chain by pairwise gcd/lcm exchanges
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < factors.size(); ++i)
            for (size_t j = i + 1; j < factors.size(); ++j)
                if (factors[j] % factors[i] != 0) {
                    Int g = boost::multiprecision::gcd(factors[i], factors[j]);
                    Int l = factors[i] / g * factors[j];
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

ZMat kernel(const ZMat& M) {
    ZMat A = M;
    ZMat T = ZMat::identity(M.nc);
    int lead = column_echelon(A, T);
    ZMat K(M.nc, M.nc - lead);
    for (int j = lead; j < M.nc; ++j)
        for (int i = 0; i < M.nc; ++i) K(i, j - lead) = T(i, j);
    return K;
}

ZMat column_basis(const ZMat& M) {
    ZMat A = M;
    ZMat T = ZMat::identity(M.nc);
    int lead = column_echelon(A, T);
    ZMat B(M.nr, lead);
    for (int j = 0; j < lead; ++j)
        for (int i = 0; i < M.nr; ++i) B(i, j) = A(i, j);
    return B;
}

FGModule z_quotient(const ZMat& Z, const ZMat& B) {
    ZMat H = column_basis(Z);
    ZMat C(H.nc, B.nc);
    for (int j = 0; j < B.nc; ++j) {
        auto sol = rat_solve(H, B.col(j));
        if (!sol) throw std::logic_error("oracle z_quotient: boundary outside cycles");
        for (int i = 0; i < H.nc; ++i) {
            if (denominator((*sol)[static_cast<size_t>(i)]) != 1)
                throw std::logic_error("oracle z_quotient: non-integral coordinates");
            C(i, j) = numerator((*sol)[static_cast<size_t>(i)]);
        }
    }
    std::vector<Int> factors = snf_factors(C);
    FGModule m;
    m.rank = H.nc - static_cast<long>(factors.size());
    for (const Int& f : factors)
        if (f > 1) m.torsion.push_back(f);
    m.torsion = canonical_torsion(m.torsion);
    return m;
}

// ---------------------------------------------------------------------------
// Field elimination, persistence style: reduce each column against earlier
// columns sharing the same lowest nonzero row.

namespace {

template <class Ops>
struct FElim {
    long rank = 0;
    Mat<typename Ops::E> ker;  // columns
};

template <class Ops>
FElim<Ops> felim(const Ops& ops, Mat<typename Ops::E> A) {
    using E = typename Ops::E;
    Mat<E> T = Mat<E>::identity(A.nc);
    auto low = [&](int j) {
        for (int i = A.nr - 1; i >= 0; --i)
            if (!ops.is_zero(A(i, j))) return i;
        return -1;
    };
    std::vector<int> lows(static_cast<size_t>(A.nc), -1);
    std::vector<int> owner(static_cast<size_t>(std::max(A.nr, 1)), -1);
    std::vector<int> kercols;
    for (int j = 0; j < A.nc; ++j) {
        int l = low(j);
        while (l >= 0 && owner[static_cast<size_t>(l)] >= 0) {
            int k = owner[static_cast<size_t>(l)];
            E f = ops.mul(A(l, j), ops.inv(A(l, k)));
            for (int i = 0; i <= l; ++i)
                A(i, j) = ops.sub(A(i, j), ops.mul(f, A(i, k)));
            for (int i = 0; i < T.nr; ++i)
                T(i, j) = ops.sub(T(i, j), ops.mul(f, T(i, k)));
            l = low(j);
        }
        lows[static_cast<size_t>(j)] = l;
        if (l >= 0)
            owner[static_cast<size_t>(l)] = j;
        else
            kercols.push_back(j);
    }
    FElim<Ops> out;
    out.rank = static_cast<long>(A.nc - static_cast<int>(kercols.size()));
    out.ker = Mat<E>(A.nc, static_cast<int>(kercols.size()));
    for (size_t c = 0; c < kercols.size(); ++c)
        for (int i = 0; i < A.nc; ++i) out.ker(i, static_cast<int>(c)) = T(i, kercols[c]);
    return out;
}

template <class Ops>
long frank(const Ops& ops, const Mat<typename Ops::E>& A) {
    return felim(ops, A).rank;
}

// Projection of ker [A 0; B -C] onto the x block.
ZMat stack_for_constraint(const ZMat& A, const ZMat& B, const ZMat& C) {
    ZMat S(A.nr + B.nr, A.nc + C.nc);
    for (int i = 0; i < A.nr; ++i)
        for (int j = 0; j < A.nc; ++j) S(i, j) = A(i, j);
    for (int i = 0; i < B.nr; ++i) {
        for (int j = 0; j < B.nc; ++j) S(A.nr + i, j) = B(i, j);
        for (int j = 0; j < C.nc; ++j) S(A.nr + i, A.nc + j) = -C(i, j);
    }
    return S;
}

ZMat take_rows(const ZMat& M, int n) {
    ZMat R(n, M.nc);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < M.nc; ++j) R(i, j) = M(i, j);
    return R;
}

template <class Ops>
Mat<typename Ops::E> take_rows_f(const Mat<typename Ops::E>& M, int n) {
    Mat<typename Ops::E> R(n, M.nc);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < M.nc; ++j) R(i, j) = M(i, j);
    return R;
}

template <class Ops>
BigradedGroups e2_direct_f(const Ops& ops, const DoubleComplex& dc) {
    BigradedGroups out;
    out.reduced = dc.reduced();
    for (const auto& [bd, pairs] : dc.blocks()) {
        if (pairs.empty()) continue;
        const auto& [s, t] = bd;
        ZMat S = stack_for_constraint(dc.Delta(s, t), dc.D(s, t), dc.Delta(s - 1, t - 1));
        auto kerS = felim(ops, mat_cast(ops, S)).ker;
        auto Zg = take_rows_f<Ops>(kerS, dc.block_dim(s, t));
        auto kerUp = felim(ops, mat_cast(ops, dc.Delta(s + 1, t))).ker;
        auto B2 = mat_mul(ops, mat_cast(ops, dc.D(s + 1, t)), kerUp);
        auto Bg = hcat(mat_cast(ops, dc.Delta(s, t - 1)), B2);
        long dim = frank(ops, Zg) - frank(ops, Bg);
        if (dim > 0) {
            FGModule m;
            m.rank = dim;
            out.set(s, t, std::move(m));
        }
    }
    return out;
}

template <class Ops>
BigradedGroups e1_direct_f(const Ops& ops, const DoubleComplex& dc) {
    BigradedGroups out;
    out.reduced = dc.reduced();
    out.page = 1;
    for (const auto& [bd, pairs] : dc.blocks()) {
        if (pairs.empty()) continue;
        const auto& [s, t] = bd;
        long nullity = dc.block_dim(s, t) - frank(ops, mat_cast(ops, dc.Delta(s, t)));
        long rk_prev = frank(ops, mat_cast(ops, dc.Delta(s, t - 1)));
        long dim = nullity - rk_prev;
        if (dim > 0) {
            FGModule m;
            m.rank = dim;
            out.set(s, t, std::move(m));
        }
    }
    return out;
}

template <class F1, class F2, class F3>
auto oracle_dispatch(const Coefficients& coeff, F1&& fz, F2&& fq, F3&& fp) {
    switch (coeff.tag) {
        case Coefficients::Tag::Z:
            return fz();
        case Coefficients::Tag::Q:
            return fq();
        case Coefficients::Tag::Fp:
        default:
            return fp();
    }
}

}  // namespace

BigradedGroups e1_direct(const Complex& K, const Coefficients& coeff, bool reduced) {
    DoubleComplex dc = build_double_complex(K, reduced);
    BigradedGroups out = oracle_dispatch(
        coeff,
        [&] {
            BigradedGroups g;
            g.reduced = reduced;
            g.page = 1;
            for (const auto& [bd, pairs] : dc.blocks()) {
                if (pairs.empty()) continue;
                const auto& [s, t] = bd;
                FGModule m = z_quotient(kernel(dc.Delta(s, t)), dc.Delta(s, t - 1));
                g.set(s, t, std::move(m));
            }
            return g;
        },
        [&] { return e1_direct_f(QOps{}, dc); },
        [&] { return e1_direct_f(FpOps{coeff.p}, dc); });
    out.coeff = coeff;
    out.page = 1;
    return out;
}

BigradedGroups e2_direct(const Complex& K, const Coefficients& coeff, bool reduced) {
    DoubleComplex dc = build_double_complex(K, reduced);
    BigradedGroups out = oracle_dispatch(
        coeff,
        [&] {
            BigradedGroups g;
            g.reduced = reduced;
            for (const auto& [bd, pairs] : dc.blocks()) {
                if (pairs.empty()) continue;
                const auto& [s, t] = bd;
                ZMat S = stack_for_constraint(dc.Delta(s, t), dc.D(s, t),
                                              dc.Delta(s - 1, t - 1));
                ZMat Zg = take_rows(kernel(S), dc.block_dim(s, t));
                ZMat B2 = zmul(dc.D(s + 1, t), kernel(dc.Delta(s + 1, t)));
                ZMat Bg = hcat(dc.Delta(s, t - 1), B2);
                g.set(s, t, z_quotient(Zg, Bg));
            }
            return g;
        },
        [&] { return e2_direct_f(QOps{}, dc); },
        [&] { return e2_direct_f(FpOps{coeff.p}, dc); });
    out.coeff = coeff;
    return out;
}

// ---------------------------------------------------------------------------
// Random complexes and the invariance fuzzer

Complex random_complex(std::mt19937_64& rng, int max_vertices, int max_dim,
                       std::string* descriptor) {
    const int nv = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(
                                                   std::max(max_vertices, 1)));
    std::vector<std::string> names;
    for (int i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));

    std::set<Simplex> accepted;
    for (int v = 0; v < nv; ++v) accepted.insert({v});
    std::ostringstream desc;
    desc << "nv=" << nv;
    for (int k = 1; k <= max_dim; ++k) {
        const int pk = 20 + static_cast<int>(rng() % 60);  // percent
        desc << ";p" << k << "=" << pk;
        // candidates = (k+1)-subsets whose facets are all accepted
        std::vector<int> idx(static_cast<size_t>(k + 1));
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == k + 1) {
                Simplex cand(idx.begin(), idx.end());
                for (size_t drop = 0; drop < cand.size(); ++drop) {
                    Simplex f;
                    for (size_t i = 0; i < cand.size(); ++i)
                        if (i != drop) f.push_back(cand[i]);
                    if (!accepted.count(f)) return;
                }
                if (static_cast<int>(rng() % 100) < pk) accepted.insert(cand);
                return;
            }
            for (int v = start; v < nv; ++v) {
                idx[static_cast<size_t>(pos)] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 0);
    }
    std::vector<Simplex> simps(accepted.begin(), accepted.end());
    Complex K(names, simps);
    if (descriptor) {
        desc << ";maximal=";
        bool first = true;
        for (const Simplex& s : K.maximal_simplices()) {
            if (!first) desc << "|";
            first = false;
            desc << simplex_str(K, s);
        }
        *descriptor = desc.str();
    }
    return K;
}

FuzzReport fuzz_invariance(unsigned long long seed, int trials, int max_vertices,
                           int max_dim) {
    FuzzReport rep;
    rep.seed = seed;
    rep.trials = trials;
    rep.max_vertices = max_vertices;
    rep.max_dim = max_dim;
    std::mt19937_64 rng(seed);
    const Coefficients cz = Coefficients::Z();
    const Coefficients f2 = Coefficients::Fp(2);

    for (int trial = 0; trial < trials; ++trial) {
        FuzzTrial t;
        t.index = trial;
        Complex K = random_complex(rng, max_vertices, max_dim, &t.complex_desc);
        std::vector<Simplex> candidates;
        for (const Simplex& s : K.all_simplices())
            if (!s.empty()) candidates.push_back(s);
        const Simplex sigma =
            candidates[static_cast<size_t>(rng() % candidates.size())];
        t.sigma = simplex_str(K, sigma);
        Complex L = stellar_subdivision(K, sigma);

        std::ostringstream fails;
        for (const Coefficients& coeff : {cz, f2}) {
            for (bool reduced : {true, false}) {
                BigradedGroups a = l_homology(K, coeff, reduced);
                BigradedGroups b = l_homology(L, coeff, reduced);
                if (!a.same_groups(b)) {
                    t.lh_ok = false;
                    fails << "coeff=" << coeff.str()
                          << (reduced ? " reduced" : " unreduced") << ":\n"
                          << a.diff(b);
                }
            }
        }
        t.failure = fails.str();
        if (!t.lh_ok) ++rep.failures;

        RHomologyResult ra = r_homology(K, f2);
        RHomologyResult rb = r_homology(L, f2);
        t.r_differs = !ra.groups.same_groups(rb.groups) ||
                      ra.complement_empty != rb.complement_empty;
        if (t.r_differs && !rep.r_witness_found) {
            rep.r_witness_found = true;
            rep.r_witness = "complex{" + t.complex_desc + "} sigma{" + t.sigma + "}";
        }
        rep.trial_results.push_back(std::move(t));
    }
    return rep;
}

}  // namespace oracle
}  // namespace lhom
