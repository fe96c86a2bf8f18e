#include "lhom/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace lhom {

// ---------------------------------------------------------------------------
// Coefficients

bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [&](unsigned long long a, unsigned long long b) {
        return static_cast<unsigned long long>(
            static_cast<unsigned __int128>(a) * b % n);
    };
    auto powmod = [&](unsigned long long a, unsigned long long e) {
        unsigned long long r = 1;
        a %= n;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (unsigned long long a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                                 19ull, 23ull, 29ull, 31ull, 37ull}) {
        unsigned long long x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Coefficients Coefficients::Fp(long long p) {
    if (p < 2 || p >= (1ll << 61) || !is_prime_u64(static_cast<unsigned long long>(p)))
        throw std::invalid_argument("F<p> requires a prime p with 2 <= p < 2^61");
    return {Tag::Fp, p};
}

std::optional<Coefficients> Coefficients::parse(const std::string& s) {
    if (s == "Z" || s == "z") return Z();
    if (s == "Q" || s == "q") return Q();
    if ((s.size() > 1) && (s[0] == 'F' || s[0] == 'f')) {
        try {
            size_t pos = 0;
            long long p = std::stoll(s.substr(1), &pos);
            if (pos != s.size() - 1) return std::nullopt;
            return Fp(p);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::string Coefficients::str() const {
    switch (tag) {
        case Tag::Z: return "Z";
        case Tag::Q: return "Q";
        case Tag::Fp: return "F" + std::to_string(p);
    }
    return "?";
}

std::string FGModule::str() const {
    std::ostringstream os;
    if (is_trivial()) return "0";
    bool first = true;
    if (rank > 0) {
        os << "free^" << rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FpOps::E FpOps::inv(E a) const {
    // extended Euclid
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("FpOps::inv of non-unit");
    if (t < 0) t += p;
    return t;
}

// ---------------------------------------------------------------------------
// Smith normal form. Pivoting: smallest nonzero magnitude in the remaining
// submatrix, with repeated row/column gcd reduction. Correctness rests on
// the U*M*V postcondition, which the tests check directly.

namespace {

struct SnfWork {
    ZMat A, U, V, Uinv, Vinv;

    explicit SnfWork(const ZMat& M)
        : A(M),
          U(ZMat::identity(M.nr)),
          V(ZMat::identity(M.nc)),
          Uinv(ZMat::identity(M.nr)),
          Vinv(ZMat::identity(M.nc)) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.nc; ++c) std::swap(A(i, c), A(j, c));
        for (int c = 0; c < U.nc; ++c) std::swap(U(i, c), U(j, c));
        for (int r = 0; r < Uinv.nr; ++r) std::swap(Uinv(r, i), Uinv(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.nr; ++r) std::swap(A(r, i), A(r, j));
        for (int r = 0; r < V.nr; ++r) std::swap(V(r, i), V(r, j));
        for (int c = 0; c < Vinv.nc; ++c) std::swap(Vinv(i, c), Vinv(j, c));
    }
    // row j += q * row i
    void add_row(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < A.nc; ++c) A(j, c) += q * A(i, c);
        for (int c = 0; c < U.nc; ++c) U(j, c) += q * U(i, c);
        for (int r = 0; r < Uinv.nr; ++r) Uinv(r, i) -= q * Uinv(r, j);
    }
    // col j += q * col i
    void add_col(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < A.nr; ++r) A(r, j) += q * A(r, i);
        for (int r = 0; r < V.nr; ++r) V(r, j) += q * V(r, i);
        for (int c = 0; c < Vinv.nc; ++c) Vinv(i, c) -= q * Vinv(j, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < A.nc; ++c) A(i, c) = -A(i, c);
        for (int c = 0; c < U.nc; ++c) U(i, c) = -U(i, c);
        for (int r = 0; r < Uinv.nr; ++r) Uinv(r, i) = -Uinv(r, i);
    }
    // [row k; row i] <- [[x, y], [-b, a]] * [row k; row i], unimodular when
    // x*a + y*b = 1; leaves A(k,k) = g and A(i,k) = 0.
    void combine_rows(int k, int i, const Int& x, const Int& y, const Int& a,
                      const Int& b) {
        for (int c = 0; c < A.nc; ++c) {
            Int rk = w2(x, A(k, c), y, A(i, c));
            Int ri = w2(-b, A(k, c), a, A(i, c));
            A(k, c) = rk;
            A(i, c) = ri;
        }
        for (int c = 0; c < U.nc; ++c) {
            Int rk = w2(x, U(k, c), y, U(i, c));
            Int ri = w2(-b, U(k, c), a, U(i, c));
            U(k, c) = rk;
            U(i, c) = ri;
        }
        // Uinv <- Uinv * T^{-1}, T^{-1} = [[a, -y], [b, x]] on columns k, i
        for (int r = 0; r < Uinv.nr; ++r) {
            Int ck = w2(a, Uinv(r, k), b, Uinv(r, i));
            Int ci = w2(-y, Uinv(r, k), x, Uinv(r, i));
            Uinv(r, k) = ck;
            Uinv(r, i) = ci;
        }
    }
    // [col k, col j] <- [col k, col j] * [[x, -b], [y, a]]
    void combine_cols(int k, int j, const Int& x, const Int& y, const Int& a,
                      const Int& b) {
        for (int r = 0; r < A.nr; ++r) {
            Int ck = w2(x, A(r, k), y, A(r, j));
            Int cj = w2(-b, A(r, k), a, A(r, j));
            A(r, k) = ck;
            A(r, j) = cj;
        }
        for (int r = 0; r < V.nr; ++r) {
            Int ck = w2(x, V(r, k), y, V(r, j));
            Int cj = w2(-b, V(r, k), a, V(r, j));
            V(r, k) = ck;
            V(r, j) = cj;
        }
        // Vinv <- S^{-1} * Vinv, S^{-1} = [[a, b], [-y, x]] on rows k, j
        for (int c = 0; c < Vinv.nc; ++c) {
            Int rk = w2(a, Vinv(k, c), b, Vinv(j, c));
            Int rj = w2(-y, Vinv(k, c), x, Vinv(j, c));
            Vinv(k, c) = rk;
            Vinv(j, c) = rj;
        }
    }

  private:
    static Int w2(const Int& p, const Int& u, const Int& q, const Int& v) {
        return p * u + q * v;
    }
};

// g = gcd(a, b) > 0 with x*a + y*b = g.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    g = old_r;
    x = old_x;
    y = old_y;
}

}  // namespace

SmithResult smith_normal_form(const ZMat& M) {
    SnfWork w(M);
    const int n = M.nr, m = M.nc;
    int k = 0;
    while (k < n && k < m) {
        // locate smallest nonzero magnitude pivot in the trailing block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = k; i < n; ++i)
            for (int j = k; j < m; ++j) {
                if (w.A(i, j) == 0) continue;
                Int mag = abs(w.A(i, j));
                if (pi < 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        // Clear column k then row k with unimodular gcd combinations; a
        // column pass can only dirty the row (and vice versa) when the pivot
        // strictly shrinks to a proper divisor, so this terminates quickly.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < n; ++i) {
                if (w.A(i, k) == 0) continue;
                if (w.A(i, k) % w.A(k, k) == 0) {
                    w.add_row(k, i, -w.A(i, k) / w.A(k, k));
                } else {
                    Int g, x, y;
                    ext_gcd(w.A(k, k), w.A(i, k), g, x, y);
                    w.combine_rows(k, i, x, y, w.A(k, k) / g, w.A(i, k) / g);
                }
            }
            for (int j = k + 1; j < m; ++j) {
                if (w.A(k, j) == 0) continue;
                if (w.A(k, j) % w.A(k, k) == 0) {
                    w.add_col(k, j, -w.A(k, j) / w.A(k, k));
                } else {
                    Int g, x, y;
                    ext_gcd(w.A(k, k), w.A(k, j), g, x, y);
                    w.combine_cols(k, j, x, y, w.A(k, k) / g, w.A(k, j) / g);
                    clean = false;  // the column combination dirtied column k
                }
            }
        }

        // enforce the divisibility chain: pivot must divide the trailing block
        bool redo = false;
        for (int i = k + 1; i < n && !redo; ++i)
            for (int j = k + 1; j < m && !redo; ++j)
                if (w.A(i, j) % w.A(k, k) != 0) {
                    w.add_row(i, k, 1);
                    redo = true;
                }
        if (redo) continue;  // re-clear from the same k

        if (w.A(k, k) < 0) w.negate_row(k);
        ++k;
    }

    SmithResult out;
    for (int i = 0; i < k; ++i) out.factors.push_back(w.A(i, i));
    out.U = std::move(w.U);
    out.V = std::move(w.V);
    out.Uinv = std::move(w.Uinv);
    out.Vinv = std::move(w.Vinv);
    return out;
}

long z_rank(const ZMat& M) { return smith_normal_form(M).rank(); }

ZMat z_kernel(const ZMat& M) {
    SmithResult s = smith_normal_form(M);
    long r = s.rank();
    ZMat K(M.nc, M.nc - static_cast<int>(r));
    for (int j = 0; j < K.nc; ++j)
        for (int i = 0; i < M.nc; ++i) K(i, j) = s.V(i, static_cast<int>(r) + j);
    return K;
}

ZMat z_column_basis(const ZMat& M) {
    SmithResult s = smith_normal_form(M);
    long r = s.rank();
    ZMat B(M.nr, static_cast<int>(r));
    for (int j = 0; j < static_cast<int>(r); ++j)
        for (int i = 0; i < M.nr; ++i) B(i, j) = s.factors[j] * s.Uinv(i, j);
    return B;
}

std::optional<std::vector<Int>> z_solve(const ZMat& M, const std::vector<Int>& y) {
    SmithResult s = smith_normal_form(M);
    long r = s.rank();
    // z = D^-1 U y, then x = V z
    std::vector<Int> uy(M.nr, 0);
    for (int i = 0; i < M.nr; ++i)
        for (int j = 0; j < M.nr; ++j)
            if (s.U(i, j) != 0) uy[i] += s.U(i, j) * y[j];
    std::vector<Int> z(M.nc, 0);
    for (int i = 0; i < M.nr; ++i) {
        if (i < r) {
            if (uy[i] % s.factors[i] != 0) return std::nullopt;
            z[i] = uy[i] / s.factors[i];
        } else if (uy[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(M.nc, 0);
    for (int i = 0; i < M.nc; ++i)
        for (int j = 0; j < M.nc; ++j)
            if (s.V(i, j) != 0) x[i] += s.V(i, j) * z[j];
    return x;
}

bool z_lattice_contains(const ZMat& gens, const std::vector<Int>& v) {
    return z_solve(gens, v).has_value();
}

bool z_lattice_equal(const ZMat& A, const ZMat& B) {
    if (A.nr != B.nr) return false;
    for (int j = 0; j < B.nc; ++j)
        if (!z_lattice_contains(A, B.col(j))) return false;
    for (int j = 0; j < A.nc; ++j)
        if (!z_lattice_contains(B, A.col(j))) return false;
    return true;
}

ZMat z_constrained_kernel(const ZMat& A, const ZMat& B, const ZMat& C) {
    if (A.nc != B.nc || B.nr != C.nr)
        throw std::invalid_argument("constrained_kernel: shape mismatch");
    const int nx = A.nc, nv = C.nc;
    ZMat S(A.nr + B.nr, nx + nv);
    for (int i = 0; i < A.nr; ++i)
        for (int j = 0; j < nx; ++j) S(i, j) = A(i, j);
    for (int i = 0; i < B.nr; ++i) {
        for (int j = 0; j < nx; ++j) S(A.nr + i, j) = B(i, j);
        for (int j = 0; j < nv; ++j) S(A.nr + i, nx + j) = -C(i, j);
    }
    ZMat K = z_kernel(S);
    ZMat X(nx, K.nc);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < K.nc; ++j) X(i, j) = K(i, j);
    return X;
}

SubqZ z_subquotient_reps(const ZMat& Z, const ZMat& Bnd) {
    SubqZ out;
    ZMat Zb = z_column_basis(Z);
    const int r = Zb.nc;
    if (r == 0) {
        if (!Bnd.is_zero())
            throw std::invalid_argument("subquotient: boundaries not contained in cycles");
        out.reps = ZMat(Z.nr, 0);
        return out;
    }
    // express each boundary generator in the cycle basis
    ZMat X(r, Bnd.nc);
    for (int j = 0; j < Bnd.nc; ++j) {
        auto sol = z_solve(Zb, Bnd.col(j));
        if (!sol)
            throw std::invalid_argument("subquotient: boundaries not contained in cycles");
        for (int i = 0; i < r; ++i) X(i, j) = (*sol)[i];
    }
    SmithResult s = smith_normal_form(X);
    std::vector<Int> e(static_cast<size_t>(r), 0);
    for (size_t i = 0; i < s.factors.size(); ++i) e[i] = s.factors[i];

    // generators of the quotient: columns of Zb * Uinv; order e_i each
    ZMat G(Z.nr, r);
    for (int i = 0; i < Z.nr; ++i)
        for (int j = 0; j < r; ++j) {
            Int acc = 0;
            for (int t = 0; t < r; ++t)
                if (Zb(i, t) != 0 && s.Uinv(t, j) != 0) acc += Zb(i, t) * s.Uinv(t, j);
            G(i, j) = acc;
        }

    std::vector<int> keep;
    for (int j = 0; j < r; ++j)
        if (e[j] != 1) keep.push_back(j);  // torsion first (SNF order), then free
    out.reps = ZMat(Z.nr, static_cast<int>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c) {
        out.orders.push_back(e[keep[c]]);
        for (int i = 0; i < Z.nr; ++i) out.reps(i, static_cast<int>(c)) = G(i, keep[c]);
    }
    for (const Int& d : out.orders) {
        if (d == 0)
            ++out.mod.rank;
        else
            out.mod.torsion.push_back(d);
    }
    for (int j = 0; j < out.reps.nc; ++j) {
        std::vector<Rat> g(Z.nr);
        for (int i = 0; i < Z.nr; ++i) g[i] = Rat(out.reps(i, j));
        out.mod.generators.push_back(std::move(g));
    }
    return out;
}

FGModule z_subquotient(const ZMat& Z, const ZMat& Bnd) {
    SubqZ q = z_subquotient_reps(Z, Bnd);
    q.mod.generators.clear();
    return q.mod;
}

std::optional<std::vector<Int>> z_class_coords(const SubqZ& q, const ZMat& bnd,
                                               const std::vector<Int>& y) {
    ZMat M = hcat(q.reps, bnd);
    if (M.nr == 0 && M.nc == 0) M = ZMat(static_cast<int>(y.size()), 0);
    auto sol = z_solve(M, y);
    if (!sol) return std::nullopt;
    std::vector<Int> c(q.reps.nc);
    for (int i = 0; i < q.reps.nc; ++i) {
        c[i] = (*sol)[i];
        if (q.orders[i] > 1) {
            c[i] %= q.orders[i];
            if (c[i] < 0) c[i] += q.orders[i];
        }
    }
    return c;
}

std::vector<Int> canonical_torsion(const std::vector<Int>& t) {
    std::map<Int, std::vector<int>> primary;  // prime -> exponents, desc
    for (Int d : t) {
        if (d < 0) d = -d;
        if (d <= 1) continue;
        for (Int p = 2; p * p <= d; ++p) {
            int e = 0;
            while (d % p == 0) { d /= p; ++e; }
            if (e) primary[p].push_back(e);
        }
        if (d > 1) primary[d].push_back(1);
    }
    size_t slots = 0;
    for (auto& [p, es] : primary) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        slots = std::max(slots, es.size());
    }
    std::vector<Int> chain(slots, Int(1));  // chain[0] = largest factor
    for (const auto& [p, es] : primary)
        for (size_t k = 0; k < es.size(); ++k)
            for (int e = 0; e < es[k]; ++e) chain[k] *= p;
    std::reverse(chain.begin(), chain.end());
    return chain;
}

FGModule direct_sum(const FGModule& a, const FGModule& b) {
    FGModule s;
    s.rank = a.rank + b.rank;
    std::vector<Int> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    s.torsion = canonical_torsion(t);
    return s;
}

}  // namespace lhom
