// Exact linear algebra over Z, Q and F_p: Smith normal form, kernels,
// constrained kernels and subquotients with generator representatives.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coefficient ring descriptor: Z, Q or F_p (p prime, p < 2^61).
struct Coefficients {
    enum class Tag { Z, Q, Fp };
    Tag tag = Tag::Z;
    long long p = 0;

    static Coefficients Z() { return {Tag::Z, 0}; }
    static Coefficients Q() { return {Tag::Q, 0}; }
    static Coefficients Fp(long long p);
    // "Z", "Q", "F2", "F7", ...
    static std::optional<Coefficients> parse(const std::string& s);

    bool is_field() const { return tag != Tag::Z; }
    std::string str() const;
    bool operator==(const Coefficients& o) const { return tag == o.tag && p == o.p; }
};

bool is_prime_u64(unsigned long long n);

// Dense row-major matrix. Columns are the vectors throughout this codebase:
// a matrix represents either a linear map or a generating set of a
// column span / column lattice.
template <class T>
struct Mat {
    int nr = 0, nc = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c, T(0)) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Mat transposed() const {
        Mat t(nc, nr);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(nr);
        for (int i = 0; i < nr; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(int j, const std::vector<T>& v) {
        for (int i = 0; i < nr; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        for (const T& x : a)
            if (x != T(0)) return false;
        return true;
    }

    bool operator==(const Mat& o) const { return nr == o.nr && nc == o.nc && a == o.a; }
};

using ZMat = Mat<Int>;

template <class T>
Mat<T> hcat(const Mat<T>& A, const Mat<T>& B) {
    if (A.nc == 0 && A.nr == 0) return B;
    if (B.nc == 0 && B.nr == 0) return A;
    if (A.nr != B.nr) throw std::invalid_argument("hcat: row mismatch");
    Mat<T> C(A.nr, A.nc + B.nc);
    for (int i = 0; i < A.nr; ++i) {
        for (int j = 0; j < A.nc; ++j) C(i, j) = A(i, j);
        for (int j = 0; j < B.nc; ++j) C(i, A.nc + j) = B(i, j);
    }
    return C;
}

// Finitely generated module invariant: free rank plus torsion coefficients
// in an ascending divisibility chain (each > 1). Over a field the torsion
// list is empty. Generator representatives, when present, are column
// vectors in an ambient basis (exact rational entries; integral for Z/F_p).
struct FGModule {
    long rank = 0;
    std::vector<Int> torsion;
    std::vector<std::vector<Rat>> generators;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool same_type(const FGModule& o) const { return rank == o.rank && torsion == o.torsion; }
    std::string str() const;
};

// Canonical ascending divisibility chain with the same primary decomposition
// (torsion coefficients here stay tiny, so trial-division factoring is fine).
std::vector<Int> canonical_torsion(const std::vector<Int>& t);

// Invariants of a + b (generators are not combined).
FGModule direct_sum(const FGModule& a, const FGModule& b);

// ---------------------------------------------------------------------------
// Integer lattice algebra (arbitrary precision throughout).

struct SmithResult {
    std::vector<Int> factors;  // d_1 | d_2 | ..., all > 0
    ZMat U, V, Uinv, Vinv;     // U*M*V = diag(factors), U and V unimodular
    long rank() const { return static_cast<long>(factors.size()); }
};

SmithResult smith_normal_form(const ZMat& M);

// Saturated basis of {x : Mx = 0} as columns.
ZMat z_kernel(const ZMat& M);

// Basis of the column lattice of M (columns independent).
ZMat z_column_basis(const ZMat& M);

// One integral solution of Mx = y, if any.
std::optional<std::vector<Int>> z_solve(const ZMat& M, const std::vector<Int>& y);

bool z_lattice_contains(const ZMat& gens, const std::vector<Int>& v);
bool z_lattice_equal(const ZMat& A, const ZMat& B);
long z_rank(const ZMat& M);

// Generating set of {x : Ax = 0 and Bx in im C}, as the projection of
// ker [A 0; B -C] onto the x block.
ZMat z_constrained_kernel(const ZMat& A, const ZMat& B, const ZMat& C);

// Presentation of (column lattice of Z) / (column lattice of Bnd), with
// generator representatives in the ambient basis. Column order of reps:
// torsion generators (ascending order), then free generators; `orders`
// is aligned (0 for free).
struct SubqZ {
    FGModule mod;
    ZMat reps;
    std::vector<Int> orders;
};

FGModule z_subquotient(const ZMat& Z, const ZMat& Bnd);
SubqZ z_subquotient_reps(const ZMat& Z, const ZMat& Bnd);

// Coordinates of the class of y in a subquotient presentation: solves
// [reps | bnd] c = y and reduces torsion coordinates mod their order.
std::optional<std::vector<Int>> z_class_coords(const SubqZ& q, const ZMat& bnd,
                                               const std::vector<Int>& y);

// ---------------------------------------------------------------------------
// Field arithmetic ops (plugged into the templated field algorithms below).

struct QOps {
    using E = Rat;
    static constexpr bool is_field = true;
    E from_int(const Int& x) const { return Rat(x); }
    E zero() const { return Rat(0); }
    E one() const { return Rat(1); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E neg(const E& a) const { return -a; }
    E inv(const E& a) const { return Rat(1) / a; }
    bool is_zero(const E& a) const { return a == 0; }
    Rat lift(const E& a) const { return a; }
};

struct FpOps {
    long long p = 2;
    using E = long long;
    static constexpr bool is_field = true;
    E from_int(const Int& x) const {
        Int r = x % p;
        if (r < 0) r += p;
        return r.convert_to<long long>();
    }
    E zero() const { return 0; }
    E one() const { return 1; }
    E add(E a, E b) const { E s = a + b; return s >= p ? s - p : s; }
    E sub(E a, E b) const { E s = a - b; return s < 0 ? s + p : s; }
    E mul(E a, E b) const {
        return static_cast<E>(static_cast<__int128>(a) * b % p);
    }
    E neg(E a) const { return a == 0 ? 0 : p - a; }
    E inv(E a) const;
    bool is_zero(E a) const { return a == 0; }
    Rat lift(E a) const { return Rat(a); }
};

template <class Ops>
Mat<typename Ops::E> mat_cast(const Ops& ops, const ZMat& M) {
    Mat<typename Ops::E> R(M.nr, M.nc);
    for (size_t k = 0; k < M.a.size(); ++k) R.a[k] = ops.from_int(M.a[k]);
    return R;
}

template <class Ops>
Mat<typename Ops::E> mat_mul(const Ops& ops, const Mat<typename Ops::E>& A,
                             const Mat<typename Ops::E>& B) {
    if (A.nc != B.nr) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat<typename Ops::E> C(A.nr, B.nc);
    for (int i = 0; i < A.nr; ++i)
        for (int k = 0; k < A.nc; ++k) {
            if (ops.is_zero(A(i, k))) continue;
            for (int j = 0; j < B.nc; ++j)
                C(i, j) = ops.add(C(i, j), ops.mul(A(i, k), B(k, j)));
        }
    return C;
}

// Row echelon reduction in place; returns pivot columns.
template <class Ops>
std::vector<int> f_rref(const Ops& ops, Mat<typename Ops::E>& M) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.nc && row < M.nr; ++col) {
        int pr = -1;
        for (int i = row; i < M.nr; ++i)
            if (!ops.is_zero(M(i, col))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < M.nc; ++j) std::swap(M(row, j), M(pr, j));
        auto piv_inv = ops.inv(M(row, col));
        for (int j = col; j < M.nc; ++j) M(row, j) = ops.mul(M(row, j), piv_inv);
        for (int i = 0; i < M.nr; ++i) {
            if (i == row || ops.is_zero(M(i, col))) continue;
            auto f = M(i, col);
            for (int j = col; j < M.nc; ++j)
                M(i, j) = ops.sub(M(i, j), ops.mul(f, M(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Ops>
long f_rank(const Ops& ops, Mat<typename Ops::E> M) {
    return static_cast<long>(f_rref(ops, M).size());
}

template <class Ops>
Mat<typename Ops::E> f_kernel(const Ops& ops, Mat<typename Ops::E> M) {
    const int n = M.nc;
    std::vector<int> pivots = f_rref(ops, M);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    Mat<typename Ops::E> K(n, n - static_cast<int>(pivots.size()));
    int kc = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        K(free, kc) = ops.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            K(pivots[r], kc) = ops.neg(M(static_cast<int>(r), free));
        ++kc;
    }
    return K;
}

// One solution of Mx = y, if any.
template <class Ops>
std::optional<std::vector<typename Ops::E>> f_solve(const Ops& ops,
                                                    const Mat<typename Ops::E>& M,
                                                    const std::vector<typename Ops::E>& y) {
    Mat<typename Ops::E> Aug(M.nr, M.nc + 1);
    for (int i = 0; i < M.nr; ++i) {
        for (int j = 0; j < M.nc; ++j) Aug(i, j) = M(i, j);
        Aug(i, M.nc) = y[i];
    }
    std::vector<int> pivots = f_rref(ops, Aug);
    std::vector<typename Ops::E> x(M.nc, ops.zero());
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == M.nc) return std::nullopt;  // inconsistent
        x[pivots[r]] = Aug(static_cast<int>(r), M.nc);
    }
    return x;
}

template <class Ops>
bool f_span_contains(const Ops& ops, const Mat<typename Ops::E>& gens,
                     const std::vector<typename Ops::E>& v) {
    return f_solve(ops, gens, v).has_value();
}

template <class Ops>
Mat<typename Ops::E> f_constrained_kernel(const Ops& ops, const Mat<typename Ops::E>& A,
                                          const Mat<typename Ops::E>& B,
                                          const Mat<typename Ops::E>& C) {
    if (A.nc != B.nc) throw std::invalid_argument("constrained_kernel: shape mismatch");
    if (B.nr != C.nr) throw std::invalid_argument("constrained_kernel: shape mismatch");
    const int nx = A.nc, nv = C.nc;
    Mat<typename Ops::E> S(A.nr + B.nr, nx + nv);
    for (int i = 0; i < A.nr; ++i)
        for (int j = 0; j < nx; ++j) S(i, j) = A(i, j);
    for (int i = 0; i < B.nr; ++i) {
        for (int j = 0; j < nx; ++j) S(A.nr + i, j) = B(i, j);
        for (int j = 0; j < nv; ++j) S(A.nr + i, nx + j) = ops.neg(C(i, j));
    }
    Mat<typename Ops::E> K = f_kernel(ops, S);
    Mat<typename Ops::E> X(nx, K.nc);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < K.nc; ++j) X(i, j) = K(i, j);
    return X;
}

template <class E>
struct SubqF {
    FGModule mod;
    Mat<E> reps;
};

// span(Z)/span(B) over a field; reps extend a basis of span(B) inside span(Z).
template <class Ops>
SubqF<typename Ops::E> f_subquotient_reps(const Ops& ops, const Mat<typename Ops::E>& Z,
                                          const Mat<typename Ops::E>& B) {
    long rb = f_rank(ops, B);
    long rzb = f_rank(ops, hcat(Z, B));
    if (rzb != f_rank(ops, Z))
        throw std::invalid_argument("subquotient: boundaries not contained in cycles");
    SubqF<typename Ops::E> out;
    out.mod.rank = rzb - rb;
    out.reps = Mat<typename Ops::E>(Z.nr, 0);
    Mat<typename Ops::E> acc = B;
    long cur = rb;
    for (int j = 0; j < Z.nc && cur < rzb; ++j) {
        Mat<typename Ops::E> trial = hcat(acc, [&] {
            Mat<typename Ops::E> c(Z.nr, 1);
            for (int i = 0; i < Z.nr; ++i) c(i, 0) = Z(i, j);
            return c;
        }());
        if (f_rank(ops, trial) > cur) {
            acc = trial;
            ++cur;
            Mat<typename Ops::E> c(Z.nr, 1);
            for (int i = 0; i < Z.nr; ++i) c(i, 0) = Z(i, j);
            out.reps = hcat(out.reps, c);
        }
    }
    if (out.reps.nr == 0) out.reps = Mat<typename Ops::E>(Z.nr, out.reps.nc);
    return out;
}

template <class Ops>
FGModule f_subquotient(const Ops& ops, const Mat<typename Ops::E>& Z,
                       const Mat<typename Ops::E>& B) {
    long rb = f_rank(ops, B);
    long rz = f_rank(ops, Z);
    if (f_rank(ops, hcat(Z, B)) != rz)
        throw std::invalid_argument("subquotient: boundaries not contained in cycles");
    FGModule m;
    m.rank = rz - rb;
    return m;
}

}  // namespace lhom
