// Uniform linear-algebra backends over Z (lattices via Smith normal form)
// and over fields (Gaussian elimination), used by the homology machinery.
#pragma once

#include "lhom/algebra.hpp"

namespace lhom {

template <class E>
struct Subq {
    FGModule mod;
    Mat<E> reps;
    std::vector<Int> orders;  // 0 = free; aligned with reps columns
};

struct LinZ {
    using E = Int;
    static constexpr bool is_field = false;

    Mat<E> cast(const ZMat& m) const { return m; }
    Rat lift(const E& x) const { return Rat(x); }
    E from_lift(const Rat& r) const {
        if (denominator(r) != 1) throw std::invalid_argument("non-integral lift over Z");
        return numerator(r);
    }
    E add(const E& a, const E& b) const { return a + b; }
    E neg(const E& a) const { return -a; }
    bool is_zero(const E& a) const { return a == 0; }
    Mat<E> mul(const Mat<E>& a, const Mat<E>& b) const;
    long rank(const Mat<E>& m) const { return z_rank(m); }
    Mat<E> kernel(const Mat<E>& m) const { return z_kernel(m); }
    Mat<E> constrained_kernel(const Mat<E>& a, const Mat<E>& b, const Mat<E>& c) const {
        return z_constrained_kernel(a, b, c);
    }
    FGModule subquotient(const Mat<E>& z, const Mat<E>& b) const {
        return z_subquotient(z, b);
    }
    Subq<E> subquotient_reps(const Mat<E>& z, const Mat<E>& b) const {
        SubqZ q = z_subquotient_reps(z, b);
        return Subq<E>{std::move(q.mod), std::move(q.reps), std::move(q.orders)};
    }
    std::optional<std::vector<E>> class_coords(const Subq<E>& q, const Mat<E>& bnd,
                                               const std::vector<E>& y) const {
        SubqZ qz{q.mod, q.reps, q.orders};
        return z_class_coords(qz, bnd, y);
    }
    bool span_contains(const Mat<E>& gens, const std::vector<E>& v) const {
        return z_lattice_contains(gens, v);
    }
    bool span_equal(const Mat<E>& a, const Mat<E>& b) const { return z_lattice_equal(a, b); }
};

inline Mat<Int> LinZ::mul(const Mat<Int>& a, const Mat<Int>& b) const {
    if (a.nc != b.nr) throw std::invalid_argument("mul: shape mismatch");
    Mat<Int> c(a.nr, b.nc);
    for (int i = 0; i < a.nr; ++i)
        for (int k = 0; k < a.nc; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.nc; ++j)
                if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class Ops>
struct LinF {
    Ops ops;
    using E = typename Ops::E;
    static constexpr bool is_field = true;

    Mat<E> cast(const ZMat& m) const { return mat_cast(ops, m); }
    Rat lift(const E& x) const { return ops.lift(x); }
    E from_lift(const Rat& r) const {
        E num = ops.from_int(numerator(r));
        E den = ops.from_int(denominator(r));
        return ops.mul(num, ops.inv(den));
    }
    E add(const E& a, const E& b) const { return ops.add(a, b); }
    E neg(const E& a) const { return ops.neg(a); }
    bool is_zero(const E& a) const { return ops.is_zero(a); }
    Mat<E> mul(const Mat<E>& a, const Mat<E>& b) const { return mat_mul(ops, a, b); }
    long rank(const Mat<E>& m) const { return f_rank(ops, m); }
    Mat<E> kernel(const Mat<E>& m) const { return f_kernel(ops, m); }
    Mat<E> constrained_kernel(const Mat<E>& a, const Mat<E>& b, const Mat<E>& c) const {
        return f_constrained_kernel(ops, a, b, c);
    }
    FGModule subquotient(const Mat<E>& z, const Mat<E>& b) const {
        return f_subquotient(ops, z, b);
    }
    Subq<E> subquotient_reps(const Mat<E>& z, const Mat<E>& b) const {
        SubqF<E> q = f_subquotient_reps(ops, z, b);
        Subq<E> out{std::move(q.mod), std::move(q.reps), {}};
        out.orders.assign(static_cast<size_t>(out.reps.nc), Int(0));
        for (int j = 0; j < out.reps.nc; ++j) {
            std::vector<Rat> g(out.reps.nr);
            for (int i = 0; i < out.reps.nr; ++i) g[i] = ops.lift(out.reps(i, j));
            out.mod.generators.push_back(std::move(g));
        }
        return out;
    }
    std::optional<std::vector<E>> class_coords(const Subq<E>& q, const Mat<E>& bnd,
                                               const std::vector<E>& y) const {
        Mat<E> m = hcat(q.reps, bnd);
        if (m.nr == 0 && m.nc == 0) m = Mat<E>(static_cast<int>(y.size()), 0);
        auto sol = f_solve(ops, m, y);
        if (!sol) return std::nullopt;
        std::vector<E> c(sol->begin(), sol->begin() + q.reps.nc);
        return c;
    }
    bool span_contains(const Mat<E>& gens, const std::vector<E>& v) const {
        return f_span_contains(ops, gens, v);
    }
    bool span_equal(const Mat<E>& a, const Mat<E>& b) const {
        if (a.nr != b.nr) return false;
        long ra = f_rank(ops, a), rb = f_rank(ops, b);
        return ra == rb && f_rank(ops, hcat(a, b)) == ra;
    }
};

// Runtime dispatch over the coefficient ring. F must be callable with any
// of the three backends and return the same type for each.
template <class F>
auto with_lin(const Coefficients& coeff, F&& f) {
    switch (coeff.tag) {
        case Coefficients::Tag::Z:
            return f(LinZ{});
        case Coefficients::Tag::Q:
            return f(LinF<QOps>{});
        case Coefficients::Tag::Fp:
        default:
            return f(LinF<FpOps>{FpOps{coeff.p}});
    }
}

}  // namespace lhom
