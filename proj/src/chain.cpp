#include "lhom/chain.hpp"

#include <algorithm>

#include "lhom/lin.hpp"

namespace lhom {

SignedSimplex normalize_tuple(const Complex& K, const std::vector<int>& tuple) {
    Simplex sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return {Simplex{}, 0};
    if (!K.contains(sorted)) return {Simplex{}, 0};
    // parity of the sorting permutation = parity of inversions
    int inv = 0;
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inv;
    return {std::move(sorted), inv % 2 == 0 ? 1 : -1};
}

int chain_dim(const Complex& K, int k, bool reduced) {
    if (k == -1) return reduced ? 1 : 0;
    if (k < -1) return 0;
    return static_cast<int>(K.simplices(k).size());
}

ZMat boundary_matrix(const Complex& K, int k, bool reduced) {
    ZMat M(chain_dim(K, k - 1, reduced), chain_dim(K, k, reduced));
    if (k < 0) return M;
    const auto& basis = K.simplices(k);
    for (size_t c = 0; c < basis.size(); ++c) {
        const Simplex& s = basis[c];
        if (k == 0) {
            if (reduced) M(0, static_cast<int>(c)) = 1;  // d[v] = []
            continue;
        }
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            int row = K.index_of(f);
            M(row, static_cast<int>(c)) += (drop % 2 == 0) ? 1 : -1;
        }
    }
    return M;
}

ZMat coboundary_matrix(const Complex& K, int k, bool reduced) {
    ZMat M(chain_dim(K, k + 1, reduced), chain_dim(K, k, reduced));
    if (chain_dim(K, k, reduced) == 0) return M;
    const int nv = K.vertex_count();
    auto add_terms = [&](const Simplex& tau, int col) {
        for (int v = 0; v < nv; ++v) {
            std::vector<int> tup;
            tup.push_back(v);
            tup.insert(tup.end(), tau.begin(), tau.end());
            SignedSimplex ns = normalize_tuple(K, tup);
            if (ns.sign == 0) continue;
            M(K.index_of(ns.simplex), col) += ns.sign;
        }
    };
    if (k == -1) {
        // delta([]) = sum over vertices
        for (int v = 0; v < nv; ++v) M(v, 0) = 1;
        return M;
    }
    const auto& basis = K.simplices(k);
    for (size_t c = 0; c < basis.size(); ++c) add_terms(basis[c], static_cast<int>(c));
    return M;
}

std::pair<int, int> chain_degree_range(const Complex& K, bool reduced) {
    return {reduced ? -1 : 0, K.dim()};
}

namespace {

template <class Lin>
std::map<int, FGModule> homology_impl(const Lin& lin, const Complex& K, bool reduced) {
    std::map<int, FGModule> out;
    auto [lo, hi] = chain_degree_range(K, reduced);
    for (int k = lo; k <= hi; ++k) {
        auto dk = lin.cast(boundary_matrix(K, k, reduced));
        auto dk1 = lin.cast(boundary_matrix(K, k + 1, reduced));
        FGModule h = lin.subquotient(lin.kernel(dk), dk1);
        if (!h.is_trivial()) out[k] = h;
    }
    return out;
}

template <class Lin>
std::map<int, FGModule> cohomology_impl(const Lin& lin, const Complex& K, bool reduced) {
    std::map<int, FGModule> out;
    auto [lo, hi] = chain_degree_range(K, reduced);
    for (int k = lo; k <= hi; ++k) {
        auto del_k = lin.cast(coboundary_matrix(K, k, reduced));
        auto del_km1 = lin.cast(coboundary_matrix(K, k - 1, reduced));
        auto q = lin.subquotient_reps(lin.kernel(del_k), del_km1);
        if (!q.mod.is_trivial()) out[k] = q.mod;
    }
    return out;
}

}  // namespace

std::map<int, FGModule> homology(const Complex& K, const Coefficients& coeff,
                                 bool reduced) {
    return with_lin(coeff, [&](auto lin) { return homology_impl(lin, K, reduced); });
}

std::map<int, FGModule> cohomology_with_reps(const Complex& K, const Coefficients& coeff,
                                             bool reduced) {
    return with_lin(coeff, [&](auto lin) { return cohomology_impl(lin, K, reduced); });
}

}  // namespace lhom
