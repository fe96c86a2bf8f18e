// Chain/cochain machinery: canonical bases, the boundary d and the
// relative coboundary delta, (reduced) homology and cohomology.
#pragma once

#include <map>
#include <utility>

#include "lhom/algebra.hpp"
#include "lhom/complex.hpp"

namespace lhom {

// Canonical normalization of an ordered vertex tuple: nullopt-like zero if
// a vertex repeats or the set is not in K; otherwise the ascending simplex
// with the parity sign of the sorting permutation.
struct SignedSimplex {
    Simplex simplex;
    int sign = 0;  // 0 encodes the zero chain
};
SignedSimplex normalize_tuple(const Complex& K, const std::vector<int>& tuple);

// Basis size of C_k (reduced includes the single basis element [] at k=-1).
int chain_dim(const Complex& K, int k, bool reduced);

// Matrix of d: C_k -> C_{k-1} in the canonical per-dimension bases.
ZMat boundary_matrix(const Complex& K, int k, bool reduced);

// Matrix of delta: C_k -> C_{k+1}; delta tau = sum over ambient vertices v
// of normalize([v, tau]).
ZMat coboundary_matrix(const Complex& K, int k, bool reduced);

// Degree range of the (augmented) chain complex: [lo, hi] inclusive.
std::pair<int, int> chain_degree_range(const Complex& K, bool reduced);

// H_k = ker d_k / im d_{k+1} per degree.
std::map<int, FGModule> homology(const Complex& K, const Coefficients& coeff,
                                 bool reduced);

// H^k = ker delta_k / im delta_{k-1}; generators carry explicit cocycle
// representatives in the canonical basis of degree k.
std::map<int, FGModule> cohomology_with_reps(const Complex& K, const Coefficients& coeff,
                                             bool reduced);

}  // namespace lhom
