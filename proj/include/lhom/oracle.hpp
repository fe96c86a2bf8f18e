// Ground-truth reimplementations, deliberately naive and kept separate from
// the main code path: their own Smith normal form and elimination routines,
// direct page computations on the raw double complex, a random-complex
// generator and the stellar-invariance fuzzer.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "lhom/lhomology.hpp"

namespace lhom {
namespace oracle {

// Invariant factors only (ascending divisibility), recursive elimination
// with first-smallest pivoting; no transform bookkeeping.
std::vector<Int> snf_factors(const ZMat& M);

// Kernel basis via integer column echelon reduction with tracked identity.
ZMat kernel(const ZMat& M);

// Basis of the column lattice (the nonzero echelon columns).
ZMat column_basis(const ZMat& M);

// Rank/torsion of lattice(Z)/lattice(B) (B must lie in lattice(Z)).
FGModule z_quotient(const ZMat& Z, const ZMat& B);

// E1 by column-wise Delta-cohomology of the raw double complex, no links.
BigradedGroups e1_direct(const Complex& K, const Coefficients& coeff, bool reduced);

// E2 by the Z2/B2 subquotient evaluated with the oracle's own algebra.
BigradedGroups e2_direct(const Complex& K, const Coefficients& coeff, bool reduced);

// Erdős–Rényi-style skeleton: all vertices, then each candidate k-simplex
// whose boundary is present is kept with a per-dimension percentage drawn
// from rng. The descriptor logs vertex count, percentages and the result.
Complex random_complex(std::mt19937_64& rng, int max_vertices, int max_dim,
                       std::string* descriptor = nullptr);

struct FuzzTrial {
    int index = 0;
    std::string complex_desc;
    std::string sigma;      // subdivided simplex (vertex names)
    bool lh_ok = true;      // LH and LH~ over Z and F_2 agree for K vs S_sigma(K)
    std::string failure;    // diff when !lh_ok
    bool r_differs = false; // R-homology negative control fired
};

struct FuzzReport {
    unsigned long long seed = 0;
    int trials = 0;
    int max_vertices = 8;
    int max_dim = 3;
    std::vector<FuzzTrial> trial_results;
    int failures = 0;
    bool r_witness_found = false;
    std::string r_witness;
};

FuzzReport fuzz_invariance(unsigned long long seed, int trials, int max_vertices = 8,
                           int max_dim = 3);

}  // namespace oracle
}  // namespace lhom
