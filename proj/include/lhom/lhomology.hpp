// L-homology: the E1 identification via link cohomology, partial_1, E2 by
// the cycle/boundary subquotient on the double complex, higher pages over
// fields, total-complex homology, essential dimension, the reduced vs
// unreduced exact sequence and the complementary R-homology.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lhom/algebra.hpp"
#include "lhom/complex.hpp"
#include "lhom/double_complex.hpp"

namespace lhom {

struct BigradedGroups {
    bool reduced = true;
    Coefficients coeff;
    int page = 2;
    std::map<Bidegree, FGModule> entries;  // nonzero entries only

    const FGModule& at(int s, int t) const;
    void set(int s, int t, FGModule m);
    // rank + torsion per bidegree, absent entries are zero
    bool same_groups(const BigradedGroups& o) const;
    std::string diff(const BigradedGroups& o) const;
    std::string table() const;
};

// Matrix of psi: C~_t(link sigma) -> C~_{t+1}(link sigma_i), tau -> tau u [v_i]
// with v_i the i-th vertex of sigma; entries in {-1,0,1}.
ZMat psi_cochain(const Complex& K, const Simplex& sigma, int i, int tdeg);

// E1 page in the link-cohomology description of Theorem 4. Entries at
// (s,t) are the sums over |sigma| = s of H~^{t-s-1}(link sigma);
// partial_1 matrices act on generator coordinates (torsion coordinates of
// Z targets are defined mod `orders`).
struct E1Page {
    bool reduced = true;
    Coefficients coeff;
    struct Entry {
        FGModule mod;
        std::vector<std::pair<Simplex, int>> labels;  // (sigma, generator index)
        std::vector<Int> orders;                      // 0 = free
    };
    std::map<Bidegree, Entry> entries;
    std::map<Bidegree, Mat<Rat>> d1;  // keyed by source (s,t), target (s-1,t)

    BigradedGroups groups() const;
};

E1Page e1_page(const Complex& K, const Coefficients& coeff, bool reduced);

// L-homology (E2 of the horizontal filtration). Fields go through the E1
// page; integers through the direct subquotient on the double complex.
BigradedGroups l_homology(const Complex& K, const Coefficients& coeff, bool reduced);

// The direct Z2/B2 route for any coefficients (the fields fast path must
// agree with this wherever both apply).
BigradedGroups l_homology_direct(const Complex& K, const Coefficients& coeff,
                                 bool reduced);

struct TotalHomologyResult {
    std::map<int, FGModule> by_degree;  // n = |tau| - |sigma|
    bool generator_is_cycle = false;    // sum of (-1)^{[..]} sigma (x) sigma
    bool generator_generates = false;
};
TotalHomologyResult total_homology(const Complex& K, const Coefficients& coeff,
                                   bool reduced = true);

// Page r >= 1 of the filtration spectral sequence; field coefficients only.
BigradedGroups spectral_page(const Complex& K, const Coefficients& coeff, int r,
                             bool reduced);

// The unique n > 0 concentrating every nonempty link's reduced cohomology
// in degree n - |sigma| - 1, if one exists.
std::optional<int> essential_dimension(const Complex& K, const Coefficients& coeff);

struct RHomologyResult {
    BigradedGroups groups;
    bool complement_empty = false;  // K = 2^S: nothing to compute
};
RHomologyResult r_homology(const Complex& K, const Coefficients& coeff);

// E1 of the complementary complex: per missing subset tau, the reduced
// homology of K restricted to tau (available as a cross-check).
BigradedGroups r_e1_direct(const Complex& K, const Coefficients& coeff);

struct ReducedUnreducedReport {
    bool pass = false;
    std::string details;
};
// Exactness of 0 -> LH~_{0,n} -> LH_{0,n} -> H~^n(K) -> LH~_{-1,n} -> 0
// for every n, plus LH_{s,n} = LH~_{s,n} for s > 0, via explicit maps.
ReducedUnreducedReport reduced_unreduced_check(const Complex& K,
                                               const Coefficients& coeff);

struct Example7Certificate {
    bool is_cycle = false;
    bool generates = false;
};
// Checks that sum_i [phi]_{sigma_i} is a partial_1 cycle generating
// LH~_{n-1,n-1}(boundary sigma).
Example7Certificate example7_certificate(int n, const Coefficients& coeff);

}  // namespace lhom
