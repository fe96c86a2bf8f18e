// The bigraded complexes T/T~ spanned by sigma (x) tau with sigma inside
// tau, their two differentials, the change of description rho, and the
// complementary complex U used by R-homology.
#pragma once

#include <map>
#include <utility>

#include "lhom/algebra.hpp"
#include "lhom/complex.hpp"

namespace lhom {

struct BasisPair {
    Simplex sigma, tau;
    bool operator<(const BasisPair& o) const {
        return sigma != o.sigma ? sigma < o.sigma : tau < o.tau;
    }
    bool operator==(const BasisPair& o) const { return sigma == o.sigma && tau == o.tau; }
};

using Bidegree = std::pair<int, int>;  // (s, t) = (|sigma|, |tau|)

class DoubleComplex {
  public:
    const std::map<Bidegree, std::vector<BasisPair>>& blocks() const { return blocks_; }
    const std::vector<BasisPair>& block(int s, int t) const;
    int block_dim(int s, int t) const { return static_cast<int>(block(s, t).size()); }
    int index_of(int s, int t, const BasisPair& p) const;

    // d (x) 1: (s,t) -> (s-1,t)
    ZMat D(int s, int t) const;
    // (-1)^{|sigma|} 1 (x) delta: (s,t) -> (s,t+1)
    ZMat Delta(int s, int t) const;

    bool reduced() const { return reduced_; }
    const Complex& complex() const { return *K_; }

    // Total-complex data, graded by n = |tau| - |sigma| (both differentials
    // raise n by one). Returns basis offsets per block for degree n.
    std::vector<Bidegree> total_blocks(int n) const;
    int total_dim(int n) const;
    ZMat total_differential(int n) const;  // Tot_n -> Tot_{n+1}
    std::pair<int, int> total_degree_range() const;

    friend DoubleComplex build_double_complex(const Complex& K, bool reduced);
    friend DoubleComplex build_r_double_complex(const Complex& K);

  private:
    const Complex* K_ = nullptr;
    bool reduced_ = true;
    bool complement_ = false;  // tau ranges over non-simplices (R-homology)
    std::map<Bidegree, std::vector<BasisPair>> blocks_;
    std::map<Bidegree, std::map<BasisPair, int>> index_;

    bool tau_admissible(const Simplex& tau) const;
};

// Basis pairs sigma (x) tau, sigma and tau simplices of K with sigma inside
// tau; reduced includes phi on both sides.
DoubleComplex build_double_complex(const Complex& K, bool reduced);

// Complementary complex U: sigma in K (phi included), tau a subset of the
// vertex set that is NOT a simplex of K, sigma inside tau.
DoubleComplex build_r_double_complex(const Complex& K);

// Theorem 4's change of description sigma (x) eta -> [eta - sigma]_sigma.
struct RhoEntry {
    Simplex sigma, tau;  // tau = eta minus sigma
    int sign = 1;        // parity sorting the concatenation (tau, sigma) into eta
};
RhoEntry rho(const BasisPair& pair);

// Sign (-1)^{floor((dim+1)/2)} of sigma (x) sigma in the Theorem 6 generator
// (the exponent counts vertices, which makes the element a cycle; phi gets +1).
int theorem6_generator_sign(const Simplex& sigma);

}  // namespace lhom
