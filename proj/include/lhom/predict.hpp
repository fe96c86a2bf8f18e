// Closed-form predictions: the 2^sigma / boundary-sigma answers, the two
// readings of the essential-dimension theorem, and the combination formulas
// for disjoint union, wedge, join, cone and Cartesian product.
#pragma once

#include <optional>
#include <utility>

#include "lhom/lhomology.hpp"

namespace lhom {

struct Example7Prediction {
    BigradedGroups groups;
    // Bidegree carrying the generator sum_i [phi]_{sigma_i} (all-ones in the
    // E1 generator basis); set for both kinds.
    Bidegree generator_bidegree{0, 0};
};

// Closed-form reduced L-homology of 2^sigma (G at (n,n)) or of
// boundary(sigma) (G at (n-1,n-1)), |sigma| = n+1 vertices.
Example7Prediction predict_example7(StandardKind kind, int n, const Coefficients& coeff);

struct Theorem6Prediction {
    BigradedGroups literal;       // the theorem's displayed formula
    BigradedGroups corroborated;  // the variant matching direct computation
    int essential_dim = 0;
};

// Requires essential_dimension(K, coeff) to exist; throws otherwise.
Theorem6Prediction predict_theorem6(const Complex& K, const Coefficients& coeff);

enum class CombKind { Disjoint, Wedge, Join, Cone, Product };

// disjoint: unreduced direct sum. wedge: reduced sum plus an extra G at
// (-1,0). join (field): shifted bigraded tensor. cone: shift of the s,t >= 0
// part by (+1,+1). product (field): bigraded tensor of unreduced LH.
// b is ignored for cone.
BigradedGroups predict_combination(CombKind kind, const BigradedGroups& a,
                                   const BigradedGroups& b, const Coefficients& coeff);

}  // namespace lhom
