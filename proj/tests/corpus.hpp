// Shared desk-scale complexes used across the test binaries.
#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lhom/complex.hpp"
#include "lhom/oracle.hpp"

namespace lhom {
namespace testing {

struct CorpusEntry {
    std::string name;
    Complex K;
};

inline Complex rp2_six_vertex() {
    return build_complex({{"1", "2", "5"},
                          {"1", "2", "6"},
                          {"1", "3", "4"},
                          {"1", "3", "6"},
                          {"1", "4", "5"},
                          {"2", "3", "4"},
                          {"2", "3", "5"},
                          {"2", "4", "6"},
                          {"3", "5", "6"},
                          {"4", "5", "6"}});
}

inline Complex four_cycle() {
    return build_complex({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

inline Complex two_edge_path() {
    return build_complex({{"a", "b"}, {"b", "c"}});
}

inline Complex figure_eight() {
    Complex c4 = four_cycle();
    return wedge(c4, c4);
}

// The named deterministic complexes plus, optionally, 20 seeded random ones.
inline std::vector<CorpusEntry> corpus(bool include_random = true) {
    std::vector<CorpusEntry> out;
    out.push_back({"pt", standard_complex(StandardKind::Full, 0)});
    out.push_back({"S0", standard_complex(StandardKind::Boundary, 1)});
    for (int n = 1; n <= 5; ++n)
        out.push_back({"simplex" + std::to_string(n),
                       standard_complex(StandardKind::Full, n)});
    for (int n = 1; n <= 5; ++n)
        out.push_back({"boundary" + std::to_string(n),
                       standard_complex(StandardKind::Boundary, n)});
    out.push_back({"cycle4", four_cycle()});
    out.push_back({"path2", two_edge_path()});
    out.push_back({"prod_edge_edge",
                   cartesian_product(standard_complex(StandardKind::Full, 1),
                                     standard_complex(StandardKind::Full, 1))});
    out.push_back({"torus",
                   cartesian_product(standard_complex(StandardKind::Boundary, 2),
                                     standard_complex(StandardKind::Boundary, 2))});
    out.push_back({"cone_bd2", cone(standard_complex(StandardKind::Boundary, 2))});
    out.push_back({"join_s0_s0", join(standard_complex(StandardKind::Boundary, 1),
                                      standard_complex(StandardKind::Boundary, 1))});
    out.push_back({"bd2_plus_pt",
                   disjoint_union(standard_complex(StandardKind::Boundary, 2),
                                  standard_complex(StandardKind::Full, 0))});
    out.push_back({"wedge_circles", figure_eight()});
    out.push_back({"rp2", rp2_six_vertex()});
    if (include_random) {
        std::mt19937_64 rng(20240917ull);
        for (int i = 0; i < 20; ++i) {
            std::string desc;
            Complex K = oracle::random_complex(rng, 8, 3, &desc);
            out.push_back({"random" + std::to_string(i), std::move(K)});
        }
    }
    return out;
}

}  // namespace testing
}  // namespace lhom
