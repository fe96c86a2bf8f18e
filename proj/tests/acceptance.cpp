// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Stated time bounds are enforced as part of the criterion.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "corpus.hpp"
#include "lhom/chain.hpp"
#include "lhom/lhomology.hpp"
#include "lhom/oracle.hpp"
#include "lhom/predict.hpp"

using namespace lhom;
using namespace lhom::testing;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ok=false or exceeding the bound (bound <= 0 means unbounded) fails.
void report(int idx, const std::string& name, bool ok, double secs, double bound,
            const std::string& note = "") {
    bool in_time = bound <= 0 || secs <= bound;
    bool pass = ok && in_time;
    if (!pass) ++g_failures;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name << "  ["
         << secs << "s";
    if (bound > 0) line << " / bound " << bound << "s";
    line << "]";
    if (!ok && !note.empty()) line << "  " << note;
    if (ok && !in_time) line << "  (time bound exceeded)";
    std::cout << line.str() << std::endl;
}

ZMat zmul(const ZMat& A, const ZMat& B) {
    ZMat C(A.nr, B.nc);
    for (int i = 0; i < A.nr; ++i)
        for (int k = 0; k < A.nc; ++k) {
            if (A(i, k) == 0) continue;
            for (int j = 0; j < B.nc; ++j) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

const std::vector<Coefficients> kFour = {Coefficients::Z(), Coefficients::Q(),
                                         Coefficients::Fp(2), Coefficients::Fp(3)};

// --------------------------------------------------------------- criterion 1
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    for (int n = 0; n <= 5 && ok; ++n)
        for (const Coefficients& c : kFour)
            for (StandardKind kind : {StandardKind::Full, StandardKind::Boundary}) {
                Complex K = standard_complex(kind, n);
                auto pred = predict_example7(kind, n, c);
                BigradedGroups got = l_homology(K, c, true);
                if (!pred.groups.same_groups(got)) {
                    ok = false;
                    note = "n=" + std::to_string(n) + " " + c.str() + ": " +
                           pred.groups.diff(got);
                    break;
                }
            }
    for (int n = 1; n <= 5 && ok; ++n)
        for (const Coefficients& c : kFour) {
            Example7Certificate cert = example7_certificate(n, c);
            if (!cert.is_cycle || !cert.generates) {
                ok = false;
                note = "certificate failed at n=" + std::to_string(n) + " " + c.str();
                break;
            }
        }
    report(1, "closed-form tables for 2^sigma and boundary(sigma), n <= 5, "
              "Z/Q/F2/F3, plus the sum_i [phi]_{sigma_i} certificate",
           ok, seconds_since(t0), 10.0, note);
}

// --------------------------------------------------------------- criteria 2+11
oracle::FuzzReport criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    oracle::FuzzReport rep = oracle::fuzz_invariance(42, 200, 8, 3);
    std::string note;
    if (rep.failures > 0)
        for (const auto& t : rep.trial_results)
            if (!t.lh_ok) {
                note = "trial " + std::to_string(t.index) + ": " + t.failure;
                break;
            }
    report(2, "stellar subdivision invariance, 200 fuzz trials (seed 42)",
           rep.failures == 0, seconds_since(t0), 300.0, note);
    return rep;
}

// --------------------------------------------------------------- criterion 3
void criterion3(const std::vector<CorpusEntry>& corp) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    for (const auto& e : corp) {
        for (bool reduced : {true, false}) {
            BigradedGroups a = e1_page(e.K, Coefficients::Z(), reduced).groups();
            BigradedGroups b = oracle::e1_direct(e.K, Coefficients::Z(), reduced);
            if (!a.same_groups(b)) {
                ok = false;
                note = e.name + (reduced ? " reduced: " : " unreduced: ") + a.diff(b);
            }
        }
        if (!ok) break;
    }
    report(3, "E1 via link cohomology matches the direct oracle on the corpus",
           ok, seconds_since(t0), 60.0, note);
}

// --------------------------------------------------------------- criterion 4
void criterion4(const std::vector<CorpusEntry>& corp) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    for (const auto& e : corp) {
        for (const Coefficients& c :
             {Coefficients::Z(), Coefficients::Q(), Coefficients::Fp(2)}) {
            for (bool reduced : {true, false}) {
                BigradedGroups a = l_homology(e.K, c, reduced);
                BigradedGroups b = oracle::e2_direct(e.K, c, reduced);
                if (!a.same_groups(b)) {
                    ok = false;
                    note = e.name + " " + c.str() + ": " + a.diff(b);
                }
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    report(4, "L-homology matches the independent E2 oracle over Z, Q, F2",
           ok, seconds_since(t0), 120.0, note);
}

// --------------------------------------------------------------- criterion 5
void criterion5(const std::vector<CorpusEntry>& corp) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    for (const auto& e : corp) {
        for (const Coefficients& c : {Coefficients::Z(), Coefficients::Fp(2)}) {
            ReducedUnreducedReport r = reduced_unreduced_check(e.K, c);
            if (!r.pass) {
                ok = false;
                note = e.name + " " + c.str() + ": " + r.details;
                break;
            }
        }
        if (!ok) break;
    }
    report(5, "reduced vs unreduced exact sequence on the corpus", ok,
           seconds_since(t0), 0, note);
}

// --------------------------------------------------------------- criterion 6
void criterion6(const std::vector<CorpusEntry>& corp) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    for (const auto& e : corp) {
        TotalHomologyResult r = total_homology(e.K, Coefficients::Z(), true);
        bool conv = r.generator_is_cycle && r.generator_generates &&
                    r.by_degree.count(0) && r.by_degree.at(0).rank == 1 &&
                    r.by_degree.at(0).torsion.empty();
        for (auto& [n, m] : r.by_degree)
            if (n != 0 && !m.is_trivial()) conv = false;
        if (!conv) {
            ok = false;
            note = "total homology not G at degree 0 for " + e.name;
            break;
        }
    }
    // corroborated formula on spheres and full simplices
    for (int n = 2; n <= 5 && ok; ++n) {
        Complex bd = standard_complex(StandardKind::Boundary, n);
        Theorem6Prediction p = predict_theorem6(bd, Coefficients::Z());
        BigradedGroups got = l_homology(bd, Coefficients::Z(), true);
        if (!p.corroborated.same_groups(got)) {
            ok = false;
            note = "corroborated mismatch on boundary(simplex " + std::to_string(n) +
                   "): " + p.corroborated.diff(got);
        }
    }
    for (int n = 1; n <= 5 && ok; ++n) {
        Complex f = standard_complex(StandardKind::Full, n);
        Theorem6Prediction p = predict_theorem6(f, Coefficients::Z());
        BigradedGroups got = l_homology(f, Coefficients::Z(), true);
        if (!p.corroborated.same_groups(got)) {
            ok = false;
            note = "corroborated mismatch on 2^sigma, n=" + std::to_string(n);
        }
    }
    // the documented discrepancy of the displayed formula at (0, n) for the
    // triangle boundary: literal claims H~^1 = G, computation gives 0
    if (ok) {
        Complex bd2 = standard_complex(StandardKind::Boundary, 2);
        Theorem6Prediction p = predict_theorem6(bd2, Coefficients::Z());
        BigradedGroups got = l_homology(bd2, Coefficients::Z(), true);
        int n = p.essential_dim;
        bool lit_claims = p.literal.at(0, n).rank == 1;
        bool computed_zero = got.at(0, n).is_trivial();
        std::cout << "INFO  criterion 6: literal formula at (0," << n
                  << ") for boundary(simplex 2): predicted rank "
                  << p.literal.at(0, n).rank << ", computed rank "
                  << got.at(0, n).rank << " (discrepancy "
                  << ((lit_claims && computed_zero) ? "reproduced" : "NOT reproduced")
                  << ")" << std::endl;
        if (!(lit_claims && computed_zero)) {
            ok = false;
            note = "expected literal/computed discrepancy at (0,n) missing";
        }
    }
    report(6, "total complex converges to G with the diagonal generator; "
              "essential-dimension formula corroborated",
           ok, seconds_since(t0), 0, note);
}

// --------------------------------------------------------------- criterion 7
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    std::vector<std::pair<std::string, Complex>> parts = {
        {"S0", standard_complex(StandardKind::Boundary, 1)},
        {"bd2", standard_complex(StandardKind::Boundary, 2)},
        {"bd3", standard_complex(StandardKind::Boundary, 3)},
        {"pt", standard_complex(StandardKind::Full, 0)},
    };
    for (const Coefficients& c : {Coefficients::Q(), Coefficients::Fp(2)}) {
        for (const auto& [na, A] : parts) {
            for (const auto& [nb, B] : parts) {
                BigradedGroups pred = predict_combination(
                    CombKind::Join, l_homology(A, c, true), l_homology(B, c, true), c);
                BigradedGroups got = l_homology(join(A, B), c, true);
                if (!pred.same_groups(got)) {
                    ok = false;
                    note = "join " + na + "*" + nb + " " + c.str() + ": " +
                           pred.diff(got);
                }
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    if (ok) {
        Complex bd2 = standard_complex(StandardKind::Boundary, 2);
        BigradedGroups pred = predict_combination(
            CombKind::Cone, l_homology(bd2, Coefficients::Z(), true), BigradedGroups{},
            Coefficients::Z());
        BigradedGroups got = l_homology(cone(bd2), Coefficients::Z(), true);
        BigradedGroups disk = l_homology(standard_complex(StandardKind::Full, 2),
                                         Coefficients::Z(), true);
        if (!pred.same_groups(got) || !pred.same_groups(disk)) {
            ok = false;
            note = "cone(boundary(simplex 2)) vs shift: " + pred.diff(got);
        }
    }
    report(7, "join predictor over Q and F2 on all pairs; cone predictor over Z",
           ok, seconds_since(t0), 0, note);
}

// --------------------------------------------------------------- criterion 8
void criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    Complex s1 = standard_complex(StandardKind::Boundary, 2);
    Complex torus = cartesian_product(s1, s1);
    for (const Coefficients& c : {Coefficients::Q(), Coefficients::Fp(2)}) {
        BigradedGroups circle = l_homology(s1, c, false);
        if (!(circle.at(0, 1).rank == 1 && circle.at(1, 1).rank == 1)) {
            ok = false;
            note = "LH(circle) not G@(0,1)+G@(1,1) over " + c.str();
            break;
        }
        BigradedGroups pred = predict_combination(CombKind::Product, circle, circle, c);
        BigradedGroups got = l_homology(torus, c, false);
        bool ranks = got.at(0, 2).rank == 1 && got.at(1, 2).rank == 2 &&
                     got.at(2, 2).rank == 1;
        BigradedGroups orc = oracle::e2_direct(torus, c, false);
        if (!ranks || !pred.same_groups(got) || !got.same_groups(orc)) {
            ok = false;
            note = "torus over " + c.str() + ": " + pred.diff(got);
            break;
        }
    }
    report(8, "Kunneth for the staircase torus: ranks 1,2,1 equal the tensor "
              "square of the circle, confirmed by the oracle",
           ok, seconds_since(t0), 120.0, note);
}

// --------------------------------------------------------------- criterion 9
void criterion9() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    std::vector<std::pair<Complex, Complex>> pairs = {
        {standard_complex(StandardKind::Boundary, 2), standard_complex(StandardKind::Full, 0)},
        {rp2_six_vertex(), standard_complex(StandardKind::Full, 0)},
        {four_cycle(), two_edge_path()},
    };
    for (const auto& [A, B] : pairs) {
        BigradedGroups pred = predict_combination(
            CombKind::Disjoint, l_homology(A, Coefficients::Z(), false),
            l_homology(B, Coefficients::Z(), false), Coefficients::Z());
        BigradedGroups got =
            l_homology(disjoint_union(A, B), Coefficients::Z(), false);
        if (!pred.same_groups(got)) {
            ok = false;
            note = "disjoint union additivity failed: " + pred.diff(got);
            break;
        }
    }
    // torsion actually exercised: the RP2 summand must contribute Z/2 somewhere
    if (ok) {
        BigradedGroups rp2u = l_homology(rp2_six_vertex(), Coefficients::Z(), false);
        bool has_torsion = false;
        for (auto& [bd, m] : rp2u.entries)
            if (!m.torsion.empty()) has_torsion = true;
        if (!has_torsion) {
            ok = false;
            note = "expected torsion in LH(RP2; Z) not found";
        }
    }
    if (ok) {
        Complex s1 = standard_complex(StandardKind::Boundary, 2);
        Complex e1c = standard_complex(StandardKind::Full, 1);
        for (const auto& W : {wedge(s1, s1), wedge(e1c, e1c)}) {
            BigradedGroups got = l_homology(W, Coefficients::Z(), true);
            BigradedGroups orc = oracle::e2_direct(W, Coefficients::Z(), true);
            if (!got.same_groups(orc)) {
                ok = false;
                note = "wedge: main path disagrees with oracle: " + got.diff(orc);
                break;
            }
        }
        BigradedGroups paper = predict_combination(
            CombKind::Wedge, l_homology(s1, Coefficients::Z(), true),
            l_homology(s1, Coefficients::Z(), true), Coefficients::Z());
        BigradedGroups got = l_homology(wedge(s1, s1), Coefficients::Z(), true);
        std::cout << "INFO  criterion 9: paper wedge formula "
                  << (paper.same_groups(got) ? "matches" : "differs from")
                  << " the computed groups (informational)" << std::endl;
        if (!paper.same_groups(got)) {
            std::istringstream d(paper.diff(got));
            std::string l;
            while (std::getline(d, l)) std::cout << "INFO    " << l << std::endl;
        }
    }
    report(9, "disjoint union additivity over Z (with RP2 torsion); wedge "
              "main path vs oracle, paper formula recorded above",
           ok, seconds_since(t0), 0, note);
}

// --------------------------------------------------------------- criterion 10
void criterion10() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    std::vector<BigradedGroups> lh;
    for (int n = 0; n <= 5; ++n) {
        Complex K = standard_complex(StandardKind::Full, n);
        lh.push_back(l_homology(K, Coefficients::Z(), true));
        auto h = homology(K, Coefficients::Z(), true);
        for (auto& [k, m] : h)
            if (!m.is_trivial()) {
                ok = false;
                note = "reduced homology of the disk n=" + std::to_string(n) +
                       " is not zero";
            }
    }
    for (size_t m = 0; m < lh.size() && ok; ++m)
        for (size_t n = m + 1; n < lh.size(); ++n)
            if (lh[m].same_groups(lh[n])) {
                ok = false;
                note = "disks " + std::to_string(m) + " and " + std::to_string(n) +
                       " not distinguished";
            }
    report(10, "disks of different dimension distinguished while ordinary "
               "reduced homology cannot tell them apart",
           ok, seconds_since(t0), 0, note);
}

// --------------------------------------------------------------- criterion 11
void criterion11(const oracle::FuzzReport& rep) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = rep.r_witness_found && !rep.r_witness.empty();
    if (ok)
        std::cout << "INFO  criterion 11: stored witness: " << rep.r_witness
                  << std::endl;
    report(11, "complementary R-homology changes under some subdivision "
               "(negative control witness found and stored)",
           ok, seconds_since(t0), 0, ok ? "" : "no witness in the default budget");
}

// --------------------------------------------------------------- criterion 12
bool rho_intertwines(const Complex& K) {
    DoubleComplex T = build_double_complex(K, true);
    for (const auto& [bd, basis] : T.blocks()) {
        auto [s, t] = bd;
        ZMat L = T.Delta(s, t);
        if (L.nr == 0 || L.nc == 0) continue;
        const auto& target = T.block(s, t + 1);
        // group source columns by sigma and compare against the link coboundary
        std::map<Simplex, std::pair<Complex, std::vector<int>>> links;
        for (int j = 0; j < L.nc; ++j) {
            const BasisPair& p = basis[j];
            auto it = links.find(p.sigma);
            if (it == links.end()) {
                std::vector<int> amb;
                Complex lk = link(K, p.sigma, &amb);
                it = links.emplace(p.sigma, std::make_pair(lk, amb)).first;
            }
            const Complex& lk = it->second.first;
            const std::vector<int>& amb = it->second.second;
            std::map<int, int> amb_to_local;
            for (size_t v = 0; v < amb.size(); ++v)
                amb_to_local[amb[v]] = static_cast<int>(v);
            ZMat delta = coboundary_matrix(lk, t - s - 1, true);
            int sgn = (s % 2 != 0) ? -1 : 1;  // (-1)^{|sigma|}, phi counts odd
            RhoEntry rj = rho(p);
            Simplex src_local;
            for (int v : rj.tau) src_local.push_back(amb_to_local.at(v));
            int src_idx = dim_of(src_local) == -1 ? 0 : lk.index_of(src_local);
            for (int i = 0; i < L.nr; ++i) {
                const BasisPair& q = target[i];
                Int expected = 0;
                if (q.sigma == p.sigma) {
                    RhoEntry ri = rho(q);
                    Simplex dst_local;
                    bool in_link = true;
                    for (int v : ri.tau) {
                        auto f = amb_to_local.find(v);
                        if (f == amb_to_local.end()) { in_link = false; break; }
                        dst_local.push_back(f->second);
                    }
                    if (in_link && lk.contains(dst_local)) {
                        int dst_idx = lk.index_of(dst_local);
                        expected = Int(sgn * rj.sign * ri.sign) *
                                   delta(dst_idx, src_idx);
                    }
                }
                if (L(i, j) != expected) return false;
            }
        }
    }
    return true;
}

void criterion12(const std::vector<CorpusEntry>& corp) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    std::mt19937_64 rng(5);
    for (const auto& e : corp) {
        const Complex& K = e.K;
        for (bool reduced : {true, false}) {
            auto [lo, hi] = chain_degree_range(K, reduced);
            for (int k = lo + 2; k <= hi && ok; ++k)
                if (!zmul(boundary_matrix(K, k - 1, reduced),
                          boundary_matrix(K, k, reduced))
                         .is_zero()) {
                    ok = false;
                    note = e.name + ": d o d != 0";
                }
            for (int k = lo; k < hi && ok; ++k) {
                if (!zmul(coboundary_matrix(K, k + 1, reduced),
                          coboundary_matrix(K, k, reduced))
                         .is_zero() &&
                    k + 2 <= hi) {
                    ok = false;
                    note = e.name + ": delta o delta != 0";
                }
                if (coboundary_matrix(K, k, reduced) !=
                    boundary_matrix(K, k + 1, reduced).transposed()) {
                    ok = false;
                    note = e.name + ": delta_k != d_{k+1}^T";
                }
            }
        }
        if (!ok) break;
        // partial_1 squares to zero on E1 coordinates (integer lifts over Q)
        E1Page e1 = e1_page(K, Coefficients::Q(), true);
        QOps ops;
        for (const auto& [src, M] : e1.d1) {
            auto it = e1.d1.find({src.first - 1, src.second});
            if (it == e1.d1.end()) continue;
            if (!mat_mul(ops, it->second, M).is_zero()) {
                ok = false;
                note = e.name + ": partial_1 o partial_1 != 0";
            }
        }
        if (!ok) break;
        if (!rho_intertwines(K)) {
            ok = false;
            note = e.name + ": rho does not intertwine Delta with the link coboundary";
            break;
        }
        // relabeling invariance
        int nv = K.vertex_count();
        if (nv >= 2) {
            std::vector<int> perm(nv);
            for (int i = 0; i < nv; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            Complex P = permuted_vertices(K, perm);
            for (const Coefficients& c : {Coefficients::Z(), Coefficients::Fp(2)}) {
                if (!l_homology(K, c, true).same_groups(l_homology(P, c, true))) {
                    ok = false;
                    note = e.name + ": relabeling changed L-homology over " + c.str();
                }
            }
        }
        if (!ok) break;
    }
    report(12, "structural identities (d^2, delta^2, transpose duality, "
               "partial_1^2, rho intertwining, relabeling invariance)",
           ok, seconds_since(t0), 0, note);
}

}  // namespace

int main() {
    auto corp = corpus();
    std::cout << "acceptance corpus: " << corp.size() << " complexes" << std::endl;
    criterion1();
    oracle::FuzzReport rep = criterion2();
    criterion3(corp);
    criterion4(corp);
    criterion5(corp);
    criterion6(corp);
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11(rep);
    criterion12(corp);
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED"
                                  : std::to_string(g_failures) + " CRITERIA FAILED")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
