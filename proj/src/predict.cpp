#include "lhom/predict.hpp"

#include <iterator>
#include <stdexcept>

#include "lhom/chain.hpp"

namespace lhom {

namespace {

FGModule free_of_rank(long r) {
    FGModule m;
    m.rank = r;
    return m;
}

FGModule strip_generators(FGModule m) {
    m.generators.clear();
    return m;
}

}  // namespace

Example7Prediction predict_example7(StandardKind kind, int n,
                                    const Coefficients& coeff) {
    if (n < 0) throw std::invalid_argument("predict_example7: need n >= 0");
    Example7Prediction p;
    p.groups.reduced = true;
    p.groups.coeff = coeff;
    const int k = kind == StandardKind::Full ? n : n - 1;
    p.groups.set(k, k, free_of_rank(1));
    p.generator_bidegree = {k, k};
    return p;
}

Theorem6Prediction predict_theorem6(const Complex& K, const Coefficients& coeff) {
    auto ed = essential_dimension(K, coeff);
    if (!ed) throw std::invalid_argument("predict_theorem6: no essential dimension");
    const int n = *ed;
    Theorem6Prediction p;
    p.essential_dim = n;
    p.literal.coeff = p.corroborated.coeff = coeff;

    std::map<int, FGModule> coh = cohomology_with_reps(K, coeff, true);
    auto H = [&](int t) -> FGModule {
        auto it = coh.find(t);
        return it == coh.end() ? FGModule{} : strip_generators(it->second);
    };

    // Literal: LH~_{s,n} = LH~_{-1,n-s} = H~^{n-s}(K) for 0 <= s < n,
    // LH~_{n,n} = G, zero otherwise.
    for (int s = 0; s < n; ++s) {
        p.literal.set(s, n, H(n - s));
        p.literal.set(-1, n - s, H(n - s));
    }
    p.literal.set(n, n, free_of_rank(1));

    // Corroborated: the boundary cases move to match Example 7 and the
    // exact sequence; (n,n) extends H~^0(K) by G.
    for (int s = 1; s < n; ++s) p.corroborated.set(s, n, H(n - s));
    for (int t = 0; t < n; ++t) p.corroborated.set(-1, t, H(t));
    FGModule top = H(0);
    top.rank += 1;
    p.corroborated.set(n, n, std::move(top));
    return p;
}

BigradedGroups predict_combination(CombKind kind, const BigradedGroups& a,
                                   const BigradedGroups& b,
                                   const Coefficients& coeff) {
    BigradedGroups out;
    out.coeff = coeff;
    switch (kind) {
        case CombKind::Disjoint: {
            out.reduced = false;
            for (const auto& [bd, m] : a.entries)
                out.entries[bd] = direct_sum(out.at(bd.first, bd.second), m);
            for (const auto& [bd, m] : b.entries)
                out.entries[bd] = direct_sum(out.at(bd.first, bd.second), m);
            break;
        }
        case CombKind::Wedge: {
            out.reduced = true;
            for (const auto& [bd, m] : a.entries)
                out.entries[bd] = direct_sum(out.at(bd.first, bd.second), m);
            for (const auto& [bd, m] : b.entries)
                out.entries[bd] = direct_sum(out.at(bd.first, bd.second), m);
            out.entries[{-1, 0}] = direct_sum(out.at(-1, 0), free_of_rank(1));
            break;
        }
        case CombKind::Join: {
            if (!coeff.is_field())
                throw std::invalid_argument("join prediction requires a field");
            out.reduced = true;
            for (const auto& [ba, ma] : a.entries)
                for (const auto& [bb, mb] : b.entries) {
                    const int s = ba.first + bb.first + 1;
                    const int t = ba.second + bb.second + 1;
                    FGModule sum = out.at(s, t);
                    sum.rank += ma.rank * mb.rank;
                    out.entries[{s, t}] = std::move(sum);
                }
            break;
        }
        case CombKind::Product: {
            if (!coeff.is_field())
                throw std::invalid_argument("product prediction requires a field");
            out.reduced = false;
            for (const auto& [ba, ma] : a.entries)
                for (const auto& [bb, mb] : b.entries) {
                    const int s = ba.first + bb.first;
                    const int t = ba.second + bb.second;
                    FGModule sum = out.at(s, t);
                    sum.rank += ma.rank * mb.rank;
                    out.entries[{s, t}] = std::move(sum);
                }
            break;
        }
        case CombKind::Cone: {
            if (!a.at(-1, -1).is_trivial())
                throw std::invalid_argument("cone of the empty complex");
            out.reduced = true;
            for (const auto& [bd, m] : a.entries)
                if (bd.first >= 0 && bd.second >= 0)
                    out.entries[{bd.first + 1, bd.second + 1}] = m;
            break;
        }
    }
    for (auto it = out.entries.begin(); it != out.entries.end();)
        it = it->second.is_trivial() ? out.entries.erase(it) : std::next(it);
    return out;
}

}  // namespace lhom
