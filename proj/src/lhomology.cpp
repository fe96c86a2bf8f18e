#include "lhom/lhomology.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "lhom/chain.hpp"
#include "lhom/lin.hpp"

namespace lhom {

// ---------------------------------------------------------------------------
// BigradedGroups

const FGModule& BigradedGroups::at(int s, int t) const {
    static const FGModule zero{};
    auto it = entries.find({s, t});
    return it == entries.end() ? zero : it->second;
}

void BigradedGroups::set(int s, int t, FGModule m) {
    if (!m.is_trivial()) entries[{s, t}] = std::move(m);
}

bool BigradedGroups::same_groups(const BigradedGroups& o) const {
    for (const auto& [bd, m] : entries)
        if (!m.same_type(o.at(bd.first, bd.second))) return false;
    for (const auto& [bd, m] : o.entries)
        if (!m.same_type(at(bd.first, bd.second))) return false;
    return true;
}

std::string BigradedGroups::diff(const BigradedGroups& o) const {
    std::ostringstream out;
    std::set<Bidegree> keys;
    for (const auto& [bd, m] : entries) keys.insert(bd);
    for (const auto& [bd, m] : o.entries) keys.insert(bd);
    for (const Bidegree& bd : keys) {
        const FGModule& a = at(bd.first, bd.second);
        const FGModule& b = o.at(bd.first, bd.second);
        if (!a.same_type(b))
            out << "(" << bd.first << "," << bd.second << "): " << a.str() << " vs "
                << b.str() << "\n";
    }
    return out.str();
}

std::string BigradedGroups::table() const {
    std::ostringstream out;
    for (const auto& [bd, m] : entries)
        out << "(" << bd.first << "," << bd.second << ") " << m.str() << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// E1 page via Theorem-style link cohomology

namespace {

struct LinkData {
    Simplex sigma;
    Complex lk;
    std::vector<int> amb;              // local vertex -> ambient vertex
    std::map<int, int> amb_to_local;
};

LinkData make_link_data(const Complex& K, const Simplex& sigma) {
    std::vector<int> amb;
    Complex lk = link(K, sigma, &amb);
    LinkData d{sigma, std::move(lk), std::move(amb), {}};
    for (size_t i = 0; i < d.amb.size(); ++i) d.amb_to_local[d.amb[i]] = static_cast<int>(i);
    return d;
}

// tau in C~_tdeg(link sigma) -> tau u [v] in C~_{tdeg+1}(link sigma_i),
// v appended last, sign from sorting.
ZMat psi_matrix(const LinkData& src, const LinkData& dst, int ambient_v, int tdeg) {
    ZMat M(chain_dim(dst.lk, tdeg + 1, true), chain_dim(src.lk, tdeg, true));
    const int local_v = dst.amb_to_local.at(ambient_v);
    if (tdeg == -1) {
        if (M.nr > 0) M(dst.lk.index_of({local_v}), 0) = 1;
        return M;
    }
    if (M.nr == 0 || M.nc == 0 || tdeg > src.lk.dim()) return M;
    const auto& basis = src.lk.simplices(tdeg);
    for (size_t c = 0; c < basis.size(); ++c) {
        std::vector<int> tup;
        for (int x : basis[c]) tup.push_back(dst.amb_to_local.at(src.amb[x]));
        tup.push_back(local_v);
        SignedSimplex ns = normalize_tuple(dst.lk, tup);
        if (ns.sign == 0) continue;
        M(dst.lk.index_of(ns.simplex), static_cast<int>(c)) += ns.sign;
    }
    return M;
}

template <class Lin>
struct E1Typed {
    using E = typename Lin::E;
    std::map<Bidegree, E1Page::Entry> entries;
    std::map<Bidegree, Mat<E>> d1;  // keyed by source; absent = zero map

    int gens_at(const Bidegree& bd) const {
        auto it = entries.find(bd);
        return it == entries.end() ? 0 : static_cast<int>(it->second.labels.size());
    }
};

// Coordinates here present torsion summands by a single generator; the d1
// matrices are used for exact kernels only over fields or free targets
// (the Z route to L-homology goes through the double complex instead).
template <class Lin>
E1Typed<Lin> e1_typed(const Lin& lin, const Complex& K, bool reduced) {
    using E = typename Lin::E;
    struct Col {
        LinkData ld;
        std::map<int, Subq<E>> coh;  // reduced cochain degree -> H~ with reps
        std::map<int, Mat<E>> bnd;   // image of delta_{deg-1}
    };
    std::vector<Col> cols;
    std::map<Simplex, int> colidx;

    auto add_col = [&](const Simplex& sg) {
        Col c{make_link_data(K, sg), {}, {}};
        for (int td = -1; td <= c.ld.lk.dim(); ++td) {
            Mat<E> delk = lin.cast(coboundary_matrix(c.ld.lk, td, true));
            Mat<E> delprev = lin.cast(coboundary_matrix(c.ld.lk, td - 1, true));
            c.coh.emplace(td, lin.subquotient_reps(lin.kernel(delk), delprev));
            c.bnd.emplace(td, std::move(delprev));
        }
        colidx[sg] = static_cast<int>(cols.size());
        cols.push_back(std::move(c));
    };
    if (reduced) add_col(Simplex{});
    for (int s = 0; s <= K.dim(); ++s)
        for (const Simplex& sg : K.simplices(s)) add_col(sg);

    E1Typed<Lin> out;
    std::map<Bidegree, std::map<int, int>> offset;  // bidegree -> col -> start row
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        const Col& c = cols[ci];
        const int s = dim_of(c.ld.sigma);
        for (const auto& [td, q] : c.coh) {
            if (q.reps.nc == 0) continue;
            Bidegree bd{s, s + td + 1};
            E1Page::Entry& e = out.entries[bd];
            offset[bd][static_cast<int>(ci)] = static_cast<int>(e.labels.size());
            for (int j = 0; j < q.reps.nc; ++j) {
                e.labels.emplace_back(c.ld.sigma, j);
                e.orders.push_back(q.orders[j]);
            }
            e.mod = direct_sum(e.mod, q.mod);
        }
    }

    const int smin = reduced ? -1 : 0;
    for (const auto& [bd, entry] : out.entries) {
        const auto& [s, t] = bd;
        if (s <= smin) continue;  // nothing below; and unreduced kills s = 0
        const int tdeg = t - s - 1;
        const Bidegree tgt{s - 1, t};
        Mat<E> M(out.gens_at(tgt), static_cast<int>(entry.labels.size()));
        for (const auto& [ci, coff] : offset.at(bd)) {
            const Col& src = cols[static_cast<size_t>(ci)];
            const Subq<E>& q = src.coh.at(tdeg);
            for (size_t i = 0; i < src.ld.sigma.size(); ++i) {
                Simplex si = src.ld.sigma;
                si.erase(si.begin() + static_cast<long>(i));
                const Col& dst = cols[static_cast<size_t>(colidx.at(si))];
                ZMat psi = psi_matrix(src.ld, dst.ld, src.ld.sigma[i], tdeg);
                if (psi.nr == 0) continue;
                Mat<E> Y = lin.mul(lin.cast(psi), q.reps);
                const Subq<E>& tq = dst.coh.at(tdeg + 1);
                auto roff_it = offset.find(tgt);
                for (int g = 0; g < Y.nc; ++g) {
                    auto coords = lin.class_coords(tq, dst.bnd.at(tdeg + 1), Y.col(g));
                    if (!coords)
                        throw std::logic_error("partial_1 image is not a cocycle class");
                    if (coords->empty()) continue;
                    const int roff = roff_it->second.at(colidx.at(si));
                    for (size_t k = 0; k < coords->size(); ++k)
                        M(roff + static_cast<int>(k), coff + g) =
                            lin.add(M(roff + static_cast<int>(k), coff + g), (*coords)[k]);
                }
            }
        }
        out.d1[bd] = std::move(M);
    }
    return out;
}

}  // namespace

ZMat psi_cochain(const Complex& K, const Simplex& sigma, int i, int tdeg) {
    if (sigma.empty() || i < 0 || i >= static_cast<int>(sigma.size()))
        throw std::invalid_argument("psi_cochain: bad vertex index");
    if (!K.contains(sigma)) throw std::invalid_argument("psi_cochain: simplex not in K");
    LinkData src = make_link_data(K, sigma);
    Simplex si = sigma;
    si.erase(si.begin() + i);
    LinkData dst = make_link_data(K, si);
    return psi_matrix(src, dst, sigma[i], tdeg);
}

E1Page e1_page(const Complex& K, const Coefficients& coeff, bool reduced) {
    return with_lin(coeff, [&](auto lin) {
        auto T = e1_typed(lin, K, reduced);
        E1Page p;
        p.reduced = reduced;
        p.coeff = coeff;
        p.entries = std::move(T.entries);
        for (const auto& [bd, m] : T.d1) {
            Mat<Rat> r(m.nr, m.nc);
            for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = lin.lift(m.a[k]);
            p.d1.emplace(bd, std::move(r));
        }
        return p;
    });
}

BigradedGroups E1Page::groups() const {
    BigradedGroups g;
    g.reduced = reduced;
    g.coeff = coeff;
    g.page = 1;
    for (const auto& [bd, e] : entries) {
        FGModule m = e.mod;
        m.generators.clear();
        g.set(bd.first, bd.second, std::move(m));
    }
    return g;
}

// ---------------------------------------------------------------------------
// E2 / L-homology

namespace {

// E2 of the horizontal filtration: Z2 = {x : Delta x = 0, D x in im Delta},
// B2 = im Delta + D(ker Delta).
template <class Lin>
BigradedGroups e2_impl(const Lin& lin, const DoubleComplex& dc) {
    BigradedGroups out;
    out.reduced = dc.reduced();
    for (const auto& [bd, pairs] : dc.blocks()) {
        if (pairs.empty()) continue;
        const auto& [s, t] = bd;
        auto Z = lin.constrained_kernel(lin.cast(dc.Delta(s, t)), lin.cast(dc.D(s, t)),
                                        lin.cast(dc.Delta(s - 1, t - 1)));
        auto B = hcat(lin.cast(dc.Delta(s, t - 1)),
                      lin.mul(lin.cast(dc.D(s + 1, t)),
                              lin.kernel(lin.cast(dc.Delta(s + 1, t)))));
        out.set(s, t, lin.subquotient(Z, B));
    }
    return out;
}

// E2 of the vertical filtration (used by R-homology): the mirrored formula.
template <class Lin>
BigradedGroups e2_vertical_impl(const Lin& lin, const DoubleComplex& dc) {
    BigradedGroups out;
    out.reduced = dc.reduced();
    for (const auto& [bd, pairs] : dc.blocks()) {
        if (pairs.empty()) continue;
        const auto& [s, t] = bd;
        auto Z = lin.constrained_kernel(lin.cast(dc.D(s, t)), lin.cast(dc.Delta(s, t)),
                                        lin.cast(dc.D(s + 1, t + 1)));
        auto B = hcat(lin.cast(dc.D(s + 1, t)),
                      lin.mul(lin.cast(dc.Delta(s, t - 1)),
                              lin.kernel(lin.cast(dc.D(s, t - 1)))));
        out.set(s, t, lin.subquotient(Z, B));
    }
    return out;
}

}  // namespace

BigradedGroups l_homology_direct(const Complex& K, const Coefficients& coeff,
                                 bool reduced) {
    DoubleComplex dc = build_double_complex(K, reduced);
    BigradedGroups g = with_lin(coeff, [&](auto lin) { return e2_impl(lin, dc); });
    g.coeff = coeff;
    return g;
}

BigradedGroups l_homology(const Complex& K, const Coefficients& coeff, bool reduced) {
    if (!coeff.is_field()) return l_homology_direct(K, coeff, reduced);
    BigradedGroups g = with_lin(coeff, [&](auto lin) {
        using E = typename decltype(lin)::E;
        auto T = e1_typed(lin, K, reduced);
        BigradedGroups out;
        out.reduced = reduced;
        for (const auto& [bd, entry] : T.entries) {
            const int n = static_cast<int>(entry.labels.size());
            auto ito = T.d1.find(bd);
            Mat<E> ker = ito != T.d1.end() ? lin.kernel(ito->second) : Mat<E>::identity(n);
            auto iti = T.d1.find({bd.first + 1, bd.second});
            Mat<E> B = iti != T.d1.end() ? iti->second : Mat<E>(n, 0);
            out.set(bd.first, bd.second, lin.subquotient(ker, B));
        }
        return out;
    });
    g.coeff = coeff;
    return g;
}

// ---------------------------------------------------------------------------
// Total complex

TotalHomologyResult total_homology(const Complex& K, const Coefficients& coeff,
                                   bool reduced) {
    DoubleComplex dc = build_double_complex(K, reduced);
    return with_lin(coeff, [&](auto lin) {
        using E = typename decltype(lin)::E;
        TotalHomologyResult res;
        auto [lo, hi] = dc.total_degree_range();
        for (int n = lo; n <= hi; ++n) {
            auto dn = lin.cast(dc.total_differential(n));
            auto dprev = lin.cast(dc.total_differential(n - 1));
            auto ker = lin.kernel(dn);
            FGModule h = lin.subquotient(ker, dprev);
            if (!h.is_trivial()) res.by_degree[n] = h;
            if (reduced && n == 0) {
                std::vector<E> g(static_cast<size_t>(dc.total_dim(0)), E(0));
                int off = 0;
                for (const auto& bd : dc.total_blocks(0)) {
                    const auto& pairs = dc.block(bd.first, bd.second);
                    for (size_t k = 0; k < pairs.size(); ++k)
                        g[static_cast<size_t>(off) + k] =
                            E(theorem6_generator_sign(pairs[k].sigma));
                    off += static_cast<int>(pairs.size());
                }
                res.generator_is_cycle = lin.span_contains(ker, g);
                Mat<E> gm(static_cast<int>(g.size()), 1);
                for (size_t i = 0; i < g.size(); ++i) gm(static_cast<int>(i), 0) = g[i];
                res.generator_generates =
                    res.generator_is_cycle &&
                    lin.subquotient(ker, hcat(dprev, gm)).is_trivial();
            }
        }
        return res;
    });
}

// ---------------------------------------------------------------------------
// Higher spectral pages over fields

namespace {

template <class Lin>
BigradedGroups spectral_impl(const Lin& lin, const DoubleComplex& dc, int r) {
    using E = typename Lin::E;
    BigradedGroups out;
    out.reduced = dc.reduced();
    out.page = r;
    auto [nlo, nhi] = dc.total_degree_range();

    struct Layout {
        std::vector<Bidegree> blocks;
        std::vector<int> off;
        int dim = 0;
    };
    std::map<int, Layout> lay;
    for (int n = nlo; n <= nhi; ++n) {
        Layout L;
        L.blocks = dc.total_blocks(n);
        for (const auto& bd : L.blocks) {
            L.off.push_back(L.dim);
            L.dim += dc.block_dim(bd.first, bd.second);
        }
        lay[n] = std::move(L);
    }
    std::map<int, Mat<E>> dtot;
    auto d_of = [&](int n) -> const Mat<E>& {
        auto it = dtot.find(n);
        if (it == dtot.end())
            it = dtot.emplace(n, lin.cast(dc.total_differential(n))).first;
        return it->second;
    };

    // Generators of Z_r(s) = F_s Tot_n with boundary in F_{s-r} Tot_{n+1},
    // as columns in Tot_n coordinates; Z_0(s) = F_s.
    auto Zr = [&](int rr, int s, int n) -> Mat<E> {
        if (n < nlo || n > nhi) return Mat<E>(0, 0);
        const Layout& L = lay[n];
        std::vector<int> allowed;
        for (size_t b = 0; b < L.blocks.size(); ++b) {
            if (L.blocks[b].first > s) continue;
            const int bw = dc.block_dim(L.blocks[b].first, L.blocks[b].second);
            for (int k = 0; k < bw; ++k) allowed.push_back(L.off[b] + k);
        }
        Mat<E> emb(L.dim, static_cast<int>(allowed.size()));
        for (size_t j = 0; j < allowed.size(); ++j)
            emb(allowed[j], static_cast<int>(j)) = E(1);
        if (rr <= 0 || n + 1 > nhi) return emb;
        const Layout& Lu = lay[n + 1];
        const Mat<E>& Dm = d_of(n);
        std::vector<int> crows;
        for (size_t b = 0; b < Lu.blocks.size(); ++b) {
            if (Lu.blocks[b].first <= s - rr) continue;
            const int bw = dc.block_dim(Lu.blocks[b].first, Lu.blocks[b].second);
            for (int k = 0; k < bw; ++k) crows.push_back(Lu.off[b] + k);
        }
        Mat<E> A(static_cast<int>(crows.size()), static_cast<int>(allowed.size()));
        for (size_t i = 0; i < crows.size(); ++i)
            for (size_t j = 0; j < allowed.size(); ++j)
                A(static_cast<int>(i), static_cast<int>(j)) = Dm(crows[i], allowed[j]);
        return lin.mul(emb, lin.kernel(A));
    };

    for (int n = nlo; n <= nhi; ++n) {
        for (const auto& bd : lay[n].blocks) {
            const int s = bd.first;
            Mat<E> num = Zr(r, s, n);
            Mat<E> den1 = Zr(r - 1, s - 1, n);
            Mat<E> den2(lay[n].dim, 0);
            if (n - 1 >= nlo) den2 = lin.mul(d_of(n - 1), Zr(r - 1, s + r - 1, n - 1));
            long dim = lin.rank(num) - lin.rank(hcat(den1, den2));
            if (dim > 0) {
                FGModule m;
                m.rank = dim;
                out.set(s, n + s, std::move(m));
            }
        }
    }
    return out;
}

}  // namespace

BigradedGroups spectral_page(const Complex& K, const Coefficients& coeff, int r,
                             bool reduced) {
    if (r < 1) throw std::invalid_argument("spectral_page: page must be >= 1");
    if (!coeff.is_field())
        throw std::invalid_argument("spectral_page requires field coefficients");
    BigradedGroups g = with_lin(coeff, [&](auto lin) -> BigradedGroups {
        if constexpr (!std::decay_t<decltype(lin)>::is_field) {
            throw std::invalid_argument("spectral_page requires field coefficients");
        } else {
            DoubleComplex dc = build_double_complex(K, reduced);
            return spectral_impl(lin, dc, r);
        }
    });
    g.coeff = coeff;
    g.reduced = reduced;
    return g;
}

// ---------------------------------------------------------------------------
// Essential dimension

std::optional<int> essential_dimension(const Complex& K, const Coefficients& coeff) {
    std::optional<int> n;
    for (const Simplex& sg : K.all_simplices()) {
        if (sg.empty()) continue;
        Complex lk = link(K, sg);
        for (const auto& [t, m] : cohomology_with_reps(lk, coeff, true)) {
            (void)m;
            const int cand = t + dim_of(sg) + 1;
            if (!n)
                n = cand;
            else if (*n != cand)
                return std::nullopt;
        }
    }
    if (!n || *n <= 0) return std::nullopt;
    return n;
}

// ---------------------------------------------------------------------------
// R-homology (complementary complex, vertical filtration)

RHomologyResult r_homology(const Complex& K, const Coefficients& coeff) {
    RHomologyResult res;
    DoubleComplex dc = build_r_double_complex(K);
    res.complement_empty = dc.blocks().empty();
    res.groups.coeff = coeff;
    if (res.complement_empty) return res;
    res.groups = with_lin(coeff, [&](auto lin) { return e2_vertical_impl(lin, dc); });
    res.groups.coeff = coeff;
    return res;
}

namespace {

Complex induced_subcomplex(const Complex& K, const Simplex& tau) {
    std::vector<std::string> names;
    std::map<int, int> remap;
    for (int v : tau) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(K.name(v));
    }
    std::vector<Simplex> simps;
    for (const Simplex& s : K.all_simplices()) {
        if (!std::includes(tau.begin(), tau.end(), s.begin(), s.end())) continue;
        Simplex t;
        for (int v : s) t.push_back(remap[v]);
        simps.push_back(std::move(t));
    }
    return Complex(std::move(names), simps);
}

}  // namespace

BigradedGroups r_e1_direct(const Complex& K, const Coefficients& coeff) {
    BigradedGroups out;
    out.coeff = coeff;
    out.page = 1;
    const int nv = K.vertex_count();
    if (nv > 20) throw std::invalid_argument("R-complex too large for desk scale");
    for (unsigned long mask = 0; mask < (1ul << nv); ++mask) {
        Simplex tau;
        for (int i = 0; i < nv; ++i)
            if (mask & (1ul << i)) tau.push_back(i);
        if (K.contains(tau)) continue;
        Complex sub = induced_subcomplex(K, tau);
        for (const auto& [k, m] : homology(sub, coeff, true))
            out.entries[{k, dim_of(tau)}] = direct_sum(out.at(k, dim_of(tau)), m);
    }
    for (auto it = out.entries.begin(); it != out.entries.end();)
        it = it->second.is_trivial() ? out.entries.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// Reduced vs unreduced exact sequence

namespace {

template <class Lin>
ReducedUnreducedReport ru_impl(const Lin& lin, const Complex& K) {
    using E = typename Lin::E;
    ReducedUnreducedReport rep;
    std::ostringstream det;
    bool ok = true;
    auto fail = [&](int n, const std::string& m) {
        ok = false;
        det << "n=" << n << ": " << m << "\n";
    };

    DoubleComplex dr = build_double_complex(K, true);
    DoubleComplex du = build_double_complex(K, false);

    // Generators of {x in span(G) : M x in span(H)}.
    auto preimage = [&](const Mat<E>& G, const Mat<E>& M, const Mat<E>& H) {
        Mat<E> MG = lin.mul(M, G);
        Mat<E> C = lin.constrained_kernel(Mat<E>(0, G.nc), MG, H);
        return lin.mul(G, C);
    };

    for (int n = 0; n <= K.dim(); ++n) {
        if (dr.block_dim(0, n) != du.block_dim(0, n)) {
            fail(n, "basis mismatch between T and T~ at (0,n)");
            continue;
        }
        const int w = dr.block_dim(0, n);
        Mat<E> I0 = Mat<E>::identity(w);

        Mat<E> Za = lin.constrained_kernel(lin.cast(dr.Delta(0, n)), lin.cast(dr.D(0, n)),
                                           lin.cast(dr.Delta(-1, n - 1)));
        Mat<E> Ba = hcat(lin.cast(dr.Delta(0, n - 1)),
                         lin.mul(lin.cast(dr.D(1, n)),
                                 lin.kernel(lin.cast(dr.Delta(1, n)))));
        Mat<E> Zb = lin.kernel(lin.cast(du.Delta(0, n)));
        Mat<E> Bb = hcat(lin.cast(du.Delta(0, n - 1)),
                         lin.mul(lin.cast(du.D(1, n)),
                                 lin.kernel(lin.cast(du.Delta(1, n)))));
        Mat<E> P = lin.cast(dr.D(0, n));  // (0,n) -> (-1,n) = C~_n(K)
        Mat<E> Zc = lin.kernel(lin.cast(coboundary_matrix(K, n, true)));
        Mat<E> Bc = lin.cast(coboundary_matrix(K, n - 1, true));
        Mat<E> Zd = lin.kernel(lin.cast(dr.Delta(-1, n)));
        Mat<E> Bd = hcat(lin.cast(dr.Delta(-1, n - 1)),
                         lin.mul(lin.cast(dr.D(0, n)),
                                 lin.kernel(lin.cast(dr.Delta(0, n)))));

        if (!lin.span_equal(preimage(Za, I0, Bb), Ba))
            fail(n, "LH~_{0,n} -> LH_{0,n} not injective");
        if (!lin.span_equal(preimage(Zb, P, Bc), hcat(Za, Bb)))
            fail(n, "not exact at LH_{0,n}");
        if (!lin.span_equal(preimage(Zc, Mat<E>::identity(Zc.nr), Bd),
                            hcat(lin.mul(P, Zb), Bc)))
            fail(n, "not exact at H~^n(K)");
        if (!lin.span_equal(hcat(Zc, Bd), Zd))
            fail(n, "H~^n(K) -> LH~_{-1,n} not surjective");
    }

    BigradedGroups er = e2_impl(lin, dr);
    BigradedGroups eu = e2_impl(lin, du);
    std::set<Bidegree> keys;
    for (const auto& [bd, m] : er.entries) keys.insert(bd);
    for (const auto& [bd, m] : eu.entries) keys.insert(bd);
    for (const Bidegree& bd : keys) {
        if (bd.first <= 0) continue;
        if (!er.at(bd.first, bd.second).same_type(eu.at(bd.first, bd.second))) {
            ok = false;
            det << "LH vs LH~ mismatch at (" << bd.first << "," << bd.second << ")\n";
        }
    }

    rep.pass = ok;
    rep.details = det.str();
    return rep;
}

}  // namespace

ReducedUnreducedReport reduced_unreduced_check(const Complex& K,
                                               const Coefficients& coeff) {
    return with_lin(coeff, [&](auto lin) { return ru_impl(lin, K); });
}

// ---------------------------------------------------------------------------
// Example 7 certificate

Example7Certificate example7_certificate(int n, const Coefficients& coeff) {
    if (n < 1) throw std::invalid_argument("example7_certificate: need n >= 1");
    Complex K = standard_complex(StandardKind::Boundary, n);
    return with_lin(coeff, [&](auto lin) {
        using E = typename decltype(lin)::E;
        auto T = e1_typed(lin, K, true);
        Example7Certificate cert;
        const Bidegree bd{n - 1, n - 1};
        auto it = T.entries.find(bd);
        if (it == T.entries.end()) return cert;
        const int m = static_cast<int>(it->second.labels.size());
        std::vector<E> v(static_cast<size_t>(m), E(1));
        Mat<E> vm(m, 1);
        for (int i = 0; i < m; ++i) vm(i, 0) = E(1);
        auto ito = T.d1.find(bd);
        Mat<E> ker = ito != T.d1.end() ? lin.kernel(ito->second) : Mat<E>::identity(m);
        cert.is_cycle = lin.span_contains(ker, v);
        auto iti = T.d1.find({n, n - 1});
        Mat<E> B = iti != T.d1.end() ? iti->second : Mat<E>(m, 0);
        FGModule h = lin.subquotient(ker, B);
        cert.generates = cert.is_cycle && h.rank == 1 && h.torsion.empty() &&
                         lin.subquotient(ker, hcat(B, vm)).is_trivial();
        return cert;
    });
}

}  // namespace lhom
