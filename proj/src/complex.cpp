#include "lhom/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lhom {

namespace {

const std::vector<Simplex> kEmptyDim{};

void insert_with_faces(std::set<Simplex>& all, const Simplex& s) {
    if (all.count(s)) return;
    // all 2^{|s|} subsets
    const int n = static_cast<int>(s.size());
    if (n > 24) throw std::invalid_argument("simplex too large for desk-scale closure");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Simplex f;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(s[i]);
        all.insert(std::move(f));
    }
}

std::string fresh_name(const std::set<std::string>& taken, const std::string& base) {
    if (!taken.count(base)) return base;
    std::string cand = base;
    do {
        cand += "'";
    } while (taken.count(cand));
    return cand;
}

std::string next_sd_name(const std::set<std::string>& taken) {
    for (int i = 0;; ++i) {
        std::string cand = "sd" + std::to_string(i);
        if (!taken.count(cand)) return cand;
    }
}

}  // namespace

Complex::Complex(std::vector<std::string> vertex_names,
                 const std::vector<Simplex>& simplices)
    : names_(std::move(vertex_names)) {
    {
        std::set<std::string> seen;
        for (const auto& n : names_)
            if (!seen.insert(n).second)
                throw std::invalid_argument("duplicate vertex name: " + n);
    }
    all_.insert(Simplex{});
    for (int v = 0; v < vertex_count(); ++v) all_.insert(Simplex{v});
    for (const Simplex& s : simplices) {
        for (int v : s)
            if (v < 0 || v >= vertex_count())
                throw std::invalid_argument("vertex id out of range");
        Simplex t = s;
        std::sort(t.begin(), t.end());
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
            throw std::invalid_argument("duplicate vertex within one simplex");
        insert_with_faces(all_, t);
    }
    for (const Simplex& s : all_) {
        int d = dim_of(s);
        if (d < 0) continue;
        if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
        by_dim_[d].push_back(s);
    }
    // std::set iteration is already sorted; per-dimension lists inherit
    // lexicographic order except that shorter prefixes sort first, which
    // cannot happen within a fixed dimension.
}

std::optional<int> Complex::vertex_id(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

const std::vector<Simplex>& Complex::simplices(int k) const {
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kEmptyDim;
    return by_dim_[k];
}

int Complex::index_of(const Simplex& s) const {
    const auto& lst = simplices(dim_of(s));
    auto it = std::lower_bound(lst.begin(), lst.end(), s);
    if (it == lst.end() || *it != s)
        throw std::invalid_argument("simplex not in complex");
    return static_cast<int>(it - lst.begin());
}

std::vector<long> Complex::f_vector() const {
    std::vector<long> f;
    for (const auto& lst : by_dim_) f.push_back(static_cast<long>(lst.size()));
    return f;
}

long Complex::euler_characteristic() const {
    long chi = 0;
    int k = 0;
    for (const auto& lst : by_dim_) {
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(lst.size());
        ++k;
    }
    return chi;
}

std::vector<Simplex> Complex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (const Simplex& s : all_) {
        if (s.empty() && all_.size() > 1) continue;
        bool maximal = true;
        for (const Simplex& t : all_) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

bool Complex::isomorphic_to(const Complex& o) const {
    if (vertex_count() != o.vertex_count()) return false;
    if (f_vector() != o.f_vector()) return false;
    std::vector<int> perm(vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Simplex& s : all_) {
            Simplex t;
            for (int v : s) t.push_back(perm[v]);
            std::sort(t.begin(), t.end());
            if (!o.contains(t)) { ok = false; break; }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Complex build_complex(const std::vector<std::vector<std::string>>& maximal,
                      const std::optional<std::vector<std::string>>& declared_order) {
    std::vector<std::string> names;
    std::map<std::string, int> id;
    if (declared_order) {
        names = *declared_order;
        for (size_t i = 0; i < names.size(); ++i) {
            if (id.count(names[i]))
                throw std::invalid_argument("duplicate vertex name: " + names[i]);
            id[names[i]] = static_cast<int>(i);
        }
    }
    std::vector<Simplex> simplices;
    for (const auto& m : maximal) {
        Simplex s;
        for (const std::string& nm : m) {
            auto it = id.find(nm);
            if (it == id.end()) {
                if (declared_order)
                    throw std::invalid_argument("name not in declared order: " + nm);
                id[nm] = static_cast<int>(names.size());
                names.push_back(nm);
                it = id.find(nm);
            }
            s.push_back(it->second);
        }
        Simplex sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate vertex within one simplex");
        simplices.push_back(sorted);
    }
    return Complex(std::move(names), simplices);
}

Complex link(const Complex& K, const Simplex& sigma, std::vector<int>* ambient_vertex) {
    if (!K.contains(sigma)) throw std::invalid_argument("link: simplex not in complex");
    std::set<Simplex> members;
    for (const Simplex& tau : K.all_simplices()) {
        Simplex meet;
        std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                              std::back_inserter(meet));
        if (!meet.empty()) continue;
        Simplex uni;
        std::set_union(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                       std::back_inserter(uni));
        if (K.contains(uni)) members.insert(tau);
    }
    // induced vertex subset in ambient order
    std::vector<int> verts;
    for (const Simplex& s : members)
        if (s.size() == 1) verts.push_back(s[0]);
    std::sort(verts.begin(), verts.end());
    std::map<int, int> remap;
    std::vector<std::string> names;
    for (int v : verts) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(K.name(v));
    }
    std::vector<Simplex> simplices;
    for (const Simplex& s : members) {
        Simplex t;
        for (int v : s) t.push_back(remap[v]);
        simplices.push_back(t);
    }
    if (ambient_vertex) *ambient_vertex = verts;
    return Complex(std::move(names), simplices);
}

Complex standard_complex(StandardKind kind, int n) {
    if (n < 0) throw std::invalid_argument("standard_complex: negative n");
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("v" + std::to_string(i));
    Simplex top(n + 1);
    std::iota(top.begin(), top.end(), 0);
    if (kind == StandardKind::Full) return Complex(std::move(names), {top});
    // boundary: all proper faces
    std::vector<Simplex> facets;
    for (int drop = 0; drop <= n; ++drop) {
        Simplex f;
        for (int i = 0; i <= n; ++i)
            if (i != drop) f.push_back(i);
        facets.push_back(f);
    }
    if (n == 0) return Complex({}, {});  // proper subsets of a point: {phi}
    return Complex(std::move(names), facets);
}

Complex join(const Complex& K, const Complex& L) {
    std::vector<std::string> names = K.names();
    std::set<std::string> taken(names.begin(), names.end());
    const int off = K.vertex_count();
    for (int v = 0; v < L.vertex_count(); ++v) {
        std::string nm = fresh_name(taken, L.name(v));
        taken.insert(nm);
        names.push_back(nm);
    }
    std::vector<Simplex> simplices;
    for (const Simplex& s : K.all_simplices())
        for (const Simplex& t : L.all_simplices()) {
            Simplex u = s;
            for (int v : t) u.push_back(v + off);
            simplices.push_back(u);
        }
    return Complex(std::move(names), simplices);
}

Complex cone(const Complex& K) {
    std::set<std::string> taken(K.names().begin(), K.names().end());
    Complex apex({next_sd_name(taken)}, {});
    return join(K, apex);
}

Complex disjoint_union(const Complex& K, const Complex& L) {
    std::vector<std::string> names = K.names();
    std::set<std::string> taken(names.begin(), names.end());
    const int off = K.vertex_count();
    for (int v = 0; v < L.vertex_count(); ++v) {
        std::string nm = fresh_name(taken, L.name(v));
        taken.insert(nm);
        names.push_back(nm);
    }
    std::vector<Simplex> simplices(K.all_simplices().begin(), K.all_simplices().end());
    for (const Simplex& t : L.all_simplices()) {
        Simplex u;
        for (int v : t) u.push_back(v + off);
        simplices.push_back(u);
    }
    return Complex(std::move(names), simplices);
}

Complex wedge(const Complex& K, const Complex& L, int bk, int bl) {
    if (bk < 0 || bk >= K.vertex_count() || bl < 0 || bl >= L.vertex_count())
        throw std::invalid_argument("wedge: basepoint missing");
    std::vector<std::string> names = K.names();
    std::set<std::string> taken(names.begin(), names.end());
    std::vector<int> lmap(L.vertex_count());
    for (int v = 0; v < L.vertex_count(); ++v) {
        if (v == bl) {
            lmap[v] = bk;
            continue;
        }
        std::string nm = fresh_name(taken, L.name(v));
        taken.insert(nm);
        lmap[v] = static_cast<int>(names.size());
        names.push_back(nm);
    }
    std::vector<Simplex> simplices(K.all_simplices().begin(), K.all_simplices().end());
    for (const Simplex& t : L.all_simplices()) {
        Simplex u;
        for (int v : t) u.push_back(lmap[v]);
        std::sort(u.begin(), u.end());
        simplices.push_back(u);
    }
    return Complex(std::move(names), simplices);
}

Complex cartesian_product(const Complex& K, const Complex& L) {
    const int m = K.vertex_count(), n = L.vertex_count();
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            names.push_back("(" + K.name(i) + "," + L.name(j) + ")");
    auto vid = [&](int i, int j) { return i * n + j; };

    // Simplices are the chains C in the product order on S x T whose
    // projections lie in K and L respectively.
    std::vector<Simplex> chains;
    std::vector<std::pair<int, int>> cur;
    std::function<void(int, int)> extend = [&](int i0, int j0) {
        if (!cur.empty()) {
            Simplex pk, pl;
            for (auto& [i, j] : cur) {
                pk.push_back(i);
                pl.push_back(j);
            }
            std::sort(pk.begin(), pk.end());
            pk.erase(std::unique(pk.begin(), pk.end()), pk.end());
            std::sort(pl.begin(), pl.end());
            pl.erase(std::unique(pl.begin(), pl.end()), pl.end());
            if (!K.contains(pk) || !L.contains(pl)) return;  // no superchain helps
            Simplex s;
            for (auto& [i, j] : cur) s.push_back(vid(i, j));
            chains.push_back(s);
        }
        for (int i = i0; i < m; ++i)
            for (int j = j0; j < n; ++j) {
                if (!cur.empty() && i == cur.back().first && j == cur.back().second)
                    continue;
                cur.emplace_back(i, j);
                extend(i, j);
                cur.pop_back();
            }
    };
    extend(0, 0);
    if (chains.empty()) return Complex({}, {});  // one factor was {phi}
    return Complex(std::move(names), chains);
}

Complex stellar_subdivision(const Complex& K, const Simplex& sigma) {
    if (!K.contains(sigma))
        throw std::invalid_argument("stellar_subdivision: simplex not in complex");
    if (sigma.empty()) return K;

    std::set<std::string> taken(K.names().begin(), K.names().end());
    if (sigma.size() == 1) {
        // relabel the unique vertex of sigma by a fresh one, appended last
        const int w = sigma[0];
        std::vector<std::string> names;
        std::vector<int> remap(K.vertex_count());
        for (int v = 0; v < K.vertex_count(); ++v) {
            if (v == w) continue;
            remap[v] = static_cast<int>(names.size());
            names.push_back(K.name(v));
        }
        remap[w] = static_cast<int>(names.size());
        names.push_back(next_sd_name(taken));
        std::vector<Simplex> simplices;
        for (const Simplex& s : K.all_simplices()) {
            Simplex t;
            for (int v : s) t.push_back(remap[v]);
            std::sort(t.begin(), t.end());
            simplices.push_back(t);
        }
        return Complex(std::move(names), simplices);
    }

    std::vector<std::string> names = K.names();
    const int apex = static_cast<int>(names.size());
    names.push_back(next_sd_name(taken));

    std::vector<Simplex> simplices;
    for (const Simplex& tau : K.all_simplices())
        if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end()))
            simplices.push_back(tau);
    // {v} u sigma' u tau for sigma' proper face of sigma, tau in link(sigma)
    std::vector<int> lk_amb;
    Complex lk = link(K, sigma, &lk_amb);
    const int ns = static_cast<int>(sigma.size());
    for (unsigned mask = 0; mask + 1 < (1u << ns); ++mask) {  // proper faces
        Simplex sp;
        for (int i = 0; i < ns; ++i)
            if (mask & (1u << i)) sp.push_back(sigma[i]);
        for (const Simplex& tau : lk.all_simplices()) {
            Simplex u = sp;
            for (int v : tau) u.push_back(lk_amb[v]);
            u.push_back(apex);
            std::sort(u.begin(), u.end());
            simplices.push_back(u);
        }
    }
    return Complex(std::move(names), simplices);
}

Complex permuted_vertices(const Complex& K, const std::vector<int>& perm) {
    std::vector<std::string> names;
    std::vector<int> inv(K.vertex_count());
    for (size_t i = 0; i < perm.size(); ++i) {
        names.push_back(K.name(perm[i]));
        inv[perm[i]] = static_cast<int>(i);
    }
    std::vector<Simplex> simplices;
    for (const Simplex& s : K.all_simplices()) {
        Simplex t;
        for (int v : s) t.push_back(inv[v]);
        std::sort(t.begin(), t.end());
        simplices.push_back(t);
    }
    return Complex(std::move(names), simplices);
}

void validate(const Complex& K) {
    if (!K.contains(Simplex{})) throw std::logic_error("validate: phi missing");
    for (int v = 0; v < K.vertex_count(); ++v)
        if (!K.contains(Simplex{v})) throw std::logic_error("validate: vertex missing");
    for (const Simplex& s : K.all_simplices())
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            if (!K.contains(f)) throw std::logic_error("validate: closure violated");
        }
}

std::string simplex_str(const Complex& K, const Simplex& s) {
    if (s.empty()) return "{}";
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += " ";
        out += K.name(s[i]);
    }
    return out + "}";
}

}  // namespace lhom
