#include "lhom/double_complex.hpp"

#include <algorithm>

namespace lhom {

namespace {
const std::vector<BasisPair> kEmptyBlock{};

int sign_of_dim(int d) {  // (-1)^d with d possibly -1
    return ((d % 2) + 2) % 2 == 0 ? 1 : -1;
}
}  // namespace

bool DoubleComplex::tau_admissible(const Simplex& tau) const {
    return complement_ ? !K_->contains(tau) : K_->contains(tau);
}

const std::vector<BasisPair>& DoubleComplex::block(int s, int t) const {
    auto it = blocks_.find({s, t});
    return it == blocks_.end() ? kEmptyBlock : it->second;
}

int DoubleComplex::index_of(int s, int t, const BasisPair& p) const {
    return index_.at({s, t}).at(p);
}

ZMat DoubleComplex::D(int s, int t) const {
    const auto& src = block(s, t);
    const auto& dst = block(s - 1, t);
    ZMat M(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    if (src.empty() || dst.empty()) return M;
    const auto& idx = index_.at({s - 1, t});
    for (size_t c = 0; c < src.size(); ++c) {
        const auto& [sigma, tau] = src[c];
        if (sigma.empty()) continue;  // d phi = 0
        for (size_t drop = 0; drop < sigma.size(); ++drop) {
            Simplex f;
            for (size_t i = 0; i < sigma.size(); ++i)
                if (i != drop) f.push_back(sigma[i]);
            if (f.empty() && !reduced_) continue;
            auto it = idx.find(BasisPair{f, tau});
            if (it == idx.end()) continue;  // d[v] = [] leaves the unreduced complex
            M(it->second, static_cast<int>(c)) += (drop % 2 == 0) ? 1 : -1;
        }
    }
    return M;
}

ZMat DoubleComplex::Delta(int s, int t) const {
    const auto& src = block(s, t);
    const auto& dst = block(s, t + 1);
    ZMat M(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    if (src.empty() || dst.empty()) return M;
    const auto& idx = index_.at({s, t + 1});
    const int nv = K_->vertex_count();
    for (size_t c = 0; c < src.size(); ++c) {
        const auto& [sigma, tau] = src[c];
        const int outer = sign_of_dim(dim_of(sigma));
        for (int v = 0; v < nv; ++v) {
            if (std::binary_search(tau.begin(), tau.end(), v)) continue;
            Simplex up;
            std::merge(tau.begin(), tau.end(), &v, &v + 1, std::back_inserter(up));
            if (!tau_admissible(up)) continue;
            auto it = idx.find(BasisPair{sigma, up});
            if (it == idx.end()) continue;
            // delta prepends v; moving it into place costs (# elements < v) swaps
            int pos = static_cast<int>(std::lower_bound(tau.begin(), tau.end(), v) -
                                       tau.begin());
            int sgn = outer * (pos % 2 == 0 ? 1 : -1);
            M(it->second, static_cast<int>(c)) += sgn;
        }
    }
    return M;
}

std::vector<Bidegree> DoubleComplex::total_blocks(int n) const {
    std::vector<Bidegree> out;
    for (const auto& [bd, pairs] : blocks_)
        if (bd.second - bd.first == n && !pairs.empty()) out.push_back(bd);
    return out;  // map order: ascending s
}

int DoubleComplex::total_dim(int n) const {
    int d = 0;
    for (const auto& bd : total_blocks(n)) d += block_dim(bd.first, bd.second);
    return d;
}

ZMat DoubleComplex::total_differential(int n) const {
    auto src = total_blocks(n);
    auto dst = total_blocks(n + 1);
    std::map<Bidegree, int> dst_off;
    int rows = 0;
    for (const auto& bd : dst) {
        dst_off[bd] = rows;
        rows += block_dim(bd.first, bd.second);
    }
    ZMat M(rows, total_dim(n));
    int coff = 0;
    for (const auto& [s, t] : src) {
        const int bw = block_dim(s, t);
        auto place = [&](const ZMat& blockmat, Bidegree target) {
            auto it = dst_off.find(target);
            if (it == dst_off.end()) return;
            for (int i = 0; i < blockmat.nr; ++i)
                for (int j = 0; j < blockmat.nc; ++j)
                    if (blockmat(i, j) != 0) M(it->second + i, coff + j) = blockmat(i, j);
        };
        place(D(s, t), {s - 1, t});
        place(Delta(s, t), {s, t + 1});
        coff += bw;
    }
    return M;
}

std::pair<int, int> DoubleComplex::total_degree_range() const {
    int lo = 0, hi = 0;
    bool any = false;
    for (const auto& [bd, pairs] : blocks_) {
        if (pairs.empty()) continue;
        int n = bd.second - bd.first;
        if (!any) { lo = hi = n; any = true; }
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    return {lo, hi};
}

namespace {

void index_blocks(std::map<Bidegree, std::vector<BasisPair>>& blocks,
                  std::map<Bidegree, std::map<BasisPair, int>>& index) {
    for (auto& [bd, pairs] : blocks) {
        std::sort(pairs.begin(), pairs.end());  // sigma lex-major, tau lex-minor
        auto& idx = index[bd];
        for (size_t i = 0; i < pairs.size(); ++i) idx[pairs[i]] = static_cast<int>(i);
    }
}

}  // namespace

DoubleComplex build_double_complex(const Complex& K, bool reduced) {
    DoubleComplex dc;
    dc.K_ = &K;
    dc.reduced_ = reduced;
    dc.complement_ = false;
    for (const Simplex& tau : K.all_simplices()) {
        if (!reduced && tau.empty()) continue;
        const int nt = static_cast<int>(tau.size());
        for (unsigned mask = 0; mask < (1u << nt); ++mask) {
            Simplex sigma;
            for (int i = 0; i < nt; ++i)
                if (mask & (1u << i)) sigma.push_back(tau[i]);
            if (!reduced && sigma.empty()) continue;
            dc.blocks_[{dim_of(sigma), dim_of(tau)}].push_back(BasisPair{sigma, tau});
        }
    }
    index_blocks(dc.blocks_, dc.index_);
    return dc;
}

DoubleComplex build_r_double_complex(const Complex& K) {
    DoubleComplex dc;
    dc.K_ = &K;
    dc.reduced_ = true;  // sigma ranges over K including phi
    dc.complement_ = true;
    const int nv = K.vertex_count();
    if (nv > 20) throw std::invalid_argument("R-complex too large for desk scale");
    for (unsigned long mask = 0; mask < (1ul << nv); ++mask) {
        Simplex tau;
        for (int i = 0; i < nv; ++i)
            if (mask & (1ul << i)) tau.push_back(i);
        if (K.contains(tau)) continue;
        const int nt = static_cast<int>(tau.size());
        for (unsigned sub = 0; sub < (1u << nt); ++sub) {
            Simplex sigma;
            for (int i = 0; i < nt; ++i)
                if (sub & (1u << i)) sigma.push_back(tau[i]);
            if (!K.contains(sigma)) continue;
            dc.blocks_[{dim_of(sigma), dim_of(tau)}].push_back(BasisPair{sigma, tau});
        }
    }
    index_blocks(dc.blocks_, dc.index_);
    return dc;
}

RhoEntry rho(const BasisPair& pair) {
    RhoEntry e;
    e.sigma = pair.sigma;
    std::set_difference(pair.tau.begin(), pair.tau.end(), pair.sigma.begin(),
                        pair.sigma.end(), std::back_inserter(e.tau));
    // inversions between the tau part and the sigma part of (tau, sigma)
    long inv = 0;
    for (int x : e.tau)
        for (int y : e.sigma)
            if (x > y) ++inv;
    e.sign = inv % 2 == 0 ? 1 : -1;
    return e;
}

int theorem6_generator_sign(const Simplex& sigma) {
    const long vertices = static_cast<long>(sigma.size());
    return (vertices / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace lhom
