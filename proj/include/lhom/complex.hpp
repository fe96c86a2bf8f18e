// Combinatorial kernel: finite simplicial complexes, links, constructors
// and stellar subdivision. Complexes are immutable after construction and
// all operations are pure.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lhom {

// A simplex is a strictly ascending list of vertex ids; {} is the empty
// simplex phi of dimension -1.
using Simplex = std::vector<int>;

inline int dim_of(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

class Complex {
  public:
    // Downward closure of the given simplices over the given vertex order.
    // Every listed vertex becomes a 0-simplex (Definition 1 condition 1);
    // phi is always present.
    Complex(std::vector<std::string> vertex_names, const std::vector<Simplex>& simplices);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> vertex_id(const std::string& name) const;

    // Largest simplex dimension; -1 for {phi}.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    bool contains(const Simplex& s) const { return all_.count(s) > 0; }
    // Simplices of dimension k in lexicographic order (k >= 0).
    const std::vector<Simplex>& simplices(int k) const;
    // Index of s within simplices(dim_of(s)).
    int index_of(const Simplex& s) const;
    const std::set<Simplex>& all_simplices() const { return all_; }

    std::vector<long> f_vector() const;
    long euler_characteristic() const;  // unreduced: sum_k (-1)^k f_k
    std::vector<Simplex> maximal_simplices() const;

    bool operator==(const Complex& o) const {
        return names_ == o.names_ && all_ == o.all_;
    }

    // True when the two complexes have identical simplex sets after some
    // bijective vertex relabeling (brute force; desk scale only).
    bool isomorphic_to(const Complex& o) const;

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::set<Simplex> all_;  // includes {}
};

// Closure of maximal simplices given by vertex names. Vertex order is
// declared_order when provided (an error if a used name is missing from
// it), otherwise first appearance.
Complex build_complex(const std::vector<std::vector<std::string>>& maximal,
                      const std::optional<std::vector<std::string>>& declared_order =
                          std::nullopt);

// {tau in K | sigma u tau in K, sigma n tau = phi} on the induced vertex
// subset, ambient order preserved. ambient_vertex, when given, receives the
// map link-vertex-id -> K-vertex-id.
Complex link(const Complex& K, const Simplex& sigma,
             std::vector<int>* ambient_vertex = nullptr);

enum class StandardKind { Full, Boundary };

// Full: 2^sigma on n+1 vertices v0..vn. Boundary: all proper subsets.
Complex standard_complex(StandardKind kind, int n);

// K*L: all sigma u tau with the vertex sets made disjoint (K first).
Complex join(const Complex& K, const Complex& L);

// Join with a fresh single-vertex complex; apex appended last.
Complex cone(const Complex& K);

Complex disjoint_union(const Complex& K, const Complex& L);

// One-point union identifying bl in L with bk in K; defaults: first vertex.
Complex wedge(const Complex& K, const Complex& L, int bk = 0, int bl = 0);

// Staircase Cartesian product; vertex set S x T in lexicographic order.
Complex cartesian_product(const Complex& K, const Complex& L);

// Definition 9. sigma = phi returns K; |sigma| = 0 replaces the vertex by
// a fresh one; otherwise the star of sigma is replaced by the cone on
// boundary(sigma) * link(sigma) with a fresh apex appended last.
Complex stellar_subdivision(const Complex& K, const Simplex& sigma);

// Same complex with vertices listed in a new order; perm[i] is the old id
// placed at position i.
Complex permuted_vertices(const Complex& K, const std::vector<int>& perm);

// Downward closure and vertex-per-table-entry check; throws on violation.
void validate(const Complex& K);

std::string simplex_str(const Complex& K, const Simplex& s);

}  // namespace lhom
