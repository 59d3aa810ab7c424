#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rigid::simp {

// Finite simplicial complex stored by its facets (inclusion-maximal
// simplices). Vertices are dense integer ids 0..n-1 with a label table kept
// alongside; facets are sorted vertex lists, the facet set is sorted
// lexicographically so serialization is bit-exact across runs.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // `facets` need not be maximal or sorted; non-maximal entries are dropped.
  // Every vertex must appear in at least one facet (isolated vertices are
  // passed as singleton facets).
  SimplicialComplex(std::vector<std::string> labels,
                    std::vector<std::vector<int>> facets, bool flag = false);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  bool is_flag() const { return flag_; }
  bool empty() const { return labels_.empty(); }

  // Max facet size - 1; -1 for the empty complex.
  int dimension() const;
  bool is_pure() const;

  // All simplices of dimension d (sorted vertex lists, lex order).
  std::vector<std::vector<int>> simplices(int d) const;
  // Count of simplices per dimension 0..dim.
  std::vector<long long> face_vector() const;
  long long euler_characteristic() const;

  bool has_simplex(const std::vector<int>& sorted_vertices) const;

  // Vertices adjacent to v (sharing an edge), not including v.
  std::vector<int> neighbors(int v) const;
  // Closed star vertex set of v: v together with its neighbors.
  std::vector<int> closed_star_vertices(int v) const;

  // Link of a vertex: full structure on the simplices s with s+v a simplex.
  SimplicialComplex link(int v) const;

  // Full subcomplex induced on a vertex subset (ids relabelled densely,
  // labels preserved).
  SimplicialComplex full_subcomplex(const std::vector<int>& vertices) const;

  // Every (dim-1)-simplex lies in exactly two facets (and the complex is
  // pure). Used by the simplicial-sphere checks.
  bool is_pseudomanifold() const;

  std::string to_json() const;
  static SimplicialComplex from_json(const std::string& text);

  // Identity is the labelled facet structure; the flag marker is metadata.
  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && facets_ == o.facets_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> facets_;
  bool flag_ = false;
};

// Flag complex on `labels` whose simplices are the cliques of the adjacency
// predicate. The predicate must be symmetric and irreflexive; facets are the
// maximal cliques, enumerated by pivoting Bron-Kerbosch with degree ordering.
SimplicialComplex flag_complex(
    const std::vector<std::string>& labels,
    const std::function<bool(int, int)>& adjacent);

// Simplicial vertex map between complexes.
struct VertexMap {
  const SimplicialComplex* domain = nullptr;
  const SimplicialComplex* codomain = nullptr;
  std::vector<int> image;  // image[v] for every domain vertex

  // Image of every domain simplex spans a codomain simplex.
  bool is_simplicial() const;
};

// True iff the map is injective on the closed star of every vertex.
// Rejects non-simplicial input.
bool is_locally_injective(const VertexMap& map);

// Cone over a complex with a fresh apex label (test helper for homology).
SimplicialComplex cone(const SimplicialComplex& base, const std::string& apex);

}  // namespace rigid::simp
