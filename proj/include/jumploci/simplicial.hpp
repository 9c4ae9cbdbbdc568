#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jumploci/matrix.hpp"

namespace jumploci {

// Vertex subsets are bitmasks over the (ordered) vertex list; at most 64
// vertices per complex.
using VMask = std::uint64_t;

class Graph;

// Finite abstract simplicial complex. Simplices are stored explicitly
// (downward closed); the empty simplex is first-class, so the three bottom
// states are distinguishable: void (no simplices), {empty}, nonempty.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the void complex on an empty vertex set
  // Complex with the given vertices and facets; the empty simplex is always
  // included. Vertices not covered by a facet are isolated (not 0-cells).
  SimplicialComplex(std::vector<std::string> vertices,
                    const std::vector<std::vector<std::string>>& facets);
  static SimplicialComplex void_complex(std::vector<std::string> vertices);
  static SimplicialComplex irrelevant(std::vector<std::string> vertices);
  static SimplicialComplex from_masks(std::vector<std::string> vertices,
                                      const std::set<VMask>& simplices,
                                      bool has_empty);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t vertex_index(const std::string& name) const;
  VMask mask_of(const std::vector<std::string>& names) const;

  bool is_void() const { return !has_empty_ && simplices_.empty(); }
  bool is_irrelevant() const { return has_empty_ && simplices_.empty(); }
  bool has_empty_simplex() const { return has_empty_; }
  // Nonempty simplices, as masks.
  const std::set<VMask>& simplices() const { return simplices_; }
  bool has_simplex(VMask s) const {
    return s == 0 ? has_empty_ : simplices_.count(s) > 0;
  }
  int dimension() const;  // -2 for void, -1 for {empty}

  // Simplices of each cardinality (c = 0 is the empty simplex).
  std::vector<std::vector<VMask>> by_cardinality() const;

  SimplicialComplex induced(VMask w) const;
  // Link of sigma in the subcomplex K, membership tested in *this:
  // { tau in K | tau union sigma in this }.
  SimplicialComplex link(const SimplicialComplex& k, VMask sigma) const;
  SimplicialComplex link(VMask sigma) const { return link(*this, sigma); }

  SimplicialComplex barycentric_subdivision() const;
  Graph one_skeleton() const;

  // Join (all unions of a simplex here and a simplex there) and disjoint
  // union, on the concatenated vertex set.
  SimplicialComplex join(const SimplicialComplex& other) const;
  SimplicialComplex disjoint_union(const SimplicialComplex& other) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::map<std::string, std::size_t> index_;
  std::set<VMask> simplices_;  // nonempty simplices only
  bool has_empty_ = false;

  void close_downward();
  void rebuild_index();
};

class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t vertex_index(const std::string& name) const;

  Graph induced(VMask w) const;
  // Graph join: disjoint union plus all cross edges.
  Graph join(const Graph& other) const;
  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::map<std::string, std::size_t> index_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;  // a < b
};

SimplicialComplex flag_complex(const Graph& g);

struct Connectivity {
  bool is_connected = false;
  bool empty_graph_convention = false;  // empty graph: disconnected, flagged
  std::vector<std::size_t> cut_vertices;
};

Connectivity graph_connectivity(const Graph& g);

// Reduced homology. Degrees run from -1 upward; over Z the profile carries
// rank and torsion coefficients per degree.
struct HomologyProfile {
  Coeff coeff;
  int min_degree = -1;
  std::vector<std::size_t> betti;          // index 0 <-> degree -1
  std::vector<std::vector<Int>> torsion;   // Z only; entries > 1

  std::size_t betti_at(int degree) const {
    int idx = degree - min_degree;
    if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
    return betti[static_cast<std::size_t>(idx)];
  }
  const std::vector<Int>& torsion_at(int degree) const {
    static const std::vector<Int> none;
    int idx = degree - min_degree;
    if (idx < 0 || idx >= static_cast<int>(torsion.size())) return none;
    return torsion[static_cast<std::size_t>(idx)];
  }
  // Over Z: trivial group in the given degree.
  bool trivial_at(int degree) const {
    return betti_at(degree) == 0 && torsion_at(degree).empty();
  }
};

HomologyProfile reduced_homology(const SimplicialComplex& k, const Coeff& coeff);

// Boundary matrix from cardinality c simplices to cardinality c-1 simplices
// of the reduced chain complex (c = 1 gives the augmentation to the empty
// simplex). Entries are signs from the construction-time vertex order.
ZMat boundary_matrix(const std::vector<VMask>& from, const std::vector<VMask>& to);

}  // namespace jumploci
