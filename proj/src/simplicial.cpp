#include "jumploci/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace jumploci {

namespace {

std::map<std::string, std::size_t> build_index(const std::vector<std::string>& v) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!idx.emplace(v[i], i).second)
      throw std::invalid_argument("duplicate vertex name: " + v[i]);
  }
  return idx;
}

}  // namespace

void SimplicialComplex::rebuild_index() { index_ = build_index(vertices_); }

SimplicialComplex::SimplicialComplex(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& facets)
    : vertices_(std::move(vertices)), has_empty_(true) {
  if (vertices_.size() > 64)
    throw std::invalid_argument("at most 64 vertices supported");
  rebuild_index();
  for (const auto& f : facets) {
    VMask m = 0;
    for (const auto& name : f) m |= VMask{1} << vertex_index(name);
    if (m) simplices_.insert(m);
  }
  close_downward();
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> vertices) {
  SimplicialComplex k;
  k.vertices_ = std::move(vertices);
  k.rebuild_index();
  return k;
}

SimplicialComplex SimplicialComplex::irrelevant(std::vector<std::string> vertices) {
  SimplicialComplex k = void_complex(std::move(vertices));
  k.has_empty_ = true;
  return k;
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<std::string> vertices,
                                                const std::set<VMask>& simplices,
                                                bool has_empty) {
  SimplicialComplex k;
  k.vertices_ = std::move(vertices);
  if (k.vertices_.size() > 64)
    throw std::invalid_argument("at most 64 vertices supported");
  k.rebuild_index();
  for (VMask s : simplices)
    if (s) k.simplices_.insert(s);
  k.has_empty_ = has_empty || !k.simplices_.empty();
  k.close_downward();
  return k;
}

void SimplicialComplex::close_downward() {
  std::vector<VMask> work(simplices_.begin(), simplices_.end());
  while (!work.empty()) {
    VMask s = work.back();
    work.pop_back();
    for (VMask b = s; b;) {
      VMask low = b & (~b + 1);
      VMask face = s & ~low;
      b &= ~low;
      if (face && simplices_.insert(face).second) work.push_back(face);
    }
  }
}

std::size_t SimplicialComplex::vertex_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + name);
  return it->second;
}

VMask SimplicialComplex::mask_of(const std::vector<std::string>& names) const {
  VMask m = 0;
  for (const auto& n : names) m |= VMask{1} << vertex_index(n);
  return m;
}

int SimplicialComplex::dimension() const {
  if (is_void()) return -2;
  int d = -1;
  for (VMask s : simplices_) d = std::max(d, std::popcount(s) - 1);
  return d;
}

std::vector<std::vector<VMask>> SimplicialComplex::by_cardinality() const {
  std::vector<std::vector<VMask>> out(static_cast<std::size_t>(dimension() + 2));
  if (is_void()) return out;
  if (has_empty_) out[0].push_back(0);
  for (VMask s : simplices_)
    out[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  return out;
}

SimplicialComplex SimplicialComplex::induced(VMask w) const {
  SimplicialComplex k;
  k.vertices_ = vertices_;
  k.index_ = index_;
  k.has_empty_ = has_empty_;
  for (VMask s : simplices_)
    if ((s & ~w) == 0) k.simplices_.insert(s);
  return k;
}

SimplicialComplex SimplicialComplex::link(const SimplicialComplex& k, VMask sigma) const {
  if (!has_simplex(sigma))
    throw std::invalid_argument("link: sigma is not a simplex of the complex");
  SimplicialComplex out;
  out.vertices_ = vertices_;
  out.index_ = index_;
  out.has_empty_ = k.has_empty_;  // empty simplex qualifies since sigma is in L
  for (VMask t : k.simplices_)
    if ((t & sigma) == 0 && has_simplex(t | sigma)) out.simplices_.insert(t);
  return out;
}

SimplicialComplex SimplicialComplex::barycentric_subdivision() const {
  if (is_void()) return void_complex({});
  if (is_irrelevant()) return irrelevant({});
  std::vector<VMask> cells(simplices_.begin(), simplices_.end());
  std::vector<std::string> names;
  names.reserve(cells.size());
  for (VMask s : cells) {
    std::string n;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (s & (VMask{1} << v)) {
        if (!n.empty()) n += "_";
        n += vertices_[v];
      }
    names.push_back(std::move(n));
  }
  if (cells.size() > 64)
    throw std::invalid_argument("barycentric subdivision exceeds 64 vertices");
  std::map<VMask, std::size_t> cell_idx;
  for (std::size_t i = 0; i < cells.size(); ++i) cell_idx[cells[i]] = i;

  std::set<VMask> chains;
  // every chain in the face poset is a simplex of the subdivision
  std::vector<std::pair<VMask, VMask>> stack;  // (chain-mask, top cell)
  for (std::size_t i = 0; i < cells.size(); ++i)
    stack.push_back({VMask{1} << i, cells[i]});
  while (!stack.empty()) {
    auto [chain, top] = stack.back();
    stack.pop_back();
    chains.insert(chain);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      VMask c = cells[j];
      if (c != top && (c & top) == top)  // proper superset of top
        stack.push_back({chain | (VMask{1} << j), c});
    }
  }
  return from_masks(std::move(names), chains, true);
}

Graph SimplicialComplex::one_skeleton() const {
  std::vector<std::pair<std::string, std::string>> edges;
  for (VMask s : simplices_) {
    if (std::popcount(s) != 2) continue;
    std::size_t a = static_cast<std::size_t>(std::countr_zero(s));
    std::size_t b = static_cast<std::size_t>(63 - std::countl_zero(s));
    edges.push_back({vertices_[a], vertices_[b]});
  }
  return Graph(vertices_, edges);
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& other) const {
  if (is_void() || other.is_void()) return void_complex({});
  std::vector<std::string> verts = vertices_;
  verts.insert(verts.end(), other.vertices_.begin(), other.vertices_.end());
  std::size_t shift = vertices_.size();
  std::set<VMask> out;
  std::vector<VMask> left(simplices_.begin(), simplices_.end());
  left.push_back(0);
  std::vector<VMask> right(other.simplices_.begin(), other.simplices_.end());
  right.push_back(0);
  for (VMask s : left)
    for (VMask t : right)
      if (VMask u = s | (t << shift)) out.insert(u);
  SimplicialComplex k = from_masks(std::move(verts), out, true);
  return k;
}

SimplicialComplex SimplicialComplex::disjoint_union(const SimplicialComplex& other) const {
  std::vector<std::string> verts = vertices_;
  verts.insert(verts.end(), other.vertices_.begin(), other.vertices_.end());
  std::size_t shift = vertices_.size();
  std::set<VMask> out(simplices_.begin(), simplices_.end());
  for (VMask t : other.simplices_) out.insert(t << shift);
  return from_masks(std::move(verts), out, has_empty_ || other.has_empty_);
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)), index_(build_index(vertices_)) {
  for (const auto& [a, b] : edges) {
    std::size_t i = vertex_index(a), j = vertex_index(b);
    if (i == j) throw std::invalid_argument("loop edge rejected: " + a);
    edges_.insert({std::min(i, j), std::max(i, j)});
  }
}

std::size_t Graph::vertex_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + name);
  return it->second;
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

Graph Graph::induced(VMask w) const {
  Graph g;
  g.vertices_ = vertices_;
  g.index_ = index_;
  for (const auto& [a, b] : edges_)
    if ((w >> a & 1) && (w >> b & 1)) g.edges_.insert({a, b});
  // vertices outside w are conceptually absent; callers track w themselves
  return g;
}

Graph Graph::join(const Graph& other) const {
  std::vector<std::string> verts = vertices_;
  verts.insert(verts.end(), other.vertices_.begin(), other.vertices_.end());
  Graph g;
  g.vertices_ = std::move(verts);
  g.index_ = build_index(g.vertices_);
  std::size_t shift = vertices_.size();
  g.edges_ = edges_;
  for (const auto& [a, b] : other.edges_) g.edges_.insert({a + shift, b + shift});
  for (std::size_t i = 0; i < shift; ++i)
    for (std::size_t j = 0; j < other.vertices_.size(); ++j)
      g.edges_.insert({i, shift + j});
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  std::vector<std::string> verts = vertices_;
  verts.insert(verts.end(), other.vertices_.begin(), other.vertices_.end());
  Graph g;
  g.vertices_ = std::move(verts);
  g.index_ = build_index(g.vertices_);
  std::size_t shift = vertices_.size();
  g.edges_ = edges_;
  for (const auto& [a, b] : other.edges_) g.edges_.insert({a + shift, b + shift});
  return g;
}

SimplicialComplex flag_complex(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("at most 64 vertices supported");
  // enumerate cliques by extension with higher-indexed vertices
  std::set<VMask> cliques;
  std::vector<std::pair<VMask, std::size_t>> stack;  // (clique, next candidate)
  for (std::size_t v = 0; v < n; ++v) stack.push_back({VMask{1} << v, v + 1});
  while (!stack.empty()) {
    auto [c, next] = stack.back();
    stack.pop_back();
    cliques.insert(c);
    for (std::size_t w = next; w < n; ++w) {
      bool ok = true;
      for (std::size_t v = 0; v < w && ok; ++v)
        if ((c >> v & 1) && !g.adjacent(v, w)) ok = false;
      if (ok) stack.push_back({c | (VMask{1} << w), w + 1});
    }
  }
  return SimplicialComplex::from_masks(g.vertices(), cliques, true);
}

namespace {

std::size_t components_avoiding(const Graph& g, std::size_t skip) {
  std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (s == skip || comp[s] != SIZE_MAX) continue;
    ++count;
    std::vector<std::size_t> bfs{s};
    comp[s] = count;
    while (!bfs.empty()) {
      std::size_t v = bfs.back();
      bfs.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (w != skip && comp[w] == SIZE_MAX && g.adjacent(v, w)) {
          comp[w] = count;
          bfs.push_back(w);
        }
    }
  }
  return count;
}

}  // namespace

Connectivity graph_connectivity(const Graph& g) {
  Connectivity c;
  std::size_t n = g.vertex_count();
  if (n == 0) {
    c.is_connected = false;
    c.empty_graph_convention = true;
    return c;
  }
  std::size_t base = components_avoiding(g, SIZE_MAX);
  c.is_connected = (base == 1);
  if (n >= 3) {
    for (std::size_t v = 0; v < n; ++v)
      if (components_avoiding(g, v) > base) c.cut_vertices.push_back(v);
  }
  return c;
}

ZMat boundary_matrix(const std::vector<VMask>& from, const std::vector<VMask>& to) {
  std::map<VMask, std::size_t> to_idx;
  for (std::size_t i = 0; i < to.size(); ++i) to_idx[to[i]] = i;
  ZMat m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    VMask s = from[j];
    int sign = 1;
    for (VMask b = s; b;) {
      VMask low = b & (~b + 1);
      b &= ~low;
      auto it = to_idx.find(s & ~low);
      if (it != to_idx.end()) m(it->second, j) = sign;
      sign = -sign;
    }
  }
  return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& k, const Coeff& coeff) {
  if (coeff.kind == Coeff::Kind::Fp && !is_prime_u64(coeff.p))
    throw std::invalid_argument("non-prime modulus");
  HomologyProfile h;
  h.coeff = coeff;
  h.min_degree = -1;
  if (k.is_void()) return h;

  auto cells = k.by_cardinality();  // index c = cardinality c
  std::size_t top = cells.size();   // degrees -1 .. top-2
  // boundary_c : C_{c-1} -> C_{c-2} in degree terms; ranks_z / ranks over field
  std::vector<std::size_t> rank(top + 1, 0);
  std::vector<SmithForm> snf(top + 1);
  for (std::size_t c = 1; c < top; ++c) {
    ZMat b = boundary_matrix(cells[c], cells[c - 1]);
    if (coeff.kind == Coeff::Kind::Z) {
      snf[c] = smith_normal_form(b);
      rank[c] = snf[c].rank;
    } else {
      rank[c] = rank_over_field(b, coeff);
    }
  }
  h.betti.resize(top);
  h.torsion.resize(top);
  for (std::size_t c = 0; c < top; ++c) {
    std::size_t dim_c = cells[c].size();
    std::size_t r_in = (c + 1 < top) ? rank[c + 1] : 0;
    h.betti[c] = dim_c - rank[c] - r_in;
    if (coeff.kind == Coeff::Kind::Z && c + 1 < top) {
      for (const Int& d : snf[c + 1].diagonal)
        if (d > 1) h.torsion[c].push_back(d);
    }
  }
  return h;
}

}  // namespace jumploci
