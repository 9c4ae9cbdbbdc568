#include "jumploci/toric.hpp"

#include <algorithm>
#include <bit>

namespace jumploci {

namespace {

VMask full_mask(const SimplicialComplex& l) {
  return l.vertex_count() == 64 ? ~VMask{0}
                                : (VMask{1} << l.vertex_count()) - 1;
}

// right-multiplication sign: v* moved past the elements of sigma above v
int ext_sign(VMask sigma, std::size_t v) {
  VMask above = v + 1 >= 64 ? 0 : sigma >> (v + 1);
  return std::popcount(above) % 2 == 0 ? 1 : -1;
}

// boundary sign of v inside sigma: (-1)^{position of v}
int bdry_sign(VMask sigma, std::size_t v) {
  VMask below = sigma & ((VMask{1} << v) - 1);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

struct Grading {
  std::vector<std::vector<VMask>> cells;  // cells[c] = cardinality-c simplices
  std::vector<std::map<VMask, std::size_t>> index;

  explicit Grading(const SimplicialComplex& l) {
    cells = l.by_cardinality();
    index.resize(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (std::size_t i = 0; i < cells[c].size(); ++i) index[c][cells[c][i]] = i;
  }
  std::size_t dim(std::size_t c) const {
    return c < cells.size() ? cells[c].size() : 0;
  }
};

// Generic cohomology dimension of a three-term piece of a cochain complex,
// given the two differentials as rank callables.
template <class Scalar, class Ring>
std::size_t aomoto_dim(const SimplicialComplex& l, const std::vector<Scalar>& z,
                       int i, const Ring& ring) {
  if (i < 0 || l.is_void()) return 0;
  Grading g(l);
  auto card = static_cast<std::size_t>(i);
  std::size_t dim_i = g.dim(card);
  if (dim_i == 0) return 0;

  auto differential = [&](std::size_t c) -> Mat<Scalar> {
    // A^c -> A^{c+1}
    Mat<Scalar> m(g.dim(c + 1), g.dim(c));
    if (m.rows == 0 || m.cols == 0) return m;
    for (std::size_t j = 0; j < g.cells[c].size(); ++j) {
      VMask sigma = g.cells[c][j];
      for (std::size_t v = 0; v < l.vertex_count(); ++v) {
        if (sigma & (VMask{1} << v)) continue;
        VMask up = sigma | (VMask{1} << v);
        auto it = g.index[c + 1].find(up);
        if (it == g.index[c + 1].end()) continue;
        Scalar coef = ring.scale(z[v], ext_sign(sigma, v));
        m(it->second, j) = ring.add(m(it->second, j), coef);
      }
    }
    return m;
  };

  std::size_t rank_out = ring.rank(differential(card));
  std::size_t rank_in = card > 0 ? ring.rank(differential(card - 1)) : 0;
  return dim_i - rank_out - rank_in;
}

template <class Scalar, class Ring>
std::size_t twisted_dim(const SimplicialComplex& l, const std::vector<Scalar>& rho,
                        int i, const Ring& ring) {
  if (i < 0 || l.is_void()) return 0;
  Grading g(l);
  auto card = static_cast<std::size_t>(i);
  std::size_t dim_i = g.dim(card);
  if (dim_i == 0) return 0;

  auto boundary = [&](std::size_t c) -> Mat<Scalar> {
    // C_c -> C_{c-1}, coefficients rho(v) - 1
    if (c == 0) return Mat<Scalar>(0, g.dim(0));
    Mat<Scalar> m(g.dim(c - 1), g.dim(c));
    if (m.rows == 0 || m.cols == 0) return m;
    for (std::size_t j = 0; j < g.cells[c].size(); ++j) {
      VMask sigma = g.cells[c][j];
      for (std::size_t v = 0; v < l.vertex_count(); ++v) {
        if (!(sigma & (VMask{1} << v))) continue;
        auto it = g.index[c - 1].find(sigma & ~(VMask{1} << v));
        if (it == g.index[c - 1].end()) continue;
        Scalar coef = ring.scale(ring.minus_one(rho[v]), bdry_sign(sigma, v));
        m(it->second, j) = ring.add(m(it->second, j), coef);
      }
    }
    return m;
  };

  std::size_t rank_out = ring.rank(boundary(card));
  std::size_t rank_in = ring.rank(boundary(card + 1));
  return dim_i - rank_out - rank_in;
}

struct QRing {
  Rat scale(const Rat& x, int sign) const { return sign > 0 ? x : Rat(-x); }
  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat minus_one(const Rat& x) const { return x - 1; }
  std::size_t rank(const QMat& m) const { return rank_q(m); }
};

struct FpRing {
  std::uint64_t p;
  std::uint64_t scale(std::uint64_t x, int sign) const {
    x %= p;
    return sign > 0 ? x : (x == 0 ? 0 : p - x);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return fp_add(a, b, p); }
  std::uint64_t minus_one(std::uint64_t x) const { return fp_sub(x % p, 1 % p, p); }
  std::size_t rank(const FpMat& m) const { return rank_fp(m, p); }
};

}  // namespace

std::size_t aomoto_betti(const SimplicialComplex& l, VMask w, int i, const Coeff& k) {
  if (!k.is_field()) throw std::invalid_argument("aomoto_betti needs a field");
  if (i < 0) throw std::invalid_argument("degree must be nonnegative");
  if (w & ~full_mask(l)) throw std::invalid_argument("W is not a vertex subset");
  if (l.is_void()) return 0;

  SimplicialComplex lw = l.induced(w);
  SimplicialComplex lcomp = l.induced(full_mask(l) & ~w);
  std::size_t total = 0;
  auto add_sigma = [&](VMask sigma) {
    int degree = i - 1 - std::popcount(sigma);
    if (degree < -1) return;
    HomologyProfile h = reduced_homology(l.link(lw, sigma), k);
    total += h.betti_at(degree);
  };
  if (lcomp.has_empty_simplex()) add_sigma(0);
  for (VMask sigma : lcomp.simplices()) add_sigma(sigma);
  return total;
}

std::size_t aomoto_oracle_q(const SimplicialComplex& l, const std::vector<Rat>& z,
                            int i) {
  if (z.size() != l.vertex_count()) throw std::invalid_argument("z length mismatch");
  return aomoto_dim(l, z, i, QRing{});
}

std::size_t aomoto_oracle_fp(const SimplicialComplex& l,
                             const std::vector<std::uint64_t>& z, int i,
                             std::uint64_t p) {
  if (z.size() != l.vertex_count()) throw std::invalid_argument("z length mismatch");
  if (!is_prime_u64(p)) throw std::invalid_argument("non-prime modulus");
  return aomoto_dim(l, z, i, FpRing{p});
}

std::size_t twisted_betti_oracle_q(const SimplicialComplex& l,
                                   const std::vector<Rat>& rho, int i) {
  if (rho.size() != l.vertex_count())
    throw std::invalid_argument("rho length mismatch");
  for (const auto& r : rho)
    if (r == 0) throw std::invalid_argument("rho must be invertible");
  return twisted_dim(l, rho, i, QRing{});
}

std::size_t twisted_betti_oracle_fp(const SimplicialComplex& l,
                                    const std::vector<std::uint64_t>& rho, int i,
                                    std::uint64_t p) {
  if (rho.size() != l.vertex_count())
    throw std::invalid_argument("rho length mismatch");
  if (!is_prime_u64(p)) throw std::invalid_argument("non-prime modulus");
  for (auto r : rho)
    if (r % p == 0) throw std::invalid_argument("rho must be invertible");
  return twisted_dim(l, rho, i, FpRing{p});
}

namespace {

CoordinateArrangement sweep(const SimplicialComplex& l, int i, std::size_t d,
                            const Coeff& k, std::size_t cap,
                            CoordinateArrangement::Tag tag) {
  if (d < 1) throw std::invalid_argument("depth must be at least 1");
  if (l.vertex_count() > cap)
    throw std::invalid_argument("W-sweep cap exceeded: " +
                                std::to_string(l.vertex_count()) + " vertices > cap " +
                                std::to_string(cap));
  CoordinateArrangement out;
  out.tag = tag;
  out.vertices = l.vertices();
  out.degree = i;
  out.depth = d;
  out.coeff = k;

  std::vector<VMask> hits;
  VMask all = full_mask(l);
  // beta is not monotone in W, so every subset must be tested
  for (VMask w = 0;; ++w) {
    if (aomoto_betti(l, w, i, k) >= d) hits.push_back(w);
    if (w == all) break;
  }
  std::sort(hits.begin(), hits.end(), [](VMask a, VMask b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b)
                                                : a < b;
  });
  for (VMask w : hits) {
    bool dominated = false;
    for (VMask m : out.members)
      if ((w & ~m) == 0) { dominated = true; break; }
    if (!dominated) out.members.push_back(w);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace

CoordinateArrangement resonance_arrangement(const SimplicialComplex& l, int i,
                                            std::size_t d, const Coeff& k,
                                            std::size_t sweep_cap) {
  return sweep(l, i, d, k, sweep_cap, CoordinateArrangement::Tag::Subspace);
}

CoordinateArrangement charvar_arrangement(const SimplicialComplex& l, int i,
                                          std::size_t d, const Coeff& k,
                                          std::size_t sweep_cap) {
  return sweep(l, i, d, k, sweep_cap, CoordinateArrangement::Tag::Subtorus);
}

}  // namespace jumploci
