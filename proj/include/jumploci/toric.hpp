#pragma once

#include "jumploci/simplicial.hpp"

namespace jumploci {

inline constexpr std::size_t kDefaultSweepCap = 16;

// Union of coordinate subspaces k^W (tag Subspace) or coordinate subtori
// (k^x)^W (tag Subtorus) of the ambient space on the vertex set of L;
// members are maximal. W = 0 encodes the single point {0} / {1}.
struct CoordinateArrangement {
  enum class Tag { Subspace, Subtorus } tag = Tag::Subspace;
  std::vector<std::string> vertices;
  std::vector<VMask> members;  // antichain, sorted
  int degree = 0;
  std::size_t depth = 1;
  Coeff coeff;

  bool contains_support(VMask support) const {
    for (VMask w : members)
      if ((support & ~w) == 0) return true;
    return false;
  }
};

// Aomoto-Betti number beta_i(k<L>, z_W) by the simplicial-homology formula:
// the sum over simplices sigma of L_{V\W} (including the empty simplex) of
// dim H~_{i-1-|sigma|}(lk_{L_W}(sigma), k).
std::size_t aomoto_betti(const SimplicialComplex& l, VMask w, int i, const Coeff& k);

// Independent oracle: dimension of H^i of the Aomoto complex (A, .z) built
// from the monomial basis of the exterior Stanley-Reisner ring.
std::size_t aomoto_oracle_q(const SimplicialComplex& l, const std::vector<Rat>& z, int i);
std::size_t aomoto_oracle_fp(const SimplicialComplex& l,
                             const std::vector<std::uint64_t>& z, int i,
                             std::uint64_t p);

// Second oracle: dim H_i(T_L, k_rho) from the equivariant chain complex of
// the toric complex, boundary coefficients rho(v) - 1.
std::size_t twisted_betti_oracle_q(const SimplicialComplex& l,
                                   const std::vector<Rat>& rho, int i);
std::size_t twisted_betti_oracle_fp(const SimplicialComplex& l,
                                    const std::vector<std::uint64_t>& rho, int i,
                                    std::uint64_t p);

// Maximal W with aomoto_betti(L, W, i, k) >= d; tag Subspace gives the
// resonance variety R^i_d(T_L, k), tag Subtorus the characteristic variety
// V^i_d(T_L, k).
CoordinateArrangement resonance_arrangement(const SimplicialComplex& l, int i,
                                            std::size_t d, const Coeff& k,
                                            std::size_t sweep_cap = kDefaultSweepCap);
CoordinateArrangement charvar_arrangement(const SimplicialComplex& l, int i,
                                          std::size_t d, const Coeff& k,
                                          std::size_t sweep_cap = kDefaultSweepCap);

}  // namespace jumploci
