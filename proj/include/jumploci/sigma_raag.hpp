#pragma once

#include <map>
#include <utility>

#include "jumploci/exactlin.hpp"
#include "jumploci/toric.hpp"

namespace jumploci {

// chi in Hom(G_Gamma, Z) ox Q, one rational per vertex of the graph.
using Character = std::vector<Rat>;

VMask character_support(const Character& chi);

// Membership of chi in Sigma^q(G_Gamma, coeff) for the right-angled Artin
// group on Gamma: with W = supp(chi) and L the flag complex, requires
// H~_j(lk_{L_W}(sigma), coeff) = 0 for every sigma of L_{V\W} (including the
// empty simplex) and every -1 <= j <= q - dim(sigma) - 2. Over Z, vanishing
// means the trivial group. Depends on chi only through its support.
bool sigma_member(const Graph& gamma, const Character& chi, int q,
                  const Coeff& coeff);

// The per-support verdict underlying sigma_member.
bool sigma_support_good(const Graph& gamma, VMask support, int q, const Coeff& coeff);

// Verdict for every nonempty support W.
using SupportVerdictTable = std::map<VMask, bool>;
SupportVerdictTable sigma_describe(const Graph& gamma, int q, const Coeff& coeff,
                                   std::size_t sweep_cap = kDefaultSweepCap);

// Finiteness of dim_k H_{<=q} of the free abelian cover of the toric complex
// T_L along nu: Z^V ->> Z^r (rows of nu are the r coordinate forms). True iff
// no support W with a nonzero Aomoto-Betti number in degrees <= q meets the
// row space of nu.
bool dwyer_fried_toric(const SimplicialComplex& l, const ZMat& nu, int q,
                       const Coeff& field, std::size_t sweep_cap = kDefaultSweepCap);

struct BestvinaBradyPredicates {
  bool fg = false;                      // N_Gamma finitely generated
  bool h1_monodromy_trivial = false;    // H~_0(Delta, Q) = 0
  bool h12_monodromy_trivial = false;   // H~_{<=1}(Delta, Q) = 0
  bool fp_necessary = false;            // H_{<=1}(Delta, Z) trivial; necessary only
};

BestvinaBradyPredicates bestvina_brady_predicates(const Graph& gamma);

// Components of V^1_1(N_chi, k): maximal W with Gamma_W disconnected, with
// the dimension of the corresponding subtorus (|W| - 1 when supp(chi) is
// inside W, else |W|). Requires trivial H_1-monodromy: either the caller
// asserts it, or chi is constant nonzero on a connected graph.
std::vector<std::pair<VMask, std::size_t>> artin_kernel_v11(
    const Graph& gamma, const Character& chi, const Coeff& field,
    bool assume_trivial_monodromy = false);

struct ArtinKernelSigma1Bound {
  // Preimages in Q^V of the excluded subspaces: Q^W + Q chi for every W with
  // Gamma_W disconnected, maximal-reduced. Every member contains chi.
  SubspaceArrangement arrangement;
  // A cut vertex v with chi(v) != 0 forces Sigma^1(N_chi) to be empty; then
  // the arrangement sweep is skipped.
  bool empty_sigma = false;
};

ArtinKernelSigma1Bound artin_kernel_sigma1_bound(
    const Graph& gamma, const Character& chi, bool assume_trivial_monodromy = false,
    std::size_t sweep_cap = kDefaultSweepCap);

}  // namespace jumploci
