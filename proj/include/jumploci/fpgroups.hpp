#pragma once

#include <map>
#include <string>
#include <vector>

#include "jumploci/exactlin.hpp"
#include "jumploci/laurent.hpp"
#include "jumploci/tau.hpp"

namespace jumploci {

// A word in a free group: letters are +-(j+1) for generator j and its
// inverse. Words are kept freely reduced.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);

struct GroupPresentation {
  std::size_t ngens = 0;
  std::vector<Word> relators;  // freely reduced on construction

  GroupPresentation(std::size_t n, std::vector<Word> rels);
  // Exponent matrix: one row per relator, total exponent per generator.
  ZMat exponent_matrix() const;
};

// Formal Z-linear combination of free-group words (the group ring ZF_n).
struct FreeGroupRingElement {
  std::map<Word, Int> terms;  // words freely reduced, coefficients nonzero

  void add(const Word& w, const Int& c);
  FreeGroupRingElement operator+(const FreeGroupRingElement& o) const;
  bool operator==(const FreeGroupRingElement&) const = default;
};

// Free Fox derivative d(r)/d(x_j): d(uv) = du + u dv, d(x_j) = 1,
// d(x_j^{-1}) = -x_j^{-1}.
FreeGroupRingElement fox_derivative(const Word& r, std::size_t j);

// Abelianization data of the presentation: Smith form of the exponent
// matrix, free rank, torsion, and the projection onto the maximal free
// abelian quotient G_abf = Z^r.
struct AbelianizationData {
  std::size_t ngens = 0;
  std::size_t free_rank = 0;
  std::vector<Int> torsion;      // invariant factors > 1
  ZMat abf;                      // ngens x free_rank: generator j -> row j
  std::vector<Int> abf_of_word(const Word& w) const;
};

AbelianizationData abelianization(const GroupPresentation& p);

struct AlexanderMatrix {
  std::size_t rows = 0, cols = 0;  // relators x generators
  std::size_t nvars = 0;           // rank of G_abf
  std::vector<LaurentPolynomial> entries;  // row-major
  const LaurentPolynomial& at(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }
};

// Abelianize a group ring element through the abf projection.
LaurentPolynomial abelianize(const FreeGroupRingElement& e,
                             const AbelianizationData& ab);

// A_G = (dr_i/dx_j)^{abf}: the matrix of abelianized Fox derivatives.
AlexanderMatrix alexander_matrix(const GroupPresentation& p);

// Depth-d membership of rho in V^1_1-style jump loci of the presentation
// 2-complex; rho is a point of (k^x)^r on the G_abf coordinates.
bool charvar1_member_q(const GroupPresentation& p, const std::vector<Rat>& rho,
                       std::size_t d);
bool charvar1_member_fp(const GroupPresentation& p,
                        const std::vector<std::uint64_t>& rho, std::size_t d,
                        std::uint64_t p_mod);

// The (n-1)-minors of the Alexander matrix, deduplicated up to sign and
// monomial factor. Size-zero minors give the constant 1; if there are too
// few rows the list is empty (zero ideal).
std::vector<LaurentPolynomial> alexander_codim1_minors(const GroupPresentation& p);

struct Sigma1Bound {
  SubspaceArrangement arrangement;  // certified complement of Sigma^1
  bool full_space = false;          // Sigma^1 = empty (deficiency shortcut or covering)
};

// tau_1(V^0_1 u V^1_1) = {0} u tau_1(minor system), the exponential tangent
// cone upper bound: every nonzero rational character inside the arrangement
// is certified outside Sigma^1. If ngens - #relators > 1 the full space is
// returned (Sigma^1 is empty).
Sigma1Bound sigma1_upper_bound(const GroupPresentation& p,
                               std::size_t support_cap = kDefaultTauSupportCap);

// Finiteness of H_{<=1} of the infinite cyclic cover in direction z: finite
// iff some codim-1 minor restricts to a nonzero polynomial along z.
bool cyclic_cover_finite(const GroupPresentation& p, const std::vector<long>& z);

}  // namespace jumploci
