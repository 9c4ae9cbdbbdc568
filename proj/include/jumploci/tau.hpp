#pragma once

#include "jumploci/exactlin.hpp"
#include "jumploci/laurent.hpp"

namespace jumploci {

inline constexpr std::size_t kDefaultTauSupportCap = 14;

// Exponential tangent cone at 1 of the hypersurface V(f), as a finite union
// of rational subspaces: enumerate the coefficient-sum-zero partitions of
// the support and take the maximal difference-constraint kernels. Returns
// the empty arrangement when f(1) != 0.
SubspaceArrangement tau1_hypersurface(const LaurentPolynomial& f,
                                      std::size_t support_cap = kDefaultTauSupportCap);

// tau_1 of the common zero set of a system (tau_1 commutes with
// intersections): pairwise-intersected hypersurface arrangements, reduced.
SubspaceArrangement tau1_system(const std::vector<LaurentPolynomial>& fs,
                                std::size_t support_cap = kDefaultTauSupportCap);

// True iff the one-parameter subgroup exp(t z) lies in the common zero set.
bool curve_in_variety(const std::vector<LaurentPolynomial>& fs,
                      const std::vector<long>& z);

// Defining form of the classical tangent cone TC_1(V(f)) at 1.
LaurentPolynomial tc1_hypersurface(const LaurentPolynomial& f);

}  // namespace jumploci
