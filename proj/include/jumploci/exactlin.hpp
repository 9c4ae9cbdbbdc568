#pragma once

#include <optional>
#include <vector>

#include "jumploci/matrix.hpp"

namespace jumploci {

// A rational linear subspace of Q^n, stored as the kernel of an integer
// constraint matrix. The matrix is kept in a unique echelon normal form
// (RREF pattern, primitive integer rows, positive pivots), so equality of
// subspaces is equality of representations.
class SubspaceQ {
 public:
  // The full space Q^n.
  explicit SubspaceQ(std::size_t ambient);
  // Kernel of the given constraint rows.
  SubspaceQ(std::size_t ambient, const std::vector<std::vector<Int>>& constraint_rows);

  static SubspaceQ zero(std::size_t ambient);
  static SubspaceQ span(std::size_t ambient, const std::vector<std::vector<Rat>>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return ambient_ - constraints_.size(); }
  const std::vector<std::vector<Int>>& constraints() const { return constraints_; }

  bool contains(const std::vector<Rat>& v) const;
  bool contains(const SubspaceQ& other) const;
  SubspaceQ intersect(const SubspaceQ& other) const;
  // Direct sum inside Q^{m+n}.
  SubspaceQ direct_sum(const SubspaceQ& other) const;
  // A rational basis of the subspace.
  std::vector<std::vector<Rat>> basis() const;

  bool operator==(const SubspaceQ&) const = default;
  bool operator<(const SubspaceQ& o) const {
    return constraints_ != o.constraints_ ? constraints_ < o.constraints_
                                          : ambient_ < o.ambient_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<std::vector<Int>> constraints_;  // canonical form

  void canonicalize(std::vector<std::vector<Rat>> rows);
};

// Finite union of rational subspaces, kept as an antichain of maximal
// members. The empty union (no members) is distinct from {0}.
class SubspaceArrangement {
 public:
  SubspaceArrangement() = default;
  explicit SubspaceArrangement(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  bool empty() const { return parts_.size() == 0; }
  const std::vector<SubspaceQ>& parts() const { return parts_; }

  void add(const SubspaceQ& s);
  bool contains(const std::vector<Rat>& v) const;
  bool is_full_space() const;
  SubspaceArrangement intersect(const SubspaceArrangement& other) const;
  SubspaceArrangement product(const SubspaceArrangement& other) const;

  bool operator==(const SubspaceArrangement&) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<SubspaceQ> parts_;  // sorted antichain
};

// True iff the rational row space of N meets Q^W nontrivially, where W is a
// set of column indices; decided by a rank comparison against N with the
// W-columns deleted.
bool rowspace_meets_coordinate_subspace(const ZMat& n,
                                        const std::vector<std::size_t>& w_columns);

}  // namespace jumploci
