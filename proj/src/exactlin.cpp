#include "jumploci/exactlin.hpp"

#include <algorithm>
#include <set>

namespace jumploci {

SubspaceQ::SubspaceQ(std::size_t ambient) : ambient_(ambient) {}

SubspaceQ::SubspaceQ(std::size_t ambient,
                     const std::vector<std::vector<Int>>& constraint_rows)
    : ambient_(ambient) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(constraint_rows.size());
  for (const auto& r : constraint_rows) {
    if (r.size() != ambient_)
      throw std::invalid_argument("constraint row length mismatch");
    std::vector<Rat> q(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) q[j] = Rat(r[j]);
    rows.push_back(std::move(q));
  }
  canonicalize(std::move(rows));
}

void SubspaceQ::canonicalize(std::vector<std::vector<Rat>> rows) {
  QMat m(rows.size(), ambient_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = rows[i][j];
  rref_q(m);
  constraints_.clear();
  for (std::size_t i = 0; i < m.rows; ++i) {
    // clear denominators, remove content; pivot is positive by RREF
    Int lcm_den = 1;
    for (std::size_t j = 0; j < ambient_; ++j)
      lcm_den = lcm(lcm_den, m(i, j).get_den());
    std::vector<Int> row(ambient_);
    Int content = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
      row[j] = m(i, j).get_num() * (lcm_den / m(i, j).get_den());
      content = gcd(content, row[j]);
    }
    for (auto& x : row) x /= content;
    constraints_.push_back(std::move(row));
  }
}

SubspaceQ SubspaceQ::zero(std::size_t ambient) {
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    std::vector<Int> r(ambient, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return SubspaceQ(ambient, rows);
}

SubspaceQ SubspaceQ::span(std::size_t ambient,
                          const std::vector<std::vector<Rat>>& vectors) {
  QMat m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient)
      throw std::invalid_argument("span vector length mismatch");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  auto ker = kernel_basis_q(m);
  SubspaceQ s(ambient);
  std::vector<std::vector<Rat>> rows(ker.begin(), ker.end());
  s.canonicalize(std::move(rows));
  return s;
}

bool SubspaceQ::contains(const std::vector<Rat>& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("ambient dimension mismatch");
  for (const auto& row : constraints_) {
    Rat dot = 0;
    for (std::size_t j = 0; j < ambient_; ++j) dot += Rat(row[j]) * v[j];
    if (dot != 0) return false;
  }
  return true;
}

bool SubspaceQ::contains(const SubspaceQ& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("ambient dimension mismatch");
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

SubspaceQ SubspaceQ::intersect(const SubspaceQ& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("ambient dimension mismatch");
  std::vector<std::vector<Int>> rows = constraints_;
  rows.insert(rows.end(), other.constraints_.begin(), other.constraints_.end());
  return SubspaceQ(ambient_, rows);
}

SubspaceQ SubspaceQ::direct_sum(const SubspaceQ& other) const {
  std::size_t n = ambient_ + other.ambient_;
  std::vector<std::vector<Int>> rows;
  for (const auto& r : constraints_) {
    std::vector<Int> row(n, 0);
    std::copy(r.begin(), r.end(), row.begin());
    rows.push_back(std::move(row));
  }
  for (const auto& r : other.constraints_) {
    std::vector<Int> row(n, 0);
    std::copy(r.begin(), r.end(), row.begin() + ambient_);
    rows.push_back(std::move(row));
  }
  return SubspaceQ(n, rows);
}

std::vector<std::vector<Rat>> SubspaceQ::basis() const {
  ZMat m(constraints_.size(), ambient_);
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = constraints_[i][j];
  return kernel_basis_q(m);
}

void SubspaceArrangement::add(const SubspaceQ& s) {
  if (s.ambient() != ambient_)
    throw std::invalid_argument("arrangement ambient dimension mismatch");
  for (const auto& p : parts_)
    if (p.contains(s)) return;
  std::erase_if(parts_, [&](const SubspaceQ& p) { return s.contains(p); });
  parts_.insert(std::upper_bound(parts_.begin(), parts_.end(), s), s);
}

bool SubspaceArrangement::contains(const std::vector<Rat>& v) const {
  for (const auto& p : parts_)
    if (p.contains(v)) return true;
  return false;
}

bool SubspaceArrangement::is_full_space() const {
  for (const auto& p : parts_)
    if (p.dim() == ambient_) return true;
  return false;
}

SubspaceArrangement SubspaceArrangement::intersect(
    const SubspaceArrangement& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("arrangement ambient dimension mismatch");
  SubspaceArrangement out(ambient_);
  for (const auto& a : parts_)
    for (const auto& b : other.parts_) out.add(a.intersect(b));
  return out;
}

SubspaceArrangement SubspaceArrangement::product(
    const SubspaceArrangement& other) const {
  SubspaceArrangement out(ambient_ + other.ambient_);
  for (const auto& a : parts_)
    for (const auto& b : other.parts_) out.add(a.direct_sum(b));
  return out;
}

bool rowspace_meets_coordinate_subspace(const ZMat& n,
                                        const std::vector<std::size_t>& w_columns) {
  std::vector<bool> in_w(n.cols, false);
  for (auto c : w_columns) {
    if (c >= n.cols) throw std::invalid_argument("column index outside vertex set");
    in_w[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n.cols; ++c)
    if (!in_w[c]) keep.push_back(c);
  ZMat pruned(n.rows, keep.size());
  for (std::size_t i = 0; i < n.rows; ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) pruned(i, j) = n(i, keep[j]);
  return rank_over_field(pruned, Coeff::Q()) < rank_over_field(n, Coeff::Q());
}

}  // namespace jumploci
