#pragma once

#include <cstddef>
#include <vector>

#include "jumploci/arith.hpp"

namespace jumploci {

template <class T>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const Mat&) const = default;
};

using QMat = Mat<Rat>;
using ZMat = Mat<Int>;
using FpMat = Mat<std::uint64_t>;

QMat to_q(const ZMat& m);
FpMat to_fp(const ZMat& m, std::uint64_t p);
FpMat to_fp(const QMat& m, std::uint64_t p);

std::size_t rank_q(QMat m);
std::size_t rank_fp(FpMat m, std::uint64_t p);

// Rank of an integer matrix over the coefficient field (Q or F_p).
std::size_t rank_over_field(const ZMat& m, const Coeff& k);
std::size_t rank_over_field(const QMat& m, const Coeff& k);

// Basis of the right kernel {x : M x = 0} over Q, one vector per row.
std::vector<std::vector<Rat>> kernel_basis_q(QMat m);
std::vector<std::vector<Rat>> kernel_basis_q(const ZMat& m);

// Reduced row echelon form over Q; returns the rank and drops zero rows.
std::size_t rref_q(QMat& m);

struct SmithForm {
  std::vector<Int> diagonal;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;
  bool has_transforms = false;
  ZMat left, right;  // U * M * V = diag when retained
};

SmithForm smith_normal_form(const ZMat& m, bool with_transforms = false);

}  // namespace jumploci
