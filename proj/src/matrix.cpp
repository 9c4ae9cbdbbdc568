#include "jumploci/matrix.hpp"

#include <algorithm>
#include <utility>

namespace jumploci {

QMat to_q(const ZMat& m) {
  QMat q(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

FpMat to_fp(const ZMat& m, std::uint64_t p) {
  FpMat f(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) f.a[i] = fp_from_int(m.a[i], p);
  return f;
}

FpMat to_fp(const QMat& m, std::uint64_t p) {
  FpMat f(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) f.a[i] = fp_from_rat(m.a[i], p);
  return f;
}

std::size_t rref_q(QMat& m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  m.a.resize(r * m.cols);
  m.rows = r;
  return r;
}

std::size_t rank_q(QMat m) { return rref_q(m); }

std::size_t rank_fp(FpMat m, std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) % p == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
    std::uint64_t inv = fp_inv(m(r, c), p);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = fp_mul(m(r, j) % p, inv, p);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      std::uint64_t f = m(i, c) % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j)
        m(i, j) = fp_sub(m(i, j) % p, fp_mul(f, m(r, j), p), p);
    }
    ++r;
  }
  return r;
}

std::size_t rank_over_field(const ZMat& m, const Coeff& k) {
  if (k.kind == Coeff::Kind::Q) return rank_q(to_q(m));
  if (k.kind == Coeff::Kind::Fp) return rank_fp(to_fp(m, k.p), k.p);
  throw std::invalid_argument("rank_over_field needs a field coefficient");
}

std::size_t rank_over_field(const QMat& m, const Coeff& k) {
  if (k.kind == Coeff::Kind::Q) return rank_q(m);
  if (k.kind == Coeff::Kind::Fp) return rank_fp(to_fp(m, k.p), k.p);
  throw std::invalid_argument("rank_over_field needs a field coefficient");
}

std::vector<std::vector<Rat>> kernel_basis_q(QMat m) {
  std::size_t n = m.cols;
  rref_q(m);
  std::vector<long> pivot_of_col(n, -1);
  std::size_t c = 0;
  for (std::size_t r = 0; r < m.rows; ++r) {
    while (c < n && m(r, c) == 0) ++c;
    if (c == n) break;
    pivot_of_col[c] = static_cast<long>(r);
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    std::vector<Rat> v(n, Rat(0));
    v[j] = 1;
    for (std::size_t col = 0; col < n; ++col)
      if (pivot_of_col[col] >= 0)
        v[col] = -m(static_cast<std::size_t>(pivot_of_col[col]), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rat>> kernel_basis_q(const ZMat& m) {
  return kernel_basis_q(to_q(m));
}

namespace {

void swap_rows(ZMat& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}
void swap_cols(ZMat& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}
// row_i -= f * row_j
void row_axpy(ZMat& m, std::size_t i, std::size_t j, const Int& f) {
  for (std::size_t c = 0; c < m.cols; ++c) m(i, c) -= f * m(j, c);
}
void col_axpy(ZMat& m, std::size_t i, std::size_t j, const Int& f) {
  for (std::size_t r = 0; r < m.rows; ++r) m(r, i) -= f * m(r, j);
}
void negate_row(ZMat& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols; ++c) m(i, c) = -m(i, c);
}

ZMat identity(std::size_t n) {
  ZMat id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

}  // namespace

SmithForm smith_normal_form(const ZMat& input, bool with_transforms) {
  ZMat m = input;
  ZMat u, v;
  if (with_transforms) {
    u = identity(m.rows);
    v = identity(m.cols);
  }
  std::size_t n = std::min(m.rows, m.cols);

  for (std::size_t k = 0; k < n; ++k) {
    // smallest-absolute-value pivot in the trailing submatrix
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < m.rows; ++i)
      for (std::size_t j = k; j < m.cols; ++j) {
        if (m(i, j) == 0) continue;
        if (!found || cmp(abs(m(i, j)), abs(m(pi, pj))) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) { n = k; break; }
    if (pi != k) { swap_rows(m, k, pi); if (with_transforms) swap_rows(u, k, pi); }
    if (pj != k) { swap_cols(m, k, pj); if (with_transforms) swap_cols(v, k, pj); }

    for (;;) {
      bool dirty = false;
      for (std::size_t i = k + 1; i < m.rows; ++i) {
        if (m(i, k) == 0) continue;
        Int f = m(i, k) / m(k, k);
        // round toward smaller remainder
        if (abs(m(i, k) - f * m(k, k)) * 2 > abs(m(k, k)))
          f += (sgn(m(i, k)) == sgn(m(k, k))) ? 1 : -1;
        if (f != 0) { row_axpy(m, i, k, f); if (with_transforms) row_axpy(u, i, k, f); }
        if (m(i, k) != 0) {
          // remainder became the smaller pivot
          swap_rows(m, k, i);
          if (with_transforms) swap_rows(u, k, i);
          dirty = true;
        }
      }
      for (std::size_t j = k + 1; j < m.cols; ++j) {
        if (m(k, j) == 0) continue;
        Int f = m(k, j) / m(k, k);
        if (abs(m(k, j) - f * m(k, k)) * 2 > abs(m(k, k)))
          f += (sgn(m(k, j)) == sgn(m(k, k))) ? 1 : -1;
        if (f != 0) { col_axpy(m, j, k, f); if (with_transforms) col_axpy(v, j, k, f); }
        if (m(k, j) != 0) {
          swap_cols(m, k, j);
          if (with_transforms) swap_cols(v, k, j);
          dirty = true;
        }
      }
      if (!dirty) {
        bool zeroed = true;
        for (std::size_t i = k + 1; i < m.rows && zeroed; ++i)
          if (m(i, k) != 0) zeroed = false;
        for (std::size_t j = k + 1; j < m.cols && zeroed; ++j)
          if (m(k, j) != 0) zeroed = false;
        if (zeroed) break;
      }
    }

    if (m(k, k) < 0) { negate_row(m, k); if (with_transforms) negate_row(u, k); }

    // enforce pivot | trailing entries
    for (std::size_t i = k + 1; i < m.rows; ++i)
      for (std::size_t j = k + 1; j < m.cols; ++j) {
        if (m(i, j) % m(k, k) == 0) continue;
        // mix row i into row k, then redo this pivot
        row_axpy(m, k, i, Int(-1));
        if (with_transforms) row_axpy(u, k, i, Int(-1));
        --k;
        i = m.rows;
        break;
      }
  }

  SmithForm s;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) break;
    s.diagonal.push_back(m(k, k));
  }
  s.rank = s.diagonal.size();
  s.has_transforms = with_transforms;
  if (with_transforms) {
    s.left = std::move(u);
    s.right = std::move(v);
  }
  return s;
}

}  // namespace jumploci
