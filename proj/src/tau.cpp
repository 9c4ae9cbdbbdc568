#include "jumploci/tau.hpp"

#include <algorithm>

namespace jumploci {

namespace {

// Restricted-growth enumeration of set partitions with all block sums zero.
// Prune: an element changes exactly one block sum, so once more blocks have
// a nonzero sum than elements remain, the branch is dead.
struct PartitionEnum {
  const std::vector<LaurentPolynomial::Expo>& support;
  const std::vector<Rat>& coeffs;
  std::size_t n;
  std::size_t nvars;
  SubspaceArrangement& out;

  std::vector<std::size_t> block_of;
  std::vector<Rat> block_sum;
  std::vector<std::size_t> block_first;  // first element of each block

  void emit() {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t b = block_of[i];
      std::size_t rep = block_first[b];
      if (rep == i) continue;
      std::vector<Int> row(nvars);
      for (std::size_t j = 0; j < nvars; ++j)
        row[j] = Int(support[i][j] - support[rep][j]);
      rows.push_back(std::move(row));
    }
    out.add(SubspaceQ(nvars, rows));
  }

  void rec(std::size_t i, std::size_t nblocks, std::size_t open) {
    // open = number of blocks with nonzero sum
    if (open > n - i) return;
    if (i == n) {
      if (open == 0) emit();
      return;
    }
    for (std::size_t b = 0; b <= nblocks; ++b) {
      bool was_zero;
      if (b == nblocks) {
        block_sum.push_back(coeffs[i]);
        block_first.push_back(i);
        was_zero = true;
      } else {
        was_zero = (block_sum[b] == 0);
        block_sum[b] += coeffs[i];
      }
      bool is_zero = (block_sum[b] == 0);
      std::size_t next_open = open + (was_zero ? 1 : 0) - (is_zero ? 1 : 0);
      block_of[i] = b;
      rec(i + 1, b == nblocks ? nblocks + 1 : nblocks, next_open);
      if (b == nblocks) {
        block_sum.pop_back();
        block_first.pop_back();
      } else {
        block_sum[b] -= coeffs[i];
      }
    }
  }
};

}  // namespace

SubspaceArrangement tau1_hypersurface(const LaurentPolynomial& f,
                                      std::size_t support_cap) {
  if (f.is_zero()) throw std::invalid_argument("tau1 of the zero polynomial");
  std::size_t n = f.nvars();
  SubspaceArrangement arr(n);
  if (f.evaluate_q(std::vector<Rat>(n, Rat(1))) != 0) return arr;  // 1 not in V(f)
  if (f.support_size() > support_cap)
    throw std::invalid_argument(
        "tau1 support cap exceeded: support size " +
        std::to_string(f.support_size()) + " > cap " + std::to_string(support_cap));

  std::vector<LaurentPolynomial::Expo> support;
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : f.terms()) {
    support.push_back(e);
    coeffs.push_back(c);
  }
  PartitionEnum pe{support, coeffs, support.size(), n, arr, {}, {}, {}};
  pe.block_of.resize(support.size());
  pe.rec(0, 0, 0);
  return arr;
}

SubspaceArrangement tau1_system(const std::vector<LaurentPolynomial>& fs,
                                std::size_t support_cap) {
  if (fs.empty()) throw std::invalid_argument("tau1_system needs a nonempty list");
  std::size_t n = fs.front().nvars();
  for (const auto& f : fs)
    if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
  SubspaceArrangement acc = tau1_hypersurface(fs.front(), support_cap);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (acc.empty()) break;
    acc = acc.intersect(tau1_hypersurface(fs[i], support_cap));
  }
  return acc;
}

bool curve_in_variety(const std::vector<LaurentPolynomial>& fs,
                      const std::vector<long>& z) {
  for (const auto& f : fs)
    if (!f.restrict_to_curve(z).is_zero()) return false;
  return true;
}

LaurentPolynomial tc1_hypersurface(const LaurentPolynomial& f) {
  return f.shifted_initial_form();
}

}  // namespace jumploci
