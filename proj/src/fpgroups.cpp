#include "jumploci/fpgroups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace jumploci {

Word free_reduce(Word w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("zero letter in word");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

GroupPresentation::GroupPresentation(std::size_t n, std::vector<Word> rels)
    : ngens(n), relators(std::move(rels)) {
  for (auto& r : relators) {
    r = free_reduce(std::move(r));
    for (int letter : r)
      if (static_cast<std::size_t>(std::abs(letter)) > ngens)
        throw std::invalid_argument("relator uses an unknown generator");
  }
}

ZMat GroupPresentation::exponent_matrix() const {
  ZMat e(relators.size(), ngens);
  for (std::size_t i = 0; i < relators.size(); ++i)
    for (int letter : relators[i]) {
      std::size_t j = static_cast<std::size_t>(std::abs(letter)) - 1;
      e(i, j) += (letter > 0 ? 1 : -1);
    }
  return e;
}

void FreeGroupRingElement::add(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

FreeGroupRingElement FreeGroupRingElement::operator+(
    const FreeGroupRingElement& o) const {
  FreeGroupRingElement out = *this;
  for (const auto& [w, c] : o.terms) out.add(w, c);
  return out;
}

FreeGroupRingElement fox_derivative(const Word& r, std::size_t j) {
  FreeGroupRingElement out;
  Word prefix;
  for (int letter : free_reduce(r)) {
    std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (g == j) {
      if (letter > 0) {
        out.add(prefix, 1);
      } else {
        Word w = prefix;
        w.push_back(letter);
        out.add(free_reduce(std::move(w)), -1);
      }
    }
    prefix.push_back(letter);
    prefix = free_reduce(std::move(prefix));
  }
  return out;
}

AbelianizationData abelianization(const GroupPresentation& p) {
  AbelianizationData ab;
  ab.ngens = p.ngens;
  ZMat e = p.exponent_matrix();
  SmithForm s = smith_normal_form(e, true);
  for (const auto& d : s.diagonal)
    if (d > 1) ab.torsion.push_back(d);
  ab.free_rank = p.ngens - s.rank;
  ab.abf = ZMat(p.ngens, ab.free_rank);
  // U E V = D, so row space of E lands in the first rank coordinates of the
  // V-basis; the trailing columns of V give the free quotient projection.
  for (std::size_t j = 0; j < p.ngens; ++j)
    for (std::size_t k = 0; k < ab.free_rank; ++k)
      ab.abf(j, k) = s.right(j, s.rank + k);
  return ab;
}

std::vector<Int> AbelianizationData::abf_of_word(const Word& w) const {
  std::vector<Int> v(free_rank, 0);
  for (int letter : w) {
    std::size_t j = static_cast<std::size_t>(std::abs(letter)) - 1;
    for (std::size_t k = 0; k < free_rank; ++k)
      v[k] += (letter > 0 ? abf(j, k) : -abf(j, k));
  }
  return v;
}

LaurentPolynomial abelianize(const FreeGroupRingElement& e,
                             const AbelianizationData& ab) {
  LaurentPolynomial f(ab.free_rank);
  for (const auto& [w, c] : e.terms) {
    auto v = ab.abf_of_word(w);
    LaurentPolynomial::Expo expo(ab.free_rank);
    for (std::size_t k = 0; k < ab.free_rank; ++k) {
      if (!v[k].fits_slong_p())
        throw std::overflow_error("abelianized exponent out of range");
      expo[k] = v[k].get_si();
    }
    f.add_term(expo, Rat(c));
  }
  return f;
}

AlexanderMatrix alexander_matrix(const GroupPresentation& p) {
  AbelianizationData ab = abelianization(p);
  AlexanderMatrix a;
  a.rows = p.relators.size();
  a.cols = p.ngens;
  a.nvars = ab.free_rank;
  a.entries.reserve(a.rows * a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      a.entries.push_back(abelianize(fox_derivative(p.relators[i], j), ab));
  return a;
}

namespace {

bool is_all_one_q(const std::vector<Rat>& rho) {
  return std::all_of(rho.begin(), rho.end(), [](const Rat& x) { return x == 1; });
}

LaurentPolynomial laurent_det(const AlexanderMatrix& a,
                              const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
  std::size_t k = rows.size();
  if (k == 0) return LaurentPolynomial::constant(a.nvars, 1);
  if (k == 1) return a.at(rows[0], cols[0]);
  LaurentPolynomial det(a.nvars);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    LaurentPolynomial minor = laurent_det(a, sub_rows, sub_cols);
    LaurentPolynomial term = a.at(rows[0], cols[c]) * minor;
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool charvar1_member_q(const GroupPresentation& p, const std::vector<Rat>& rho,
                       std::size_t d) {
  AbelianizationData ab = abelianization(p);
  if (rho.size() != ab.free_rank)
    throw std::invalid_argument("rho must live on the G_abf coordinates");
  if (is_all_one_q(rho))
    return p.ngens - rank_over_field(p.exponent_matrix(), Coeff::Q()) >= d;
  AlexanderMatrix a = alexander_matrix(p);
  QMat m(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a.at(i, j).evaluate_q(rho);
  std::size_t h1 = p.ngens - 1 - rank_q(m);
  return h1 >= d;
}

bool charvar1_member_fp(const GroupPresentation& p,
                        const std::vector<std::uint64_t>& rho, std::size_t d,
                        std::uint64_t p_mod) {
  AbelianizationData ab = abelianization(p);
  if (rho.size() != ab.free_rank)
    throw std::invalid_argument("rho must live on the G_abf coordinates");
  bool all_one = std::all_of(rho.begin(), rho.end(),
                             [&](std::uint64_t x) { return x % p_mod == 1 % p_mod; });
  if (all_one)
    return p.ngens - rank_over_field(p.exponent_matrix(), Coeff::Fp(p_mod)) >= d;
  AlexanderMatrix a = alexander_matrix(p);
  FpMat m(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      m(i, j) = a.at(i, j).evaluate_fp(rho, p_mod);
  std::size_t h1 = p.ngens - 1 - rank_fp(m, p_mod);
  return h1 >= d;
}

std::vector<LaurentPolynomial> alexander_codim1_minors(const GroupPresentation& p) {
  AlexanderMatrix a = alexander_matrix(p);
  std::size_t k = p.ngens == 0 ? 0 : p.ngens - 1;
  if (k == 0) return {LaurentPolynomial::constant(a.nvars, 1)};
  if (a.rows < k) return {};  // zero ideal
  std::vector<LaurentPolynomial> minors;
  combinations(a.rows, k, [&](const std::vector<std::size_t>& rows) {
    combinations(a.cols, k, [&](const std::vector<std::size_t>& cols) {
      LaurentPolynomial det = laurent_det(a, rows, cols);
      if (det.is_zero()) return;
      for (const auto& m : minors)
        if (m.equal_up_to_monomial_unit(det)) return;
      minors.push_back(std::move(det));
    });
  });
  return minors;
}

Sigma1Bound sigma1_upper_bound(const GroupPresentation& p, std::size_t support_cap) {
  AbelianizationData ab = abelianization(p);
  std::size_t r = ab.free_rank;
  Sigma1Bound out;
  out.arrangement = SubspaceArrangement(r);
  if (p.ngens > p.relators.size() && p.ngens - p.relators.size() > 1) {
    // deficiency shortcut: every character lies in V^1_1, Sigma^1 is empty
    out.full_space = true;
    out.arrangement.add(SubspaceQ(r));
    return out;
  }
  auto minors = alexander_codim1_minors(p);
  if (minors.empty()) {
    out.full_space = true;
    out.arrangement.add(SubspaceQ(r));
    return out;
  }
  out.arrangement = tau1_system(minors, support_cap);
  out.arrangement.add(SubspaceQ::zero(r));  // tau_1 of V^0_1 = {1}
  out.full_space = out.arrangement.is_full_space();
  return out;
}

bool cyclic_cover_finite(const GroupPresentation& p, const std::vector<long>& z) {
  if (std::all_of(z.begin(), z.end(), [](long x) { return x == 0; }))
    throw std::invalid_argument("direction must be nonzero");
  auto minors = alexander_codim1_minors(p);
  if (minors.empty()) return false;  // V^1_1 is the whole torus
  for (const auto& m : minors)
    if (!m.restrict_to_curve(z).is_zero()) return true;
  return false;
}

}  // namespace jumploci
