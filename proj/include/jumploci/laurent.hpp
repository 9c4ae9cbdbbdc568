#pragma once

#include <map>
#include <string>
#include <vector>

#include "jumploci/arith.hpp"

namespace jumploci {

// Multivariate Laurent polynomial over Q: finitely supported map from
// integer exponent vectors to nonzero rational coefficients. The map
// ordering (lexicographic on exponents) is the canonical form.
class LaurentPolynomial {
 public:
  using Expo = std::vector<long>;

  explicit LaurentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static LaurentPolynomial constant(std::size_t nvars, const Rat& c);
  static LaurentPolynomial variable(std::size_t nvars, std::size_t j, long power = 1);
  static LaurentPolynomial monomial(const Expo& e, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }

  void add_term(const Expo& e, const Rat& c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  bool operator==(const LaurentPolynomial&) const = default;

  // True iff this = c * t^e * other for a nonzero rational c and monomial t^e.
  bool equal_up_to_monomial_unit(const LaurentPolynomial& o) const;

  Rat evaluate_q(const std::vector<Rat>& point) const;
  std::uint64_t evaluate_fp(const std::vector<std::uint64_t>& point,
                            std::uint64_t p) const;

  // g(u) = f(u^{z_1}, ..., u^{z_n}); identically zero iff the one-parameter
  // subgroup in direction z lies in V(f).
  LaurentPolynomial restrict_to_curve(const std::vector<long>& z) const;

  // Requires f(1,...,1) = 0. Clears negative exponents by a monomial unit,
  // substitutes t_j = 1 + z_j, and returns the lowest nonzero homogeneous
  // part: the defining form of the tangent cone TC_1(V(f)).
  LaurentPolynomial shifted_initial_form() const;

  std::string to_string(const std::string& varname = "t") const;

 private:
  std::size_t nvars_ = 0;
  std::map<Expo, Rat> terms_;
};

using UniLaurent = LaurentPolynomial;  // nvars == 1

// Monic-normalized gcd, up to monomial unit (Euclid on one variable).
UniLaurent gcd_univariate(const UniLaurent& g, const UniLaurent& h);

LaurentPolynomial parse_polynomial(const std::string& text, std::size_t nvars = 0,
                                   const std::string& varname = "t");

}  // namespace jumploci
