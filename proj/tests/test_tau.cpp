#include <random>

#include "doctest.h"
#include "jumploci/tau.hpp"

using namespace jumploci;

namespace {

LaurentPolynomial parse2(const std::string& s) { return parse_polynomial(s, 2); }

SubspaceQ hyperplane(std::size_t ambient, std::size_t j) {
  std::vector<Int> row(ambient, 0);
  row[j] = 1;
  return SubspaceQ(ambient, {row});
}

// Compose the tangent-cone form with a parametrization of the subspace; the
// result is a polynomial in the basis parameters.
LaurentPolynomial restrict_form(const LaurentPolynomial& form, const SubspaceQ& s) {
  auto basis = s.basis();
  std::size_t nparams = basis.size();
  LaurentPolynomial out(nparams);
  for (const auto& [expo, c] : form.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(nparams, c);
    for (std::size_t i = 0; i < expo.size(); ++i) {
      LaurentPolynomial linear(nparams);
      for (std::size_t b = 0; b < nparams; ++b) {
        LaurentPolynomial::Expo e(nparams, 0);
        e[b] = 1;
        linear.add_term(e, basis[b][i]);
      }
      for (long k = 0; k < expo[i]; ++k) term = term * linear;
    }
    out = out + term;
  }
  return out;
}

}  // namespace

TEST_CASE("tau1 of a hypersurface") {
  SubspaceArrangement a = tau1_hypersurface(parse2("t1 + t2 - 2"));
  REQUIRE(a.parts().size() == 1);
  CHECK(a.parts()[0] == SubspaceQ::zero(2));

  SubspaceArrangement b = tau1_hypersurface(parse_polynomial("t1 - 1", 1));
  REQUIRE(b.parts().size() == 1);
  CHECK(b.parts()[0] == hyperplane(1, 0));

  SubspaceArrangement c = tau1_hypersurface(parse2("t1*t2 - t1 - t2 + 1"));
  REQUIRE(c.parts().size() == 2);
  CHECK(c.contains({Rat(0), Rat(7)}));
  CHECK(c.contains({Rat(-2), Rat(0)}));
  CHECK_FALSE(c.contains({Rat(1), Rat(1)}));

  // 1 not on the hypersurface: tau_1 is empty, not {0}
  CHECK(tau1_hypersurface(parse2("t1 + 1")).empty());

  LaurentPolynomial wide(1);
  for (long e = 0; e < 15; ++e) wide.add_term({e}, Rat(e == 0 ? -14 : 1));
  CHECK_THROWS_AS(tau1_hypersurface(wide), std::invalid_argument);
}

TEST_CASE("tau1 of systems") {
  SubspaceArrangement a = tau1_system({parse2("t1 - 1"), parse2("t2 - 1")});
  REQUIRE(a.parts().size() == 1);
  CHECK(a.parts()[0] == SubspaceQ::zero(2));

  LaurentPolynomial f = parse2("t1*t2 - t1 - t2 + 1");
  CHECK(tau1_system({f, f}) == tau1_hypersurface(f));

  SubspaceArrangement c = tau1_system({parse2("t1 + t2 - 2"), parse2("t1 - 1")});
  REQUIRE(c.parts().size() == 1);
  CHECK(c.parts()[0] == SubspaceQ::zero(2));
}

TEST_CASE("curve membership") {
  CHECK_FALSE(curve_in_variety({parse2("t1 + t2 - 2")}, {1, 1}));
  CHECK(curve_in_variety({parse2("t1*t2 - t1 - t2 + 1")}, {1, 0}));
  CHECK(curve_in_variety({parse2("t1 + t2 - 2"), parse2("t1 - 1")}, {0, 0}));
}

TEST_CASE("tangent cone forms") {
  CHECK(tc1_hypersurface(parse2("t1 + t2 - 2")) == parse2("t1 + t2"));
  LaurentPolynomial sq = parse_polynomial("t1^2 - 2*t1 + 1", 1);
  CHECK(tc1_hypersurface(sq) == parse_polynomial("t1^2", 1));
  CHECK(tc1_hypersurface(parse2("t1*t2 - t1 - t2 + 1")) == parse2("t1*t2"));
  CHECK_THROWS_AS(tc1_hypersurface(parse2("t1 + 1")), std::invalid_argument);
}

TEST_CASE("tau1 agrees with the curve oracle") {
  std::vector<LaurentPolynomial> corpus = {
      parse2("t1 + t2 - 2"),
      parse2("t1*t2 - t1 - t2 + 1"),
      parse2("t1^2 - 1"),
      parse2("t1^2*t2 - t1^2 - t2 + 1"),
      parse2("t1*t2^-1 - 2 + t1^-1*t2"),
      parse2("t1 + t2 + t1*t2 - 3"),
  };
  for (const auto& f : corpus) {
    SubspaceArrangement a = tau1_hypersurface(f);
    for (long z1 = -3; z1 <= 3; ++z1)
      for (long z2 = -3; z2 <= 3; ++z2) {
        bool in_arr = a.contains({Rat(z1), Rat(z2)});
        CHECK(in_arr == curve_in_variety({f}, {z1, z2}));
      }
  }
  // and for a system
  SubspaceArrangement s = tau1_system({corpus[1], corpus[2]});
  for (long z1 = -3; z1 <= 3; ++z1)
    for (long z2 = -3; z2 <= 3; ++z2)
      CHECK(s.contains({Rat(z1), Rat(z2)}) ==
            curve_in_variety({corpus[1], corpus[2]}, {z1, z2}));
}

TEST_CASE("tau1 sits inside the tangent cone") {
  std::vector<LaurentPolynomial> corpus = {
      parse2("t1 + t2 - 2"),
      parse2("t1*t2 - t1 - t2 + 1"),
      parse2("t1^2 - 1"),
      parse2("t1^2*t2 - t1^2 - t2 + 1"),
  };
  for (const auto& f : corpus) {
    LaurentPolynomial form = tc1_hypersurface(f);
    SubspaceArrangement tau = tau1_hypersurface(f);
    for (const SubspaceQ& s : tau.parts())
      CHECK(restrict_form(form, s).is_zero());
  }
}

TEST_CASE("tau1 ignores monomial units") {
  LaurentPolynomial f = parse2("t1*t2 - t1 - t2 + 1");
  LaurentPolynomial unit = LaurentPolynomial::monomial({3, -1}, Rat(1));
  CHECK(tau1_hypersurface(unit * f) == tau1_hypersurface(f));
}
