#include <random>

#include "doctest.h"
#include "jumploci/toric.hpp"

using namespace jumploci;

namespace {

SimplicialComplex two_points() {
  return SimplicialComplex({"a", "b"}, {{"a"}, {"b"}});
}
SimplicialComplex edge() {
  return SimplicialComplex({"a", "b"}, {{"a", "b"}});
}
SimplicialComplex path3() {
  return SimplicialComplex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

}  // namespace

TEST_CASE("aomoto-betti numbers") {
  CHECK(aomoto_betti(two_points(), 0b11, 1, Coeff::Q()) == 1);
  CHECK(aomoto_betti(edge(), 0b11, 1, Coeff::Q()) == 0);

  // W empty: ordinary Betti numbers, i.e. the (i-1)-simplex counts
  SimplicialComplex p = path3();
  auto cards = p.by_cardinality();
  for (int i = 0; i <= 2; ++i)
    CHECK(aomoto_betti(p, 0, i, Coeff::Q()) == cards[static_cast<std::size_t>(i)].size());

  CHECK_THROWS_AS(aomoto_betti(p, 0b11, 1, Coeff::Z()), std::invalid_argument);
  CHECK_THROWS_AS(aomoto_betti(p, 0b11111, 1, Coeff::Q()), std::invalid_argument);
}

TEST_CASE("aomoto oracle") {
  SimplicialComplex p = path3();
  auto cards = p.by_cardinality();
  for (int i = 0; i <= 2; ++i)
    CHECK(aomoto_oracle_q(p, {Rat(0), Rat(0), Rat(0)}, i) ==
          cards[static_cast<std::size_t>(i)].size());

  CHECK(aomoto_oracle_q(two_points(), {Rat(1), Rat(1)}, 1) == 1);

  // support-only dependence
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> cdist(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> z = {Rat(cdist(rng)), Rat(cdist(rng)), Rat(cdist(rng))};
    VMask w = 0;
    std::vector<Rat> zw(3, Rat(0));
    for (std::size_t v = 0; v < 3; ++v)
      if (z[v] != 0) { w |= VMask{1} << v; zw[v] = 1; }
    for (int i = 0; i <= 2; ++i) {
      CHECK(aomoto_oracle_q(p, z, i) == aomoto_oracle_q(p, zw, i));
      CHECK(aomoto_oracle_q(p, z, i) == aomoto_betti(p, w, i, Coeff::Q()));
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint64_t> z = {rng() % 5, rng() % 5, rng() % 5};
    std::vector<std::uint64_t> zw(3, 0);
    for (std::size_t v = 0; v < 3; ++v) zw[v] = z[v] ? 1 : 0;
    for (int i = 0; i <= 2; ++i)
      CHECK(aomoto_oracle_fp(p, z, i, 5) == aomoto_oracle_fp(p, zw, i, 5));
  }
}

TEST_CASE("twisted chain oracle") {
  SimplicialComplex p = path3();
  auto cards = p.by_cardinality();
  for (int i = 0; i <= 2; ++i)
    CHECK(twisted_betti_oracle_q(p, {Rat(1), Rat(1), Rat(1)}, i) ==
          cards[static_cast<std::size_t>(i)].size());

  CHECK(twisted_betti_oracle_q(two_points(), {Rat(2), Rat(3)}, 1) == 1);
  CHECK(twisted_betti_oracle_q(two_points(), {Rat(2), Rat(1)}, 1) == 1);
  CHECK(twisted_betti_oracle_q(edge(), {Rat(2), Rat(3)}, 1) == 0);
  CHECK(twisted_betti_oracle_q(edge(), {Rat(2), Rat(1)}, 1) == 0);
}

TEST_CASE("resonance and characteristic arrangements") {
  CoordinateArrangement r = resonance_arrangement(path3(), 1, 1, Coeff::Q());
  CHECK(r.tag == CoordinateArrangement::Tag::Subspace);
  REQUIRE(r.members.size() == 1);
  CHECK(r.members[0] == 0b101);

  CoordinateArrangement re = resonance_arrangement(edge(), 1, 1, Coeff::Q());
  REQUIRE(re.members.size() == 1);
  CHECK(re.members[0] == 0);  // only the origin

  CoordinateArrangement rf = resonance_arrangement(two_points(), 1, 1, Coeff::Q());
  REQUIRE(rf.members.size() == 1);
  CHECK(rf.members[0] == 0b11);  // the whole plane

  CoordinateArrangement v0 = charvar_arrangement(path3(), 0, 1, Coeff::Q());
  CHECK(v0.tag == CoordinateArrangement::Tag::Subtorus);
  REQUIRE(v0.members.size() == 1);
  CHECK(v0.members[0] == 0);  // V^0_1 = {1}

  CHECK(charvar_arrangement(path3(), 1, 1, Coeff::Q()).members ==
        resonance_arrangement(path3(), 1, 1, Coeff::Q()).members);
}

TEST_CASE("characteristic arrangement matches the twisted oracle over F_5") {
  // every rho in (F_5^x)^V, depths 1 and 2
  std::vector<SimplicialComplex> corpus = {two_points(), edge(), path3()};
  for (const auto& l : corpus) {
    std::size_t n = l.vertex_count();
    for (int i = 0; i <= 2; ++i)
      for (std::size_t d = 1; d <= 2; ++d) {
        CoordinateArrangement v = charvar_arrangement(l, i, d, Coeff::Fp(5));
        std::vector<std::uint64_t> rho(n, 1);
        std::function<void(std::size_t)> sweep = [&](std::size_t pos) {
          if (pos == n) {
            VMask supp = 0;
            for (std::size_t u = 0; u < n; ++u)
              if (rho[u] != 1) supp |= VMask{1} << u;
            bool in_arr = v.contains_support(supp);
            bool jumps = twisted_betti_oracle_fp(l, rho, i, 5) >= d;
            CHECK(in_arr == jumps);
            return;
          }
          for (std::uint64_t x = 1; x <= 4; ++x) {
            rho[pos] = x;
            sweep(pos + 1);
          }
        };
        sweep(0);
      }
  }
}

TEST_CASE("join and wedge behavior of aomoto-betti numbers") {
  SimplicialComplex l1 = two_points();
  SimplicialComplex l2(std::vector<std::string>{"c", "d"}, {{"c", "d"}});
  SimplicialComplex join = l1.join(l2);

  // Kunneth for the join: beta_i(W) = sum over s+t=i of the factor values
  for (VMask w = 0; w < 16; ++w) {
    VMask w1 = w & 0b11, w2 = (w >> 2) & 0b11;
    for (int i = 0; i <= 3; ++i) {
      std::size_t expected = 0;
      for (int s = 0; s <= i; ++s)
        expected += aomoto_betti(l1, w1, s, Coeff::Q()) *
                    aomoto_betti(l2, w2, i - s, Coeff::Q());
      CHECK(aomoto_betti(join, w, i, Coeff::Q()) == expected);
    }
  }

  // wedge: factor sum, plus one extra class in degree 1 when both
  // coordinates are nonzero
  SimplicialComplex wedge = l1.disjoint_union(l2);
  for (VMask w = 0; w < 16; ++w) {
    VMask w1 = w & 0b11, w2 = (w >> 2) & 0b11;
    for (int i = 1; i <= 2; ++i) {
      std::size_t expected = aomoto_betti(l1, w1, i, Coeff::Q()) +
                             aomoto_betti(l2, w2, i, Coeff::Q());
      if (i == 1 && w1 != 0 && w2 != 0) ++expected;
      CHECK(aomoto_betti(wedge, w, i, Coeff::Q()) == expected);
    }
  }
}
