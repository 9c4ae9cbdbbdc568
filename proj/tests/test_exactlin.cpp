#include <random>

#include "doctest.h"
#include "jumploci/exactlin.hpp"

using namespace jumploci;

namespace {

ZMat zmat(std::size_t r, std::size_t c, std::vector<long> vals) {
  ZMat m(r, c);
  for (std::size_t i = 0; i < vals.size(); ++i) m.a[i] = vals[i];
  return m;
}

// independent oracle: hand row/column reduction is encoded as the known
// invariant-factor values below; rank cross-checked over Q
void check_divisibility(const SmithForm& s) {
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
    CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
}

}  // namespace

TEST_CASE("smith normal form basics") {
  auto id3 = zmat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  auto s = smith_normal_form(id3);
  CHECK(s.diagonal == std::vector<Int>{1, 1, 1});
  CHECK(s.rank == 3);

  auto two = zmat(1, 1, {2});
  s = smith_normal_form(two);
  CHECK(s.diagonal == std::vector<Int>{2});
  CHECK(s.rank == 1);

  // [[1,2],[3,4]]: row/column reduction oracle gives (1, 2)
  auto m = zmat(2, 2, {1, 2, 3, 4});
  s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<Int>{1, 2});
}

TEST_CASE("smith normal form transforms and random properties") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> val(-6, 6);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    ZMat m(r, c);
    for (auto& x : m.a) x = val(rng);
    auto s = smith_normal_form(m, true);
    check_divisibility(s);
    CHECK(s.rank == rank_over_field(m, Coeff::Q()));
    // U*M*V = diag
    REQUIRE(s.has_transforms);
    ZMat prod(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Int acc = 0;
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t l = 0; l < c; ++l)
            acc += s.left(i, k) * m(k, l) * s.right(l, j);
        prod(i, j) = acc;
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Int expect = (i == j && i < s.rank) ? s.diagonal[i] : Int(0);
        CHECK(prod(i, j) == expect);
      }
    // rank over F_p equals SNF rank when p divides no diagonal entry
    for (std::uint64_t p : {2, 3, 5, 7}) {
      bool divides = false;
      for (const auto& d : s.diagonal)
        if (d % Int(static_cast<unsigned long>(p)) == 0) divides = true;
      if (!divides) CHECK(rank_over_field(m, Coeff::Fp(p)) == s.rank);
    }
  }
}

TEST_CASE("rank over fields") {
  ZMat zero(3, 4);
  CHECK(rank_over_field(zero, Coeff::Q()) == 0);
  auto m = zmat(2, 2, {2, 0, 0, 0});
  CHECK(rank_over_field(m, Coeff::Fp(2)) == 0);
  CHECK(rank_over_field(m, Coeff::Q()) == 1);
  CHECK_THROWS(Coeff::Fp(6));
}

TEST_CASE("subspace canonical form, membership, intersection") {
  // {z1=0} and {z2=0} in Q^2
  SubspaceQ z1(2, {{Int(1), Int(0)}});
  SubspaceQ z2(2, {{Int(0), Int(1)}});
  auto meet = z1.intersect(z2);
  CHECK(meet == SubspaceQ::zero(2));
  CHECK(z1.intersect(z1) == z1);

  // {z1=z2} cap {z1=0} in Q^3 -> {z1=z2=0}
  SubspaceQ diag(3, {{Int(1), Int(-1), Int(0)}});
  SubspaceQ wall(3, {{Int(1), Int(0), Int(0)}});
  auto got = diag.intersect(wall);
  SubspaceQ expect(3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}});
  CHECK(got == expect);

  CHECK(z1.contains(std::vector<Rat>{0, 0}));
  SubspaceQ antidiag(2, {{Int(1), Int(1)}});
  SubspaceQ diag2(2, {{Int(1), Int(-1)}});
  CHECK(diag2.contains(std::vector<Rat>{1, 1}));
  CHECK(!antidiag.contains(std::vector<Rat>{1, 0}));

  CHECK_THROWS(z1.intersect(wall));
  CHECK_THROWS(z1.contains(std::vector<Rat>{1, 2, 3}));

  // scaling of constraints does not change the canonical form
  SubspaceQ scaled(2, {{Int(3), Int(3)}});
  CHECK(scaled == antidiag);
}

TEST_CASE("subspace intersection properties") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> val(-3, 3);
  auto random_subspace = [&](std::size_t n) {
    std::uniform_int_distribution<std::size_t> nr(0, n);
    std::vector<std::vector<Int>> rows(nr(rng));
    for (auto& r : rows) {
      r.resize(n);
      for (auto& x : r) x = val(rng);
    }
    return SubspaceQ(n, rows);
  };
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_subspace(4), b = random_subspace(4), c = random_subspace(4);
    CHECK(a.intersect(b) == b.intersect(a));
    CHECK(a.intersect(b).intersect(c) == a.intersect(b.intersect(c)));
    CHECK(a.intersect(a) == a);
    std::vector<Rat> v(4);
    for (auto& x : v) x = coord(rng);
    CHECK(a.intersect(b).contains(v) == (a.contains(v) && b.contains(v)));
  }
}

TEST_CASE("span and basis round-trip") {
  auto s = SubspaceQ::span(3, {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
  CHECK(s.dim() == 2);
  for (const auto& v : s.basis()) CHECK(s.contains(v));
  CHECK(s.contains(std::vector<Rat>{2, 2, 5}));
  CHECK(!s.contains(std::vector<Rat>{1, 2, 0}));
}

TEST_CASE("arrangement maximal reduction and product") {
  SubspaceArrangement arr(2);
  arr.add(SubspaceQ::zero(2));
  arr.add(SubspaceQ(2, {{Int(1), Int(0)}}));
  CHECK(arr.parts().size() == 1);  // {0} swallowed by {z1=0}
  arr.add(SubspaceQ(2));           // full space swallows everything
  CHECK(arr.parts().size() == 1);
  CHECK(arr.is_full_space());

  SubspaceArrangement empty2(2);
  CHECK(empty2.product(arr).empty());
}

TEST_CASE("rowspace meets coordinate subspace") {
  // N = [(1,1,1)], W = {0,2} -> false
  auto n = zmat(1, 3, {1, 1, 1});
  CHECK(!rowspace_meets_coordinate_subspace(n, {0, 2}));
  // N = [(1,0,1)], W = {0,2} -> true
  auto n2 = zmat(1, 3, {1, 0, 1});
  CHECK(rowspace_meets_coordinate_subspace(n2, {0, 2}));
  // W empty -> false
  CHECK(!rowspace_meets_coordinate_subspace(n2, {}));
  CHECK_THROWS(rowspace_meets_coordinate_subspace(n2, {5}));
}
