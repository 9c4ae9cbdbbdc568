#include "doctest.h"
#include "jumploci/simplicial.hpp"

using namespace jumploci;

namespace {

SimplicialComplex path3() {
  return SimplicialComplex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

SimplicialComplex rp2_six() {
  return SimplicialComplex({"1", "2", "3", "4", "5", "6"},
                           {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"},
                            {"1", "5", "6"}, {"1", "6", "2"}, {"2", "3", "5"},
                            {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"},
                            {"6", "2", "4"}});
}

Graph octahedron_graph() {
  return Graph({"a", "b"}, {})
      .join(Graph({"c", "d"}, {}))
      .join(Graph({"e", "f"}, {}));
}

// Alternating sum of reduced Betti numbers must match the alternating count
// of simplices (empty simplex included, with sign for degree -1).
void check_euler(const SimplicialComplex& k, const Coeff& field) {
  HomologyProfile h = reduced_homology(k, field);
  long lhs = 0, rhs = 0;
  auto cards = k.by_cardinality();
  for (int d = -1; d <= k.dimension() + 1; ++d) {
    long sign = (d % 2 == 0) ? 1 : -1;
    lhs += sign * static_cast<long>(h.betti_at(d));
    std::size_t card = static_cast<std::size_t>(d + 1);
    if (card < cards.size()) rhs += sign * static_cast<long>(cards[card].size());
  }
  CHECK(lhs == rhs);
}

}  // namespace

TEST_CASE("induced subcomplexes") {
  SimplicialComplex p = path3();
  SimplicialComplex ac = p.induced(p.mask_of({"a", "c"}));
  CHECK(ac.has_simplex(p.mask_of({"a"})));
  CHECK(ac.has_simplex(p.mask_of({"c"})));
  CHECK_FALSE(ac.has_simplex(p.mask_of({"b"})));
  CHECK(ac.simplices().size() == 2);

  CHECK(p.induced(p.mask_of({"a", "b", "c"})) == p);
  CHECK(p.induced(0).is_irrelevant());
}

TEST_CASE("links with ambient membership") {
  SimplicialComplex p = path3();
  VMask c = p.mask_of({"c"});

  SimplicialComplex la = p.link(p.induced(p.mask_of({"a"})), c);
  CHECK(la.is_irrelevant());  // {a,c} is not a simplex

  SimplicialComplex lab = p.link(p.induced(p.mask_of({"a", "b"})), c);
  CHECK(lab.simplices().size() == 1);
  CHECK(lab.has_simplex(p.mask_of({"b"})));
  CHECK(lab.has_empty_simplex());

  CHECK(p.link(p, 0) == p);
  CHECK_THROWS_AS(p.link(p, p.mask_of({"a", "c"})), std::invalid_argument);
}

TEST_CASE("flag complexes") {
  Graph tri({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  SimplicialComplex solid = flag_complex(tri);
  CHECK(solid.dimension() == 2);
  CHECK(solid.has_simplex(solid.mask_of({"a", "b", "c"})));

  Graph pg({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(flag_complex(pg) == path3());

  SimplicialComplex oct = flag_complex(octahedron_graph());
  CHECK(oct.dimension() == 2);
  HomologyProfile h = reduced_homology(oct, Coeff::Z());
  CHECK(h.betti_at(2) == 1);
  CHECK(h.trivial_at(1));
  CHECK(h.trivial_at(0));

  // flag complex of a 1-skeleton is the identity on flag complexes
  CHECK(flag_complex(oct.one_skeleton()) == oct);
  CHECK(flag_complex(path3().one_skeleton()) == path3());
}

TEST_CASE("barycentric subdivision") {
  SimplicialComplex edge(std::vector<std::string>{"a", "b"}, {{"a", "b"}});
  SimplicialComplex sd = edge.barycentric_subdivision();
  CHECK(sd.vertex_count() == 3);
  CHECK(sd.dimension() == 1);
  CHECK(sd.simplices().size() == 5);  // path with three vertices

  SimplicialComplex tri_bd(std::vector<std::string>{"a", "b", "c"},
                           {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  SimplicialComplex hex = tri_bd.barycentric_subdivision();
  CHECK(hex.vertex_count() == 6);
  CHECK(reduced_homology(hex, Coeff::Q()).betti_at(1) == 1);

  SimplicialComplex rp2 = rp2_six().barycentric_subdivision();
  CHECK(rp2.vertex_count() == 31);
  CHECK(flag_complex(rp2.one_skeleton()) == rp2);
  HomologyProfile h = reduced_homology(rp2, Coeff::Z());
  CHECK(h.betti_at(1) == 0);
  REQUIRE(h.torsion_at(1).size() == 1);
  CHECK(h.torsion_at(1)[0] == 2);

  // subdivision preserves the homology profile
  for (const SimplicialComplex& k : {path3(), rp2_six(), edge}) {
    SimplicialComplex b = k.barycentric_subdivision();
    for (const Coeff& coeff : {Coeff::Z(), Coeff::Q(), Coeff::Fp(2), Coeff::Fp(3)}) {
      HomologyProfile hk = reduced_homology(k, coeff);
      HomologyProfile hb = reduced_homology(b, coeff);
      for (int d = -1; d <= 3; ++d) {
        CHECK(hk.betti_at(d) == hb.betti_at(d));
        CHECK(hk.torsion_at(d) == hb.torsion_at(d));
      }
    }
  }
}

TEST_CASE("reduced homology conventions and examples") {
  SimplicialComplex rp2 = rp2_six();
  CHECK(reduced_homology(rp2, Coeff::Q()).betti_at(1) == 0);
  CHECK(reduced_homology(rp2, Coeff::Fp(2)).betti_at(1) == 1);
  CHECK(reduced_homology(rp2, Coeff::Fp(2)).betti_at(2) == 1);
  HomologyProfile hz = reduced_homology(rp2, Coeff::Z());
  CHECK(hz.betti_at(1) == 0);
  CHECK(hz.torsion_at(1) == std::vector<Int>{2});
  CHECK(hz.trivial_at(2));

  SimplicialComplex irr = SimplicialComplex::irrelevant({"a"});
  CHECK(reduced_homology(irr, Coeff::Q()).betti_at(-1) == 1);
  SimplicialComplex voidc = SimplicialComplex::void_complex({"a"});
  HomologyProfile hv = reduced_homology(voidc, Coeff::Q());
  for (int d = -1; d <= 2; ++d) CHECK(hv.betti_at(d) == 0);

  SimplicialComplex two(std::vector<std::string>{"a", "b"}, {{"a"}, {"b"}});
  CHECK(reduced_homology(two, Coeff::Q()).betti_at(0) == 1);
  CHECK(reduced_homology(two, Coeff::Q()).betti_at(-1) == 0);

  CHECK_THROWS_AS(reduced_homology(two, Coeff::Fp(6)), std::invalid_argument);

  for (const SimplicialComplex& k :
       {path3(), rp2, flag_complex(octahedron_graph()), irr, two})
    for (const Coeff& field : {Coeff::Q(), Coeff::Fp(2), Coeff::Fp(5)})
      check_euler(k, field);
}

TEST_CASE("universal coefficients on the projective plane") {
  // b_i over F_p = Z-rank + torsion in degrees i and i-1 divisible by p
  SimplicialComplex rp2 = rp2_six();
  HomologyProfile hz = reduced_homology(rp2, Coeff::Z());
  for (std::uint64_t p : {2, 3, 5}) {
    HomologyProfile hp = reduced_homology(rp2, Coeff::Fp(p));
    for (int d = 0; d <= 2; ++d) {
      std::size_t expected = hz.betti_at(d);
      for (const Int& t : hz.torsion_at(d))
        if (t % p == 0) ++expected;
      for (const Int& t : hz.torsion_at(d - 1))
        if (t % p == 0) ++expected;
      CHECK(hp.betti_at(d) == expected);
    }
  }
}

TEST_CASE("graph connectivity") {
  Connectivity p = graph_connectivity(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  CHECK(p.is_connected);
  CHECK(p.cut_vertices == std::vector<std::size_t>{1});

  Connectivity two = graph_connectivity(Graph({"a", "b"}, {}));
  CHECK_FALSE(two.is_connected);
  CHECK(two.cut_vertices.empty());

  Connectivity c4 = graph_connectivity(Graph(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}));
  CHECK(c4.is_connected);
  CHECK(c4.cut_vertices.empty());

  Connectivity nothing = graph_connectivity(Graph());
  CHECK_FALSE(nothing.is_connected);
  CHECK(nothing.empty_graph_convention);
}
