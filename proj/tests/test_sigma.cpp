#include "doctest.h"
#include "jumploci/sigma_raag.hpp"

using namespace jumploci;

namespace {

Graph edge_graph() { return Graph({"a", "b"}, {{"a", "b"}}); }
Graph two_points() { return Graph({"a", "b"}, {}); }
Graph path3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
Graph cycle4() {
  return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
}

SimplicialComplex rp2_six() {
  return SimplicialComplex({"1", "2", "3", "4", "5", "6"},
                           {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"},
                            {"1", "5", "6"}, {"1", "6", "2"}, {"2", "3", "5"},
                            {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"},
                            {"6", "2", "4"}});
}

Character ones(std::size_t n) { return Character(n, Rat(1)); }

}  // namespace

TEST_CASE("sigma membership for Z^2 and F_2") {
  Graph e = edge_graph();
  for (int q = 0; q <= 5; ++q)
    for (const Coeff& k : {Coeff::Z(), Coeff::Q(), Coeff::Fp(2)}) {
      CHECK(sigma_member(e, {Rat(1), Rat(1)}, q, k));
      CHECK(sigma_member(e, {Rat(0), Rat(-3)}, q, k));
    }

  Graph f = two_points();
  CHECK_FALSE(sigma_member(f, {Rat(1), Rat(1)}, 1, Coeff::Z()));
  CHECK_FALSE(sigma_member(f, {Rat(1), Rat(0)}, 1, Coeff::Q()));
  CHECK_THROWS_AS(sigma_member(f, {Rat(0), Rat(0)}, 1, Coeff::Q()),
                  std::invalid_argument);
}

TEST_CASE("sigma splits by characteristic on the flag projective plane") {
  Graph g = rp2_six().barycentric_subdivision().one_skeleton();
  Character chi = ones(31);
  CHECK_FALSE(sigma_member(g, chi, 2, Coeff::Z()));
  CHECK_FALSE(sigma_member(g, chi, 2, Coeff::Fp(2)));
  CHECK(sigma_member(g, chi, 2, Coeff::Q()));
  CHECK(sigma_member(g, chi, 2, Coeff::Fp(3)));
}

TEST_CASE("sigma describe") {
  SupportVerdictTable t = sigma_describe(path3(), 1, Coeff::Q());
  REQUIRE(t.size() == 7);
  // good supports are exactly those containing b (vertex index 1)
  for (const auto& [w, good] : t) CHECK(good == ((w & 2) != 0));

  SupportVerdictTable torus = sigma_describe(edge_graph(), 5, Coeff::Z());
  for (const auto& [w, good] : torus) CHECK(good);

  SupportVerdictTable free2 = sigma_describe(two_points(), 1, Coeff::Z());
  for (const auto& [w, good] : free2) CHECK_FALSE(good);
}

TEST_CASE("sigma describe matches the resonance complement") {
  for (const Graph& g : {path3(), cycle4(), two_points()}) {
    SimplicialComplex l = flag_complex(g);
    for (int q = 1; q <= 2; ++q) {
      SupportVerdictTable t = sigma_describe(g, q, Coeff::Q());
      std::vector<CoordinateArrangement> rs;
      for (int i = 0; i <= q; ++i)
        rs.push_back(resonance_arrangement(l, i, 1, Coeff::Q()));
      for (const auto& [w, good] : t) {
        bool resonant = false;
        for (const auto& r : rs) resonant |= r.contains_support(w);
        CHECK(good == !resonant);
      }
    }
  }
}

TEST_CASE("sigma membership invariants on small graphs") {
  std::vector<Graph> corpus = {edge_graph(), two_points(), path3(), cycle4(),
                               Graph({"a", "b", "c"},
                                     {{"a", "b"}, {"b", "c"}, {"a", "c"}})};
  for (const Graph& g : corpus) {
    std::size_t n = g.vertex_count();
    for (VMask w = 1; w < (VMask{1} << n); ++w) {
      Character chi(n, Rat(0)), neg(n, Rat(0));
      for (std::size_t v = 0; v < n; ++v)
        if (w & (VMask{1} << v)) { chi[v] = 1; neg[v] = -1; }
      bool prev = true;
      for (int q = 0; q <= 3; ++q) {
        bool over_z = sigma_member(g, chi, q, Coeff::Z());
        CHECK(sigma_member(g, neg, q, Coeff::Z()) == over_z);
        // descending chain in q
        CHECK((prev || !over_z));
        prev = over_z;
        if (over_z) {
          CHECK(sigma_member(g, chi, q, Coeff::Q()));
          CHECK(sigma_member(g, chi, q, Coeff::Fp(2)));
          CHECK(sigma_member(g, chi, q, Coeff::Fp(3)));
        }
      }
    }
  }
}

TEST_CASE("dwyer-fried finiteness for toric covers") {
  SimplicialComplex two(std::vector<std::string>{"a", "b"},
                        {{"a"}, {"b"}});
  ZMat nu11(1, 2);
  nu11(0, 0) = 1;
  nu11(0, 1) = 1;
  CHECK_FALSE(dwyer_fried_toric(two, nu11, 1, Coeff::Q()));

  SimplicialComplex p3(std::vector<std::string>{"a", "b", "c"},
                       {{"a", "b"}, {"b", "c"}});
  ZMat nu111(1, 3);
  nu111(0, 0) = nu111(0, 1) = nu111(0, 2) = 1;
  CHECK(dwyer_fried_toric(p3, nu111, 1, Coeff::Q()));

  // octahedron boundary: the cover misses finiteness in degree 3
  Graph oct3 = two_points()
                   .join(Graph({"c", "d"}, {}))
                   .join(Graph({"e", "f"}, {}));
  SimplicialComplex oct = flag_complex(oct3);
  ZMat diag(1, 6);
  for (std::size_t j = 0; j < 6; ++j) diag(0, j) = 1;
  CHECK_FALSE(dwyer_fried_toric(oct, diag, 3, Coeff::Q()));
  CHECK(dwyer_fried_toric(oct, diag, 1, Coeff::Q()));

  ZMat bad(2, 2);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(dwyer_fried_toric(two, bad, 1, Coeff::Q()), std::invalid_argument);

  // identity cover is the universal abelian cover: finite iff no W jumps
  ZMat id3(3, 3);
  for (std::size_t j = 0; j < 3; ++j) id3(j, j) = 1;
  bool fin = dwyer_fried_toric(p3, id3, 1, Coeff::Q());
  bool any_jump = false;
  for (VMask w = 1; w < 8; ++w)
    for (int i = 0; i <= 1; ++i)
      any_jump |= aomoto_betti(p3, w, i, Coeff::Q()) > 0;
  CHECK(fin == !any_jump);
}

TEST_CASE("bestvina-brady predicates") {
  BestvinaBradyPredicates p = bestvina_brady_predicates(path3());
  CHECK(p.fg);
  CHECK(p.h1_monodromy_trivial);
  CHECK(p.h12_monodromy_trivial);
  CHECK(p.fp_necessary);

  CHECK_FALSE(bestvina_brady_predicates(two_points()).fg);

  BestvinaBradyPredicates r =
      bestvina_brady_predicates(rp2_six().barycentric_subdivision().one_skeleton());
  CHECK(r.fg);
  CHECK(r.h1_monodromy_trivial);
  CHECK(r.h12_monodromy_trivial);  // H~_1(RP^2, Q) = 0
  CHECK_FALSE(r.fp_necessary);     // H_1(RP^2, Z) = Z/2
}

TEST_CASE("artin kernel degree-1 jump loci") {
  Graph p = path3();
  auto loci = artin_kernel_v11(p, ones(3), Coeff::Q());
  REQUIRE(loci.size() == 1);
  CHECK(loci[0].first == 0b101);
  CHECK(loci[0].second == 2);

  auto partial = artin_kernel_v11(p, {Rat(1), Rat(0), Rat(1)}, Coeff::Q(), true);
  REQUIRE(partial.size() == 1);
  CHECK(partial[0].first == 0b101);
  CHECK(partial[0].second == 1);

  Graph k3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(artin_kernel_v11(k3, ones(3), Coeff::Q()).empty());

  // precondition: non-constant character needs the assumption flag
  CHECK_THROWS_AS(artin_kernel_v11(p, {Rat(1), Rat(0), Rat(1)}, Coeff::Q()),
                  std::invalid_argument);
  CHECK_THROWS_AS(artin_kernel_v11(p, ones(3), Coeff::Z()), std::invalid_argument);
}

TEST_CASE("artin kernel sigma bound") {
  ArtinKernelSigma1Bound path_bound = artin_kernel_sigma1_bound(path3(), ones(3));
  CHECK(path_bound.empty_sigma);  // b is a cut vertex with chi(b) != 0

  ArtinKernelSigma1Bound c4 = artin_kernel_sigma1_bound(cycle4(), ones(4));
  CHECK_FALSE(c4.empty_sigma);
  REQUIRE(c4.arrangement.parts().size() == 2);
  Character chi4 = ones(4);
  for (const SubspaceQ& s : c4.arrangement.parts()) {
    CHECK(s.dim() == 3);
    CHECK(s.contains(chi4));
  }
  // the two planes come from the diagonal vertex pairs {a,c} and {b,d}
  SubspaceQ ac = SubspaceQ::span(4, {{Rat(1), Rat(0), Rat(0), Rat(0)},
                                     {Rat(0), Rat(0), Rat(1), Rat(0)},
                                     chi4});
  CHECK(c4.arrangement.parts()[0] != c4.arrangement.parts()[1]);
  CHECK((c4.arrangement.parts()[0] == ac || c4.arrangement.parts()[1] == ac));
}
