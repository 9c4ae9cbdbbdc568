#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jumploci/io.hpp"
#include "jumploci/tau.hpp"

namespace py = pybind11;
using namespace jumploci;

namespace {

Coeff coeff_of(const std::string& name) {
  if (name == "Q") return Coeff::Q();
  if (name == "Z") return Coeff::Z();
  if (name.size() > 1 && name[0] == 'F') {
    Int p(name.substr(1));
    if (!p.fits_ulong_p()) throw std::invalid_argument("modulus out of range");
    return Coeff::Fp(p.get_ui());
  }
  throw std::invalid_argument("unknown coefficient ring `" + name +
                              "` (use Q, Z, or F<p>)");
}

Character chi_of(const Graph& g, const std::string& text) {
  return parse_character("chi: " + text + "\n", g.vertices());
}

std::vector<Rat> rats_of(const std::vector<std::string>& toks) {
  std::vector<Rat> out;
  for (const auto& t : toks) {
    Rat r(t);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

py::list homology_list(const HomologyProfile& h, int top) {
  py::list out;
  for (int d = -1; d <= top; ++d) {
    py::dict deg;
    deg["degree"] = d;
    deg["rank"] = h.betti_at(d);
    if (h.coeff.kind == Coeff::Kind::Z) {
      py::list tor;
      for (const auto& t : h.torsion_at(d)) tor.append(t.get_str());
      deg["torsion"] = tor;
    }
    out.append(deg);
  }
  return out;
}

py::list names_list(VMask w, const std::vector<std::string>& vertices) {
  py::list out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (w & (VMask{1} << v)) out.append(vertices[v]);
  return out;
}

std::vector<LaurentPolynomial> polys_of(const std::vector<std::string>& texts,
                                        std::size_t nvars) {
  std::vector<LaurentPolynomial> fs;
  std::size_t n = nvars;
  for (const auto& s : texts) {
    LaurentPolynomial f = parse_polynomial(s, n);
    n = std::max(n, f.nvars());
    fs.push_back(std::move(f));
  }
  for (auto& f : fs)
    if (f.nvars() < n) f = parse_polynomial(f.to_string(), n);
  return fs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact homology jumping loci";

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init(
          [](const std::string& text) { return parse_complex(text); }))
      .def_property_readonly("vertices", &SimplicialComplex::vertices)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def("barycentric_subdivision", &SimplicialComplex::barycentric_subdivision)
      .def("__str__", [](const SimplicialComplex& k) { return emit_complex(k); });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::string& text) { return parse_graph(text); }))
      .def_property_readonly("vertices", &Graph::vertices)
      .def("__str__", [](const Graph& g) { return emit_graph(g); });

  py::class_<GroupPresentation>(m, "GroupPresentation")
      .def(py::init(
          [](const std::string& text) { return parse_presentation(text); }))
      .def_readonly("ngens", &GroupPresentation::ngens)
      .def("__str__",
           [](const GroupPresentation& p) { return emit_presentation(p); });

  m.def("flag_complex", &flag_complex);

  m.def(
      "reduced_homology",
      [](const SimplicialComplex& k, const std::string& coeff) {
        return homology_list(reduced_homology(k, coeff_of(coeff)),
                             std::max(k.dimension(), -1));
      },
      py::arg("complex"), py::arg("coeff") = "Q");

  m.def(
      "aomoto_betti",
      [](const SimplicialComplex& k, const std::vector<std::string>& support,
         int i, const std::string& field) {
        return aomoto_betti(k, k.mask_of(support), i, coeff_of(field));
      },
      py::arg("complex"), py::arg("support"), py::arg("i"),
      py::arg("field") = "Q");

  auto coordinate_loci = [](const CoordinateArrangement& a) {
    py::list out;
    for (VMask w : a.members) out.append(names_list(w, a.vertices));
    return out;
  };
  m.def(
      "resonance",
      [=](const SimplicialComplex& k, int i, std::size_t d,
          const std::string& field, std::size_t cap) {
        return coordinate_loci(resonance_arrangement(k, i, d, coeff_of(field), cap));
      },
      py::arg("complex"), py::arg("i") = 1, py::arg("d") = 1,
      py::arg("field") = "Q", py::arg("cap") = kDefaultSweepCap);
  m.def(
      "charvar",
      [=](const SimplicialComplex& k, int i, std::size_t d,
          const std::string& field, std::size_t cap) {
        return coordinate_loci(charvar_arrangement(k, i, d, coeff_of(field), cap));
      },
      py::arg("complex"), py::arg("i") = 1, py::arg("d") = 1,
      py::arg("field") = "Q", py::arg("cap") = kDefaultSweepCap);

  m.def(
      "tau1",
      [](const std::vector<std::string>& polys, std::size_t nvars,
         std::size_t cap) {
        SubspaceArrangement a = tau1_system(polys_of(polys, nvars), cap);
        py::dict out;
        out["text"] = arrangement_to_string(a);
        py::list dims;
        for (const auto& s : a.parts()) dims.append(s.dim());
        out["dims"] = dims;
        return out;
      },
      py::arg("polys"), py::arg("nvars") = 0,
      py::arg("cap") = kDefaultTauSupportCap);

  m.def(
      "sigma_member",
      [](const Graph& g, const std::string& chi, int q, const std::string& coeff) {
        return sigma_member(g, chi_of(g, chi), q, coeff_of(coeff));
      },
      py::arg("graph"), py::arg("chi"), py::arg("q") = 1, py::arg("coeff") = "Q");

  m.def(
      "sigma_describe",
      [](const Graph& g, int q, const std::string& coeff, std::size_t cap) {
        py::dict out;
        for (const auto& [w, good] : sigma_describe(g, q, coeff_of(coeff), cap))
          out[py::str(vmask_to_string(w, g.vertices()))] = good;
        return out;
      },
      py::arg("graph"), py::arg("q") = 1, py::arg("coeff") = "Q",
      py::arg("cap") = kDefaultSweepCap);

  m.def(
      "dwyer_fried_toric",
      [](const SimplicialComplex& k, const std::vector<std::vector<long>>& nu,
         int q, const std::string& field, std::size_t cap) {
        ZMat m(nu.size(), k.vertices().size());
        for (std::size_t i = 0; i < nu.size(); ++i) {
          if (nu[i].size() != k.vertices().size())
            throw std::invalid_argument("nu row width mismatch");
          for (std::size_t j = 0; j < nu[i].size(); ++j) m(i, j) = nu[i][j];
        }
        return dwyer_fried_toric(k, m, q, coeff_of(field), cap);
      },
      py::arg("complex"), py::arg("nu"), py::arg("q") = 1, py::arg("field") = "Q",
      py::arg("cap") = kDefaultSweepCap);

  m.def("bestvina_brady_predicates", [](const Graph& g) {
    BestvinaBradyPredicates p = bestvina_brady_predicates(g);
    py::dict out;
    out["fg"] = p.fg;
    out["h1_monodromy_trivial"] = p.h1_monodromy_trivial;
    out["h12_monodromy_trivial"] = p.h12_monodromy_trivial;
    out["fp_necessary"] = p.fp_necessary;
    return out;
  });

  m.def(
      "artin_kernel_v11",
      [](const Graph& g, const std::string& chi, const std::string& field,
         bool assume) {
        py::list out;
        for (const auto& [w, dim] :
             artin_kernel_v11(g, chi_of(g, chi), coeff_of(field), assume))
          out.append(py::make_tuple(names_list(w, g.vertices()), dim));
        return out;
      },
      py::arg("graph"), py::arg("chi"), py::arg("field") = "Q",
      py::arg("assume_trivial_monodromy") = false);

  m.def(
      "artin_kernel_sigma1_bound",
      [](const Graph& g, const std::string& chi, bool assume, std::size_t cap) {
        ArtinKernelSigma1Bound b =
            artin_kernel_sigma1_bound(g, chi_of(g, chi), assume, cap);
        py::dict out;
        out["empty_sigma"] = b.empty_sigma;
        out["excluded"] = arrangement_to_string(b.arrangement);
        return out;
      },
      py::arg("graph"), py::arg("chi"),
      py::arg("assume_trivial_monodromy") = false,
      py::arg("cap") = kDefaultSweepCap);

  m.def("alexander_matrix", [](const GroupPresentation& p) {
    AlexanderMatrix a = alexander_matrix(p);
    py::list rows;
    for (std::size_t i = 0; i < a.rows; ++i) {
      py::list row;
      for (std::size_t j = 0; j < a.cols; ++j) row.append(a.at(i, j).to_string());
      rows.append(row);
    }
    py::dict out;
    out["nvars"] = a.nvars;
    out["entries"] = rows;
    return out;
  });

  m.def(
      "fox_derivative",
      [](const GroupPresentation& p, std::size_t rel, std::size_t gen) {
        if (rel >= p.relators.size())
          throw std::invalid_argument("relator index out of range");
        if (gen >= p.ngens)
          throw std::invalid_argument("generator index out of range");
        return abelianize(fox_derivative(p.relators[rel], gen), abelianization(p))
            .to_string();
      },
      py::arg("presentation"), py::arg("rel"), py::arg("gen"));

  m.def(
      "charvar1_member",
      [](const GroupPresentation& p, const std::vector<std::string>& rho,
         std::size_t d, const std::string& field) {
        Coeff k = coeff_of(field);
        if (k.kind == Coeff::Kind::Q) return charvar1_member_q(p, rats_of(rho), d);
        if (k.kind != Coeff::Kind::Fp)
          throw std::invalid_argument("charvar1 requires field coefficients");
        std::vector<std::uint64_t> point;
        for (const auto& t : rho) {
          Int v(t);
          Int r = v % Int(static_cast<unsigned long>(k.p));
          if (r < 0) r += static_cast<unsigned long>(k.p);
          point.push_back(r.get_ui());
        }
        return charvar1_member_fp(p, point, d, k.p);
      },
      py::arg("presentation"), py::arg("rho"), py::arg("d") = 1,
      py::arg("field") = "Q");

  m.def(
      "sigma1_upper_bound",
      [](const GroupPresentation& p, std::size_t cap) {
        Sigma1Bound b = sigma1_upper_bound(p, cap);
        py::dict out;
        out["sigma1_empty"] = b.full_space;
        out["excluded"] = arrangement_to_string(b.arrangement);
        return out;
      },
      py::arg("presentation"), py::arg("cap") = kDefaultTauSupportCap);

  m.def(
      "cyclic_cover_finite",
      [](const GroupPresentation& p, const std::vector<long>& z) {
        return cyclic_cover_finite(p, z);
      },
      py::arg("presentation"), py::arg("z"));
}
