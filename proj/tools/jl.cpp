#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "jumploci/io.hpp"
#include "jumploci/tau.hpp"

using namespace jumploci;
using nlohmann::json;

namespace {

Coeff parse_coeff(const std::string& name) {
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

std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<Rat> parse_rats(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& tok : split_tokens(s)) {
    Rat r(tok);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  for (const auto& tok : split_tokens(s)) out.push_back(std::stol(tok));
  return out;
}

json subspace_json(const SubspaceQ& s) {
  json rows = json::array();
  for (const auto& row : s.constraints()) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    rows.push_back(r);
  }
  return json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"constraints", rows}};
}

json arrangement_json(const SubspaceArrangement& a) {
  json parts = json::array();
  for (const auto& s : a.parts()) parts.push_back(subspace_json(s));
  return json{{"ambient", a.ambient()}, {"parts", parts}};
}

json names_json(VMask w, const std::vector<std::string>& vertices) {
  json out = json::array();
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (w & (VMask{1} << v)) out.push_back(vertices[v]);
  return out;
}

// A command prints text by default, or the same data as JSON.
struct Report {
  std::string text;
  json data;
};

struct Options {
  bool as_json = false;
  std::uint64_t seed = 20100801;  // reserved for randomized subcommands
};

void print_report(const Report& r, const Options& opt) {
  if (opt.as_json)
    std::cout << r.data.dump(2) << '\n';
  else
    std::cout << r.text << '\n';
}

Report betti_report(const HomologyProfile& h, int top_degree) {
  std::ostringstream text;
  json degrees = json::array();
  for (int d = -1; d <= top_degree; ++d) {
    text << "H~" << d << ": rank " << h.betti_at(d);
    json deg{{"degree", d}, {"rank", h.betti_at(d)}};
    if (h.coeff.kind == Coeff::Kind::Z) {
      json tor = json::array();
      if (!h.torsion_at(d).empty()) {
        text << " torsion";
        for (const auto& t : h.torsion_at(d)) {
          text << ' ' << t.get_str();
          tor.push_back(t.get_str());
        }
      }
      deg["torsion"] = tor;
    }
    if (d < top_degree) text << '\n';
    degrees.push_back(deg);
  }
  return {text.str(), json{{"coefficients", h.coeff.name()}, {"homology", degrees}}};
}

Report coordinate_report(const CoordinateArrangement& a) {
  std::ostringstream text;
  json members = json::array();
  bool first = true;
  for (VMask w : a.members) {
    if (!first) text << '\n';
    first = false;
    text << "W = " << vmask_to_string(w, a.vertices);
    members.push_back(names_json(w, a.vertices));
  }
  if (a.members.empty()) text << "empty";
  return {text.str(),
          json{{"tag", a.tag == CoordinateArrangement::Tag::Subspace ? "subspace"
                                                                     : "subtorus"},
               {"degree", a.degree},
               {"depth", a.depth},
               {"coefficients", a.coeff.name()},
               {"members", members}}};
}

Report arrangement_report(const SubspaceArrangement& a) {
  return {arrangement_to_string(a), arrangement_json(a)};
}

Report bool_report(bool value) {
  return {value ? "true" : "false", json{{"result", value}}};
}

int run(int argc, char** argv) {
  CLI::App app{"exact homology jumping loci for toric complexes, group "
               "presentations, and right-angled Artin groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "emit JSON instead of text");
  app.add_option("--seed", opt.seed, "seed for randomized subcommands");

  std::function<void()> action;

  // complex betti | subdivide
  auto* complex_cmd = app.add_subcommand("complex", "simplicial complex queries");
  complex_cmd->require_subcommand(1);
  {
    auto* c = complex_cmd->add_subcommand("betti", "reduced homology");
    auto path = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("Q");
    c->add_option("--complex", *path, "complex file")->required();
    c->add_option("--field", *field, "Q, Z, or F<p>");
    c->callback([=, &opt] {
      SimplicialComplex k = parse_complex(read_file(*path));
      HomologyProfile h = reduced_homology(k, parse_coeff(*field));
      print_report(betti_report(h, std::max(k.dimension(), -1)), opt);
    });
  }
  {
    auto* c = complex_cmd->add_subcommand("subdivide", "barycentric subdivision");
    auto path = std::make_shared<std::string>();
    c->add_option("--complex", *path, "complex file")->required();
    c->callback([=, &opt] {
      SimplicialComplex k = parse_complex(read_file(*path));
      std::string text = emit_complex(k.barycentric_subdivision());
      while (!text.empty() && text.back() == '\n') text.pop_back();
      print_report({text, json{{"complex", text}}}, opt);
    });
  }

  // toric resonance | charvar | aomoto
  auto* toric_cmd = app.add_subcommand("toric", "jump loci of toric complexes");
  toric_cmd->require_subcommand(1);
  for (bool subtorus : {false, true}) {
    auto* c = toric_cmd->add_subcommand(subtorus ? "charvar" : "resonance",
                                        subtorus ? "characteristic variety"
                                                 : "resonance variety");
    auto path = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("Q");
    auto i = std::make_shared<int>(1);
    auto d = std::make_shared<std::size_t>(1);
    auto cap = std::make_shared<std::size_t>(kDefaultSweepCap);
    c->add_option("--complex", *path, "complex file")->required();
    c->add_option("--i", *i, "homological degree");
    c->add_option("--d", *d, "depth");
    c->add_option("--field", *field, "Q or F<p>");
    c->add_option("--cap", *cap, "vertex sweep cap");
    c->callback([=, &opt] {
      SimplicialComplex k = parse_complex(read_file(*path));
      CoordinateArrangement a =
          subtorus ? charvar_arrangement(k, *i, *d, parse_coeff(*field), *cap)
                   : resonance_arrangement(k, *i, *d, parse_coeff(*field), *cap);
      print_report(coordinate_report(a), opt);
    });
  }
  {
    auto* c = toric_cmd->add_subcommand("aomoto", "single Aomoto-Betti number");
    auto path = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("Q");
    auto support = std::make_shared<std::string>();
    auto i = std::make_shared<int>(1);
    c->add_option("--complex", *path, "complex file")->required();
    c->add_option("--support", *support, "vertex names of W, space separated")
        ->required();
    c->add_option("--i", *i, "homological degree");
    c->add_option("--field", *field, "Q or F<p>");
    c->callback([=, &opt] {
      SimplicialComplex k = parse_complex(read_file(*path));
      VMask w = k.mask_of(split_tokens(*support));
      std::size_t b = aomoto_betti(k, w, *i, parse_coeff(*field));
      print_report({std::to_string(b), json{{"betti", b}}}, opt);
    });
  }

  // tau1
  {
    auto* c = app.add_subcommand("tau1", "exponential tangent cone of a system");
    auto polys = std::make_shared<std::vector<std::string>>();
    auto nvars = std::make_shared<std::size_t>(0);
    auto cap = std::make_shared<std::size_t>(kDefaultTauSupportCap);
    c->add_option("--poly", *polys, "polynomial (repeatable)")->required();
    c->add_option("--nvars", *nvars, "ambient variable count (default: inferred)");
    c->add_option("--cap", *cap, "support enumeration cap");
    c->callback([=, &opt] {
      std::vector<LaurentPolynomial> fs;
      std::size_t n = *nvars;
      for (const auto& s : *polys) {
        LaurentPolynomial f = parse_polynomial(s, n);
        n = std::max(n, f.nvars());
        fs.push_back(std::move(f));
      }
      for (auto& f : fs)
        if (f.nvars() < n) f = parse_polynomial(f.to_string(), n);
      print_report(arrangement_report(tau1_system(fs, *cap)), opt);
    });
  }

  // fox | alexander | charvar1 | sigma1-bound | cover-z
  {
    auto* c = app.add_subcommand("fox", "abelianized Fox derivative");
    auto path = std::make_shared<std::string>();
    auto rel = std::make_shared<std::size_t>();
    auto gen = std::make_shared<std::size_t>();
    c->add_option("--pres", *path, "presentation file")->required();
    c->add_option("--rel", *rel, "relator index, 1-based")->required();
    c->add_option("--gen", *gen, "generator index, 1-based")->required();
    c->callback([=, &opt] {
      GroupPresentation p = parse_presentation(read_file(*path));
      if (*rel == 0 || *rel > p.relators.size())
        throw std::invalid_argument("relator index out of range");
      if (*gen == 0 || *gen > p.ngens)
        throw std::invalid_argument("generator index out of range");
      AbelianizationData ab = abelianization(p);
      LaurentPolynomial d =
          abelianize(fox_derivative(p.relators[*rel - 1], *gen - 1), ab);
      print_report({d.to_string(), json{{"derivative", d.to_string()}}}, opt);
    });
  }
  {
    auto* c = app.add_subcommand("alexander", "Alexander matrix");
    auto path = std::make_shared<std::string>();
    c->add_option("--pres", *path, "presentation file")->required();
    c->callback([=, &opt] {
      AlexanderMatrix a = alexander_matrix(parse_presentation(read_file(*path)));
      std::ostringstream text;
      json rows = json::array();
      for (std::size_t i = 0; i < a.rows; ++i) {
        json row = json::array();
        text << "row:";
        for (std::size_t j = 0; j < a.cols; ++j) {
          text << "  [" << a.at(i, j).to_string() << ']';
          row.push_back(a.at(i, j).to_string());
        }
        if (i + 1 < a.rows) text << '\n';
        rows.push_back(row);
      }
      if (a.rows == 0) text << "empty (0 x " << a.cols << ")";
      print_report({text.str(),
                    json{{"rows", a.rows}, {"cols", a.cols},
                         {"nvars", a.nvars}, {"entries", rows}}},
                   opt);
    });
  }
  {
    auto* c = app.add_subcommand("charvar1",
                                 "depth-d degree-1 jump locus membership");
    auto path = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("Q");
    auto d = std::make_shared<std::size_t>(1);
    c->add_option("--pres", *path, "presentation file")->required();
    c->add_option("--rho", *rho, "character values, space separated")->required();
    c->add_option("--d", *d, "depth");
    c->add_option("--field", *field, "Q or F<p>");
    c->callback([=, &opt] {
      GroupPresentation p = parse_presentation(read_file(*path));
      Coeff k = parse_coeff(*field);
      bool member;
      if (k.kind == Coeff::Kind::Q) {
        member = charvar1_member_q(p, parse_rats(*rho), *d);
      } else if (k.kind == Coeff::Kind::Fp) {
        std::vector<std::uint64_t> point;
        for (long v : parse_longs(*rho)) {
          long r = v % static_cast<long>(k.p);
          if (r < 0) r += static_cast<long>(k.p);
          point.push_back(static_cast<std::uint64_t>(r));
        }
        member = charvar1_member_fp(p, point, *d, k.p);
      } else {
        throw std::invalid_argument("charvar1 requires field coefficients");
      }
      print_report(bool_report(member), opt);
    });
  }
  {
    auto* c = app.add_subcommand("sigma1-bound",
                                 "tau1 upper bound for the complement of Sigma^1");
    auto path = std::make_shared<std::string>();
    auto cap = std::make_shared<std::size_t>(kDefaultTauSupportCap);
    c->add_option("--pres", *path, "presentation file")->required();
    c->add_option("--cap", *cap, "support enumeration cap");
    c->callback([=, &opt] {
      Sigma1Bound b = sigma1_upper_bound(parse_presentation(read_file(*path)), *cap);
      Report r = arrangement_report(b.arrangement);
      Report out = {std::string("sigma1 empty: ") + (b.full_space ? "true" : "false") +
                        "\n" + r.text,
                    json{{"sigma1_empty", b.full_space}, {"excluded", r.data}}};
      print_report(out, opt);
    });
  }
  {
    auto* c = app.add_subcommand("cover-z", "finiteness of the infinite cyclic cover");
    auto path = std::make_shared<std::string>();
    auto z = std::make_shared<std::string>();
    c->add_option("--pres", *path, "presentation file")->required();
    c->add_option("--z", *z, "integer direction, space separated")->required();
    c->callback([=, &opt] {
      bool finite =
          cyclic_cover_finite(parse_presentation(read_file(*path)), parse_longs(*z));
      print_report(bool_report(finite), opt);
    });
  }

  // sigma member | describe
  auto* sigma_cmd = app.add_subcommand("sigma", "BNSR invariants of RAAGs");
  sigma_cmd->require_subcommand(1);
  {
    auto* c = sigma_cmd->add_subcommand("member", "Sigma^q membership of a character");
    auto graph = std::make_shared<std::string>();
    auto chi = std::make_shared<std::string>();
    auto coeff = std::make_shared<std::string>("Q");
    auto q = std::make_shared<int>(1);
    c->add_option("--graph", *graph, "graph file")->required();
    c->add_option("--chi", *chi, "character, e.g. `a=1 b=0`")->required();
    c->add_option("--q", *q, "degree");
    c->add_option("--coeff", *coeff, "Q, Z, or F<p>");
    c->callback([=, &opt] {
      Graph g = parse_graph(read_file(*graph));
      Character x = parse_character("chi: " + *chi + "\n", g.vertices());
      print_report(bool_report(sigma_member(g, x, *q, parse_coeff(*coeff))), opt);
    });
  }
  {
    auto* c = sigma_cmd->add_subcommand("describe", "verdict for every support");
    auto graph = std::make_shared<std::string>();
    auto coeff = std::make_shared<std::string>("Q");
    auto q = std::make_shared<int>(1);
    auto cap = std::make_shared<std::size_t>(kDefaultSweepCap);
    c->add_option("--graph", *graph, "graph file")->required();
    c->add_option("--q", *q, "degree");
    c->add_option("--coeff", *coeff, "Q, Z, or F<p>");
    c->add_option("--cap", *cap, "vertex sweep cap");
    c->callback([=, &opt] {
      Graph g = parse_graph(read_file(*graph));
      SupportVerdictTable t = sigma_describe(g, *q, parse_coeff(*coeff), *cap);
      std::ostringstream text;
      json entries = json::array();
      bool first = true;
      for (const auto& [w, good] : t) {
        if (!first) text << '\n';
        first = false;
        text << vmask_to_string(w, g.vertices()) << ": "
             << (good ? "true" : "false");
        entries.push_back(
            json{{"support", names_json(w, g.vertices())}, {"good", good}});
      }
      print_report({text.str(), json{{"verdicts", entries}}}, opt);
    });
  }

  // cover toric
  auto* cover_cmd = app.add_subcommand("cover", "free abelian covers");
  cover_cmd->require_subcommand(1);
  {
    auto* c = cover_cmd->add_subcommand("toric", "finiteness along an epimorphism");
    auto path = std::make_shared<std::string>();
    auto nupath = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("Q");
    auto q = std::make_shared<int>(1);
    auto cap = std::make_shared<std::size_t>(kDefaultSweepCap);
    c->add_option("--complex", *path, "complex file")->required();
    c->add_option("--nu", *nupath, "epimorphism file (`row:` lines)")->required();
    c->add_option("--q", *q, "degree bound");
    c->add_option("--field", *field, "Q or F<p>");
    c->add_option("--cap", *cap, "vertex sweep cap");
    c->callback([=, &opt] {
      SimplicialComplex k = parse_complex(read_file(*path));
      ZMat nu = parse_int_matrix(read_file(*nupath));
      print_report(
          bool_report(dwyer_fried_toric(k, nu, *q, parse_coeff(*field), *cap)), opt);
    });
  }

  // artin-kernel v11 | sigma1
  auto* ak_cmd = app.add_subcommand("artin-kernel", "Artin kernel invariants");
  ak_cmd->require_subcommand(1);
  {
    auto* c = ak_cmd->add_subcommand("v11", "degree-1 jump locus components");
    auto graph = std::make_shared<std::string>();
    auto chi = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("Q");
    auto assume = std::make_shared<bool>(false);
    c->add_option("--graph", *graph, "graph file")->required();
    c->add_option("--chi", *chi, "character, e.g. `a=1 b=0`")->required();
    c->add_option("--field", *field, "Q or F<p>");
    c->add_flag("--assume-monodromy", *assume, "assert trivial H_1-monodromy");
    c->callback([=, &opt] {
      Graph g = parse_graph(read_file(*graph));
      Character x = parse_character("chi: " + *chi + "\n", g.vertices());
      auto loci = artin_kernel_v11(g, x, parse_coeff(*field), *assume);
      std::ostringstream text;
      json entries = json::array();
      bool first = true;
      for (const auto& [w, dim] : loci) {
        if (!first) text << '\n';
        first = false;
        text << "W = " << vmask_to_string(w, g.vertices()) << " dim " << dim;
        entries.push_back(
            json{{"support", names_json(w, g.vertices())}, {"dim", dim}});
      }
      if (loci.empty()) text << "empty";
      json data{{"components", entries}};
      if (*assume) data["assumed_trivial_monodromy"] = true;
      print_report({text.str(), data}, opt);
    });
  }
  {
    auto* c = ak_cmd->add_subcommand("sigma1", "upper-bound arrangement for Sigma^1");
    auto graph = std::make_shared<std::string>();
    auto chi = std::make_shared<std::string>();
    auto assume = std::make_shared<bool>(false);
    auto cap = std::make_shared<std::size_t>(kDefaultSweepCap);
    c->add_option("--graph", *graph, "graph file")->required();
    c->add_option("--chi", *chi, "character, e.g. `a=1 b=0`")->required();
    c->add_flag("--assume-monodromy", *assume, "assert trivial H_1-monodromy");
    c->add_option("--cap", *cap, "vertex sweep cap");
    c->callback([=, &opt] {
      Graph g = parse_graph(read_file(*graph));
      Character x = parse_character("chi: " + *chi + "\n", g.vertices());
      ArtinKernelSigma1Bound b = artin_kernel_sigma1_bound(g, x, *assume, *cap);
      Report r = arrangement_report(b.arrangement);
      json data{{"sigma1_empty", b.empty_sigma}, {"excluded", r.data}};
      if (*assume) data["assumed_trivial_monodromy"] = true;
      print_report({std::string("sigma1 empty: ") +
                        (b.empty_sigma ? "true" : "false") + "\n" + r.text,
                    data},
                   opt);
    });
  }

  // bb predicates
  auto* bb_cmd = app.add_subcommand("bb", "Bestvina-Brady groups");
  bb_cmd->require_subcommand(1);
  {
    auto* c = bb_cmd->add_subcommand("predicates", "finiteness predicates");
    auto graph = std::make_shared<std::string>();
    c->add_option("--graph", *graph, "graph file")->required();
    c->callback([=, &opt] {
      BestvinaBradyPredicates p =
          bestvina_brady_predicates(parse_graph(read_file(*graph)));
      std::ostringstream text;
      text << "fg: " << (p.fg ? "true" : "false") << '\n'
           << "h1_monodromy_trivial: " << (p.h1_monodromy_trivial ? "true" : "false")
           << '\n'
           << "h12_monodromy_trivial: "
           << (p.h12_monodromy_trivial ? "true" : "false") << '\n'
           << "fp_necessary: " << (p.fp_necessary ? "true" : "false")
           << "  # necessary only";
      print_report({text.str(),
                    json{{"fg", p.fg},
                         {"h1_monodromy_trivial", p.h1_monodromy_trivial},
                         {"h12_monodromy_trivial", p.h12_monodromy_trivial},
                         {"fp_necessary", p.fp_necessary}}},
                   opt);
    });
  }

  std::function<void(CLI::App*)> allow_global = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      allow_global(sub);
    }
  };
  allow_global(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
