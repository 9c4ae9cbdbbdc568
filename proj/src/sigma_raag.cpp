#include "jumploci/sigma_raag.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace jumploci {

VMask character_support(const Character& chi) {
  if (chi.size() > 64) throw std::invalid_argument("too many vertices");
  VMask w = 0;
  for (std::size_t v = 0; v < chi.size(); ++v)
    if (chi[v] != 0) w |= VMask{1} << v;
  return w;
}

namespace {

bool vanishes(const HomologyProfile& h, int degree) {
  return h.coeff.kind == Coeff::Kind::Z ? h.trivial_at(degree)
                                        : h.betti_at(degree) == 0;
}

bool support_good(const SimplicialComplex& l, VMask w, int q, const Coeff& coeff) {
  VMask all = l.vertex_count() == 64 ? ~VMask{0}
                                     : (VMask{1} << l.vertex_count()) - 1;
  SimplicialComplex lw = l.induced(w);
  SimplicialComplex lout = l.induced(all & ~w);

  std::vector<VMask> sigmas = {0};
  sigmas.insert(sigmas.end(), lout.simplices().begin(), lout.simplices().end());
  for (VMask sigma : sigmas) {
    int card = std::popcount(sigma);
    int jmax = q - card - 1;  // q - dim(sigma) - 2
    if (jmax < -1) continue;
    HomologyProfile h = reduced_homology(l.link(lw, sigma), coeff);
    for (int j = -1; j <= jmax; ++j)
      if (!vanishes(h, j)) return false;
  }
  return true;
}

void check_coeff_is_field(const Coeff& k, const char* what) {
  if (k.kind == Coeff::Kind::Z)
    throw std::invalid_argument(std::string(what) + " requires field coefficients");
}

// The combinatorial sufficient condition for trivial H_1-monodromy: Gamma
// connected and chi constant (a Bestvina-Brady direction).
void check_monodromy_precondition(const Graph& gamma, const Character& chi,
                                  bool assumed) {
  if (chi.size() != gamma.vertex_count())
    throw std::invalid_argument("character length must match the vertex count");
  if (character_support(chi) == 0)
    throw std::invalid_argument("character must be nonzero");
  if (assumed) return;
  bool constant = std::all_of(chi.begin(), chi.end(),
                              [&](const Rat& x) { return x == chi[0]; });
  if (!constant || !graph_connectivity(gamma).is_connected)
    throw std::invalid_argument(
        "trivial monodromy not established; pass the assumption flag");
}

// Connectivity of the induced subgraph on the vertices of w alone.
bool connected_within(const Graph& gamma, VMask w) {
  if (w == 0) return false;
  std::size_t n = gamma.vertex_count();
  std::size_t start = static_cast<std::size_t>(std::countr_zero(w));
  VMask seen = VMask{1} << start;
  std::vector<std::size_t> queue = {start};
  while (!queue.empty()) {
    std::size_t v = queue.back();
    queue.pop_back();
    for (std::size_t u = 0; u < n; ++u) {
      VMask bit = VMask{1} << u;
      if ((w & bit) && !(seen & bit) && gamma.adjacent(std::min(u, v), std::max(u, v))) {
        seen |= bit;
        queue.push_back(u);
      }
    }
  }
  return seen == w;
}

std::vector<VMask> disconnected_supports(const Graph& gamma, bool maximal_only) {
  std::size_t n = gamma.vertex_count();
  std::vector<VMask> found;
  for (VMask w = 1; w < (VMask{1} << n); ++w)
    if (!connected_within(gamma, w)) found.push_back(w);
  if (!maximal_only) return found;
  std::vector<VMask> maximal;
  for (VMask w : found) {
    bool dominated = std::any_of(found.begin(), found.end(), [&](VMask u) {
      return u != w && (w & ~u) == 0;
    });
    if (!dominated) maximal.push_back(w);
  }
  return maximal;
}

bool cut_vertex_in_support(const Graph& gamma, const Character& chi) {
  Connectivity c = graph_connectivity(gamma);
  if (!c.is_connected) return false;
  return std::any_of(c.cut_vertices.begin(), c.cut_vertices.end(),
                     [&](std::size_t v) { return chi[v] != 0; });
}

}  // namespace

bool sigma_support_good(const Graph& gamma, VMask support, int q, const Coeff& coeff) {
  if (support == 0) throw std::invalid_argument("support must be nonempty");
  return support_good(flag_complex(gamma), support, q, coeff);
}

bool sigma_member(const Graph& gamma, const Character& chi, int q,
                  const Coeff& coeff) {
  if (chi.size() != gamma.vertex_count())
    throw std::invalid_argument("character length must match the vertex count");
  VMask w = character_support(chi);
  if (w == 0) throw std::invalid_argument("character must be nonzero");
  return sigma_support_good(gamma, w, q, coeff);
}

SupportVerdictTable sigma_describe(const Graph& gamma, int q, const Coeff& coeff,
                                   std::size_t sweep_cap) {
  std::size_t n = gamma.vertex_count();
  if (n > sweep_cap)
    throw std::invalid_argument("support sweep over " + std::to_string(n) +
                                " vertices exceeds the cap of " +
                                std::to_string(sweep_cap));
  SimplicialComplex l = flag_complex(gamma);
  SupportVerdictTable table;
  for (VMask w = 1; w < (VMask{1} << n); ++w)
    table[w] = support_good(l, w, q, coeff);
  return table;
}

bool dwyer_fried_toric(const SimplicialComplex& l, const ZMat& nu, int q,
                       const Coeff& field, std::size_t sweep_cap) {
  check_coeff_is_field(field, "dwyer_fried_toric");
  std::size_t n = l.vertex_count();
  if (nu.cols != n)
    throw std::invalid_argument("epimorphism must have one column per vertex");
  SmithForm s = smith_normal_form(nu);
  bool onto = s.rank == nu.rows &&
              std::all_of(s.diagonal.begin(), s.diagonal.end(),
                          [](const Int& d) { return d == 1; });
  if (!onto) throw std::invalid_argument("matrix is not onto Z^r");
  if (n > sweep_cap)
    throw std::invalid_argument("support sweep over " + std::to_string(n) +
                                " vertices exceeds the cap of " +
                                std::to_string(sweep_cap));

  for (VMask w = 1; w < (VMask{1} << n); ++w) {
    bool jumps = false;
    for (int i = 0; i <= q && !jumps; ++i)
      jumps = aomoto_betti(l, w, i, field) > 0;
    if (!jumps) continue;
    std::vector<std::size_t> cols;
    for (std::size_t v = 0; v < n; ++v)
      if (w & (VMask{1} << v)) cols.push_back(v);
    if (rowspace_meets_coordinate_subspace(nu, cols)) return false;
  }
  return true;
}

BestvinaBradyPredicates bestvina_brady_predicates(const Graph& gamma) {
  SimplicialComplex delta = flag_complex(gamma);
  HomologyProfile hq = reduced_homology(delta, Coeff::Q());
  HomologyProfile hz = reduced_homology(delta, Coeff::Z());
  BestvinaBradyPredicates out;
  out.fg = graph_connectivity(gamma).is_connected;
  out.h1_monodromy_trivial = hq.betti_at(0) == 0;
  out.h12_monodromy_trivial = hq.betti_at(0) == 0 && hq.betti_at(1) == 0;
  out.fp_necessary = hz.trivial_at(0) && hz.trivial_at(1);
  return out;
}

std::vector<std::pair<VMask, std::size_t>> artin_kernel_v11(
    const Graph& gamma, const Character& chi, const Coeff& field,
    bool assume_trivial_monodromy) {
  check_coeff_is_field(field, "artin_kernel_v11");
  check_monodromy_precondition(gamma, chi, assume_trivial_monodromy);
  VMask supp = character_support(chi);
  std::vector<std::pair<VMask, std::size_t>> out;
  for (VMask w : disconnected_supports(gamma, true)) {
    std::size_t dim = static_cast<std::size_t>(std::popcount(w));
    if ((supp & ~w) == 0) dim -= 1;
    out.emplace_back(w, dim);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ArtinKernelSigma1Bound artin_kernel_sigma1_bound(const Graph& gamma,
                                                 const Character& chi,
                                                 bool assume_trivial_monodromy,
                                                 std::size_t sweep_cap) {
  check_monodromy_precondition(gamma, chi, assume_trivial_monodromy);
  std::size_t n = gamma.vertex_count();
  ArtinKernelSigma1Bound out;
  out.arrangement = SubspaceArrangement(n);
  out.empty_sigma = cut_vertex_in_support(gamma, chi);
  if (out.empty_sigma) return out;
  if (n > sweep_cap)
    throw std::invalid_argument("support sweep over " + std::to_string(n) +
                                " vertices exceeds the cap of " +
                                std::to_string(sweep_cap));
  for (VMask w : disconnected_supports(gamma, true)) {
    std::vector<std::vector<Rat>> vectors = {chi};
    for (std::size_t v = 0; v < n; ++v)
      if (w & (VMask{1} << v)) {
        std::vector<Rat> e(n, 0);
        e[v] = 1;
        vectors.push_back(std::move(e));
      }
    out.arrangement.add(SubspaceQ::span(n, vectors));
  }
  return out;
}

}  // namespace jumploci
