#pragma once

#include <string>

#include "jumploci/fpgroups.hpp"
#include "jumploci/sigma_raag.hpp"

namespace jumploci {

// Input errors cite the 1-based line of the offending directive.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

// Complex files: `vertices: a b c`, `facet: a b`, `#` comments. Graphs use
// `edge: a b`; presentations `gens: x1 x2` / `rel: x1 x2^-1`; characters
// `chi: a=1 b=0`; integer matrices `row: 1 0 -1`. Canonical emitters sort
// names lexicographically and are accepted back by the parsers.
SimplicialComplex parse_complex(const std::string& text);
std::string emit_complex(const SimplicialComplex& k);

Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

GroupPresentation parse_presentation(const std::string& text);
std::string emit_presentation(const GroupPresentation& p);

Character parse_character(const std::string& text,
                          const std::vector<std::string>& vertices);
std::string emit_character(const Character& chi,
                           const std::vector<std::string>& vertices);

ZMat parse_int_matrix(const std::string& text);
std::string emit_int_matrix(const ZMat& m);

// Human-readable forms for reports: subspaces as constraint equations in
// z-coordinates, arrangements one member per line.
std::string subspace_to_string(const SubspaceQ& s);
std::string arrangement_to_string(const SubspaceArrangement& a);
std::string vmask_to_string(VMask w, const std::vector<std::string>& vertices);

std::string read_file(const std::string& path);

}  // namespace jumploci
