#include "jumploci/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace jumploci {

namespace {

struct Line {
  std::size_t number;
  std::string directive;
  std::vector<std::string> tokens;
};

std::vector<Line> parse_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head.empty() || head.back() != ':')
      throw ParseError(number, "expected a `directive:` line, got `" + head + "`");
    Line line{number, head.substr(0, head.size() - 1), {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> take_vertices(const std::vector<Line>& lines) {
  const Line* found = nullptr;
  for (const auto& l : lines)
    if (l.directive == "vertices") {
      if (found) throw ParseError(l.number, "duplicate vertices line");
      found = &l;
    }
  if (!found) throw ParseError(1, "missing vertices line");
  return found->tokens;
}

Rat parse_rat(const std::string& tok, std::size_t line) {
  try {
    Rat r(tok);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "bad rational `" + tok + "`");
  }
}

Int parse_int(const std::string& tok, std::size_t line) {
  try {
    return Int(tok);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "bad integer `" + tok + "`");
  }
}

long parse_long(const std::string& tok, std::size_t line) {
  Int v = parse_int(tok, line);
  if (!v.fits_slong_p()) throw ParseError(line, "integer out of range: " + tok);
  return v.get_si();
}

// Maximal simplices, as sorted vertex-name lists sorted lexicographically.
std::vector<std::vector<std::string>> facets_of(const SimplicialComplex& k) {
  std::vector<std::vector<std::string>> out;
  for (VMask s : k.simplices()) {
    bool maximal = std::none_of(k.simplices().begin(), k.simplices().end(),
                                [&](VMask t) { return t != s && (s & ~t) == 0; });
    if (!maximal) continue;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
      if (s & (VMask{1} << v)) names.push_back(k.vertices()[v]);
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
  auto lines = parse_lines(text);
  std::vector<std::string> vertices = take_vertices(lines);
  std::vector<std::vector<std::string>> facets;
  for (const auto& l : lines) {
    if (l.directive == "vertices") continue;
    if (l.directive != "facet")
      throw ParseError(l.number, "unknown directive `" + l.directive + "`");
    facets.push_back(l.tokens);
  }
  try {
    return SimplicialComplex(std::move(vertices), facets);
  } catch (const std::exception& e) {
    throw ParseError(1, e.what());
  }
}

std::string emit_complex(const SimplicialComplex& k) {
  if (k.is_void())
    throw std::invalid_argument("the void complex has no text form");
  std::vector<std::string> vertices = k.vertices();
  std::sort(vertices.begin(), vertices.end());
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : vertices) out << ' ' << v;
  out << '\n';
  for (const auto& facet : facets_of(k)) {
    out << "facet:";
    for (const auto& v : facet) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Graph parse_graph(const std::string& text) {
  auto lines = parse_lines(text);
  std::vector<std::string> vertices = take_vertices(lines);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& l : lines) {
    if (l.directive == "vertices") continue;
    if (l.directive != "edge")
      throw ParseError(l.number, "unknown directive `" + l.directive + "`");
    if (l.tokens.size() != 2)
      throw ParseError(l.number, "an edge needs exactly two vertices");
    edges.emplace_back(l.tokens[0], l.tokens[1]);
  }
  try {
    return Graph(std::move(vertices), edges);
  } catch (const std::exception& e) {
    throw ParseError(1, e.what());
  }
}

std::string emit_graph(const Graph& g) {
  std::vector<std::string> vertices = g.vertices();
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : g.edges()) {
    std::string na = g.vertices()[a], nb = g.vertices()[b];
    if (nb < na) std::swap(na, nb);
    edges.emplace_back(std::move(na), std::move(nb));
  }
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : vertices) out << ' ' << v;
  out << '\n';
  for (const auto& [a, b] : edges) out << "edge: " << a << ' ' << b << '\n';
  return out.str();
}

GroupPresentation parse_presentation(const std::string& text) {
  auto lines = parse_lines(text);
  std::vector<std::string> gens;
  bool seen_gens = false;
  std::vector<Word> relators;
  for (const auto& l : lines) {
    if (l.directive == "gens") {
      if (seen_gens) throw ParseError(l.number, "duplicate gens line");
      seen_gens = true;
      gens = l.tokens;
      continue;
    }
    if (l.directive != "rel")
      throw ParseError(l.number, "unknown directive `" + l.directive + "`");
    if (!seen_gens) throw ParseError(l.number, "rel before gens");
    Word w;
    for (const auto& tok : l.tokens) {
      std::string name = tok;
      long exp = 1;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        name = tok.substr(0, caret);
        exp = parse_long(tok.substr(caret + 1), l.number);
      }
      auto it = std::find(gens.begin(), gens.end(), name);
      if (it == gens.end())
        throw ParseError(l.number, "unknown generator `" + name + "`");
      int letter = static_cast<int>(it - gens.begin()) + 1;
      for (long i = 0; i < std::abs(exp); ++i)
        w.push_back(exp > 0 ? letter : -letter);
    }
    relators.push_back(std::move(w));
  }
  if (!seen_gens) throw ParseError(1, "missing gens line");
  return GroupPresentation(gens.size(), std::move(relators));
}

std::string emit_presentation(const GroupPresentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (std::size_t j = 1; j <= p.ngens; ++j) out << " x" << j;
  out << '\n';
  for (const auto& r : p.relators) {
    out << "rel:";
    for (std::size_t i = 0; i < r.size();) {
      std::size_t run = i;
      while (run < r.size() && r[run] == r[i]) ++run;
      long exp = static_cast<long>(run - i) * (r[i] > 0 ? 1 : -1);
      out << " x" << std::abs(r[i]);
      if (exp != 1) out << '^' << exp;
      i = run;
    }
    out << '\n';
  }
  return out.str();
}

Character parse_character(const std::string& text,
                          const std::vector<std::string>& vertices) {
  auto lines = parse_lines(text);
  Character chi(vertices.size(), Rat(0));
  std::vector<bool> seen(vertices.size(), false);
  bool seen_chi = false;
  for (const auto& l : lines) {
    if (l.directive != "chi")
      throw ParseError(l.number, "unknown directive `" + l.directive + "`");
    if (seen_chi) throw ParseError(l.number, "duplicate chi line");
    seen_chi = true;
    for (const auto& tok : l.tokens) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError(l.number, "expected `vertex=value`, got `" + tok + "`");
      std::string name = tok.substr(0, eq);
      auto it = std::find(vertices.begin(), vertices.end(), name);
      if (it == vertices.end())
        throw ParseError(l.number, "unknown vertex `" + name + "`");
      std::size_t v = static_cast<std::size_t>(it - vertices.begin());
      if (seen[v]) throw ParseError(l.number, "vertex `" + name + "` set twice");
      seen[v] = true;
      chi[v] = parse_rat(tok.substr(eq + 1), l.number);
    }
  }
  if (!seen_chi) throw ParseError(1, "missing chi line");
  return chi;
}

std::string emit_character(const Character& chi,
                           const std::vector<std::string>& vertices) {
  if (chi.size() != vertices.size())
    throw std::invalid_argument("character length must match the vertex count");
  std::ostringstream out;
  out << "chi:";
  for (std::size_t v = 0; v < vertices.size(); ++v)
    out << ' ' << vertices[v] << '=' << chi[v].get_str();
  out << '\n';
  return out.str();
}

ZMat parse_int_matrix(const std::string& text) {
  auto lines = parse_lines(text);
  std::vector<std::vector<Int>> rows;
  for (const auto& l : lines) {
    if (l.directive != "row")
      throw ParseError(l.number, "unknown directive `" + l.directive + "`");
    std::vector<Int> row;
    for (const auto& tok : l.tokens) row.push_back(parse_int(tok, l.number));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(l.number, "rows have inconsistent lengths");
    rows.push_back(std::move(row));
  }
  ZMat m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  return m;
}

std::string emit_int_matrix(const ZMat& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows; ++i) {
    out << "row:";
    for (std::size_t j = 0; j < m.cols; ++j) out << ' ' << m(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

std::string subspace_to_string(const SubspaceQ& s) {
  if (s.dim() == 0) return "{0}";
  if (s.constraints().empty()) return "full";
  std::ostringstream out;
  out << "{ ";
  bool first_row = true;
  for (const auto& row : s.constraints()) {
    if (!first_row) out << "; ";
    first_row = false;
    bool first_term = true;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      Int c = row[j];
      if (first_term) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      Int mag = abs(c);
      if (mag != 1) out << mag.get_str() << '*';
      out << 'z' << j + 1;
      first_term = false;
    }
    out << " = 0";
  }
  out << " }";
  return out.str();
}

std::string arrangement_to_string(const SubspaceArrangement& a) {
  if (a.empty()) return "empty";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : a.parts()) {
    if (!first) out << '\n';
    first = false;
    out << subspace_to_string(s);
  }
  return out.str();
}

std::string vmask_to_string(VMask w, const std::vector<std::string>& vertices) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (w & (VMask{1} << v)) {
      if (!first) out << ',';
      first = false;
      out << vertices[v];
    }
  out << '}';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace jumploci
