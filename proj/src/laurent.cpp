#include "jumploci/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jumploci {

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Rat& c) {
  LaurentPolynomial f(nvars);
  f.add_term(Expo(nvars, 0), c);
  return f;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t j,
                                              long power) {
  if (j >= nvars) throw std::invalid_argument("variable index out of range");
  LaurentPolynomial f(nvars);
  Expo e(nvars, 0);
  e[j] = power;
  f.add_term(e, 1);
  return f;
}

LaurentPolynomial LaurentPolynomial::monomial(const Expo& e, const Rat& c) {
  LaurentPolynomial f(e.size());
  f.add_term(e, c);
  return f;
}

void LaurentPolynomial::add_term(const Expo& e, const Rat& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  LaurentPolynomial out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(nvars_);
      for (std::size_t j = 0; j < nvars_; ++j) e[j] = e1[j] + e2[j];
      out.add_term(e, c1 * c2);
    }
  return out;
}

bool LaurentPolynomial::equal_up_to_monomial_unit(const LaurentPolynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  Expo shift(nvars_);
  for (std::size_t j = 0; j < nvars_; ++j) shift[j] = a->first[j] - b->first[j];
  Rat scale = a->second / b->second;
  for (; a != terms_.end(); ++a, ++b) {
    for (std::size_t j = 0; j < nvars_; ++j)
      if (a->first[j] - b->first[j] != shift[j]) return false;
    if (a->second != scale * b->second) return false;
  }
  return true;
}

Rat LaurentPolynomial::evaluate_q(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point length mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (point[j] == 0)
        throw std::invalid_argument("zero coordinate: negative exponents undefined");
      Rat base = point[j];
      long k = e[j];
      if (k < 0) {
        base = 1 / base;
        k = -k;
      }
      for (long i = 0; i < k; ++i) v *= base;
    }
    total += v;
  }
  return total;
}

std::uint64_t LaurentPolynomial::evaluate_fp(const std::vector<std::uint64_t>& point,
                                             std::uint64_t p) const {
  if (point.size() != nvars_) throw std::invalid_argument("point length mismatch");
  std::uint64_t total = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t v = fp_from_rat(c, p);
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      std::uint64_t x = point[j] % p;
      if (x == 0)
        throw std::invalid_argument("zero coordinate: negative exponents undefined");
      long k = e[j];
      if (k < 0) {
        x = fp_inv(x, p);
        k = -k;
      }
      v = fp_mul(v, fp_pow(x, static_cast<std::uint64_t>(k), p), p);
    }
    total = fp_add(total, v, p);
  }
  return total;
}

LaurentPolynomial LaurentPolynomial::restrict_to_curve(const std::vector<long>& z) const {
  if (z.size() != nvars_) throw std::invalid_argument("direction length mismatch");
  LaurentPolynomial g(1);
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (std::size_t j = 0; j < nvars_; ++j) d += e[j] * z[j];
    g.add_term({d}, c);
  }
  return g;
}

LaurentPolynomial LaurentPolynomial::shifted_initial_form() const {
  if (evaluate_q(std::vector<Rat>(nvars_, Rat(1))) != 0)
    throw std::invalid_argument("tangent cone at 1 undefined: f(1) != 0");
  // clear negative exponents (a monomial unit does not change the germ at 1)
  Expo low(nvars_, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t j = 0; j < nvars_; ++j) low[j] = std::min(low[j], e[j]);
  // expand f(1+z) via binomials
  LaurentPolynomial expanded(nvars_);
  for (const auto& [e, c] : terms_) {
    LaurentPolynomial term = constant(nvars_, c);
    for (std::size_t j = 0; j < nvars_; ++j) {
      long k = e[j] - low[j];
      LaurentPolynomial onepz(nvars_);
      onepz.add_term(Expo(nvars_, 0), 1);
      Expo ej(nvars_, 0);
      ej[j] = 1;
      onepz.add_term(ej, 1);
      for (long i = 0; i < k; ++i) term = term * onepz;
    }
    expanded = expanded + term;
  }
  if (expanded.is_zero()) return expanded;
  long min_deg = -1;
  for (const auto& [e, c] : expanded.terms_) {
    long d = 0;
    for (long x : e) d += x;
    if (min_deg < 0 || d < min_deg) min_deg = d;
  }
  LaurentPolynomial init(nvars_);
  for (const auto& [e, c] : expanded.terms_) {
    long d = 0;
    for (long x : e) d += x;
    if (d == min_deg) init.terms_.emplace(e, c);
  }
  return init;
}

UniLaurent gcd_univariate(const UniLaurent& g, const UniLaurent& h) {
  if (g.nvars() != 1 || h.nvars() != 1)
    throw std::invalid_argument("gcd_univariate needs one-variable inputs");
  auto normalize = [](const UniLaurent& f) {
    // shift to an ordinary polynomial with nonzero constant term, monic
    UniLaurent out(1);
    if (f.is_zero()) return out;
    long low = f.terms().begin()->first[0];
    Rat lead = f.terms().rbegin()->second;
    for (const auto& [e, c] : f.terms()) out.add_term({e[0] - low}, c / lead);
    return out;
  };
  UniLaurent a = normalize(g), b = normalize(h);
  while (!b.is_zero()) {
    // remainder of a by b, with deg a >= deg b maintained by swapping
    long da = a.is_zero() ? -1 : a.terms().rbegin()->first[0];
    long db = b.terms().rbegin()->first[0];
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // b is monic after normalization; classic division step
    Rat lead = a.is_zero() ? Rat(0) : a.terms().rbegin()->second;
    if (a.is_zero()) break;
    UniLaurent q(1);
    q.add_term({da - db}, lead / b.terms().rbegin()->second);
    a = a - q * b;
    a = normalize(a);
    b = normalize(b);
  }
  return normalize(a);
}

namespace {

struct Parser {
  std::string s;
  std::size_t pos = 0;
  std::string varname;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long parse_long() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected integer in polynomial");
    return std::stol(s.substr(start, pos - start));
  }
};

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text, std::size_t nvars,
                                   const std::string& varname) {
  Parser p{text, 0, varname};
  struct RawTerm {
    Rat coeff{1};
    std::map<std::size_t, long> powers;  // 0-based variable -> exponent
  };
  std::vector<RawTerm> raw;
  std::size_t max_var = 0;

  p.skip_ws();
  bool first = true;
  while (p.pos < p.s.size()) {
    int sign = 1;
    p.skip_ws();
    if (p.eat('+')) sign = 1;
    else if (p.eat('-')) sign = -1;
    else if (!first) throw std::invalid_argument("expected '+' or '-' in polynomial");
    first = false;
    p.skip_ws();
    if (p.pos >= p.s.size()) throw std::invalid_argument("trailing sign in polynomial");

    RawTerm term;
    term.coeff = sign;
    bool saw_factor = false;
    for (;;) {
      p.skip_ws();
      if (p.pos < p.s.size() &&
          std::isdigit(static_cast<unsigned char>(p.s[p.pos]))) {
        std::size_t start = p.pos;
        while (p.pos < p.s.size() &&
               (std::isdigit(static_cast<unsigned char>(p.s[p.pos])) ||
                p.s[p.pos] == '/'))
          ++p.pos;
        term.coeff *= Rat(p.s.substr(start, p.pos - start));
        saw_factor = true;
      } else if (p.s.compare(p.pos, varname.size(), varname) == 0 &&
                 p.pos + varname.size() < p.s.size() &&
                 std::isdigit(static_cast<unsigned char>(p.s[p.pos + varname.size()]))) {
        p.pos += varname.size();
        std::size_t start = p.pos;
        while (p.pos < p.s.size() &&
               std::isdigit(static_cast<unsigned char>(p.s[p.pos])))
          ++p.pos;
        std::size_t var = std::stoul(p.s.substr(start, p.pos - start));
        if (var == 0) throw std::invalid_argument("variables are numbered from 1");
        long e = 1;
        if (p.eat('^')) e = p.parse_long();
        term.powers[var - 1] += e;
        max_var = std::max(max_var, var);
        saw_factor = true;
      } else {
        break;
      }
      if (!p.eat('*')) break;
    }
    if (!saw_factor)
      throw std::invalid_argument("malformed term in polynomial: " + text);
    raw.push_back(std::move(term));
    p.skip_ws();
  }

  std::size_t n = std::max(nvars, max_var);
  LaurentPolynomial f(n);
  for (const auto& t : raw) {
    LaurentPolynomial::Expo e(n, 0);
    for (const auto& [v, k] : t.powers) e[v] = k;
    f.add_term(e, t.coeff);
  }
  return f;
}

std::string LaurentPolynomial::to_string(const std::string& varname) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](long x) { return x != 0; });
    if (a != 1 || !has_var) {
      out << a.get_str();
      if (has_var) out << "*";
    }
    bool started = false;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (started) out << "*";
      started = true;
      out << varname << (j + 1);
      if (e[j] != 1) out << "^" << e[j];
    }
  }
  return out.str();
}

}  // namespace jumploci
