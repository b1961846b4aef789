#include "glpwb/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace glpwb {

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(Term{Ordinal(), n});
  return o;
}

Ordinal Ordinal::omega() { return omega_pow(nat(1)); }

Ordinal Ordinal::omega_pow(Ordinal exponent, std::uint64_t coeff) {
  if (coeff == 0) throw std::invalid_argument("ordinal coefficient must be positive");
  Ordinal o;
  o.terms_.push_back(Term{std::move(exponent), coeff});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) throw std::invalid_argument("ordinal coefficient must be positive");
    if (i + 1 < terms.size() && !(terms[i + 1].exponent < terms[i].exponent))
      throw std::invalid_argument("ordinal exponents must be strictly decreasing");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

bool Ordinal::is_nat() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::nat_value() const {
  if (!is_nat()) throw std::invalid_argument("not a finite ordinal: " + str());
  return terms_.empty() ? 0 : terms_[0].coeff;
}

Ordinal Ordinal::succ() const {
  Ordinal o = *this;
  if (!o.terms_.empty() && o.terms_.back().exponent.is_zero())
    o.terms_.back().coeff += 1;
  else
    o.terms_.push_back(Term{Ordinal(), 1});
  return o;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.terms_[i].exponent <=> b.terms_[i].exponent;
    if (c != 0) return c;
    auto d = a.terms_[i].coeff <=> b.terms_[i].coeff;
    if (d != 0) return d;
  }
  return a.terms_.size() <=> b.terms_.size();
}

namespace {

// Bare exponents are those the grammar can re-read without parentheses.
bool needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('*') != std::string::npos;
}

std::uint64_t parse_nat(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError(pos, "expected a number");
  std::uint64_t v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    const std::uint64_t d = static_cast<std::uint64_t>(text[pos] - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
      throw ParseError(pos, "number too large");
    v = v * 10 + d;
    ++pos;
  }
  return v;
}

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

// nat | "w" ["^" tight] -- no sums, coefficients or parens.
Ordinal parse_tight_exponent(std::string_view text, std::size_t& pos) {
  if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    return Ordinal::nat(parse_nat(text, pos));
  if (pos < text.size() && text[pos] == 'w') {
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        Ordinal e = Ordinal::parse_prefix(text, pos);
        if (pos >= text.size() || text[pos] != ')') throw ParseError(pos, "expected ')'");
        ++pos;
        return Ordinal::omega_pow(std::move(e));
      }
      return Ordinal::omega_pow(parse_tight_exponent(text, pos));
    }
    return Ordinal::omega();
  }
  throw ParseError(pos, "expected an ordinal exponent");
}

Ordinal::Term parse_term(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == 'w') {
    ++pos;
    Ordinal e = Ordinal::nat(1);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        e = Ordinal::parse_prefix(text, pos);
        skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != ')') throw ParseError(pos, "expected ')'");
        ++pos;
      } else {
        e = parse_tight_exponent(text, pos);
      }
    }
    std::uint64_t c = 1;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws(text, pos);
      c = parse_nat(text, pos);
      if (c == 0) throw ParseError(pos, "coefficient must be positive");
    }
    return Ordinal::Term{std::move(e), c};
  }
  const std::size_t at = pos;
  const std::uint64_t n = parse_nat(text, pos);
  if (n == 0) throw ParseError(at, "zero is not a term");
  return Ordinal::Term{Ordinal(), n};
}

}  // namespace

Ordinal Ordinal::parse_prefix(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(pos, "malformed number");
    return Ordinal();
  }
  std::vector<Term> terms;
  terms.push_back(parse_term(text, pos));
  skip_ws(text, pos);
  while (pos < text.size() && text[pos] == '+') {
    ++pos;
    const std::size_t at = pos;
    Term t = parse_term(text, pos);
    if (!(t.exponent < terms.back().exponent))
      throw ParseError(at, "exponents must be strictly decreasing");
    terms.push_back(std::move(t));
    skip_ws(text, pos);
  }
  return from_terms(std::move(terms));
}

Ordinal Ordinal::parse(std::string_view text) {
  std::size_t pos = 0;
  Ordinal o = parse_prefix(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError(pos, "trailing input after ordinal");
  return o;
}

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += "+";
    const Term& t = terms_[i];
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exponent == nat(1))) {
      const std::string e = t.exponent.str();
      out += "^";
      out += needs_parens(e) ? "(" + e + ")" : e;
    }
    if (t.coeff > 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

OrdinalGrid OrdinalGrid::make(std::vector<Ordinal> points, Ordinal cap) {
  OrdinalGrid g;
  g.points = std::move(points);
  g.cap = std::move(cap);
  std::sort(g.points.begin(), g.points.end());
  g.points.erase(std::unique(g.points.begin(), g.points.end()), g.points.end());
  return g;
}

OrdinalGrid OrdinalGrid::parse(std::string_view spec) {
  std::vector<Ordinal> pts;
  std::size_t pos = 0;
  while (true) {
    pts.push_back(Ordinal::parse_prefix(spec, pos));
    while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == '\t')) ++pos;
    if (pos == spec.size()) break;
    if (spec[pos] != ',') throw ParseError(pos, "expected ',' in grid spec");
    ++pos;
  }
  Ordinal cap = pts.empty() ? Ordinal::nat(1) : std::max_element(pts.begin(), pts.end())->succ();
  return make(std::move(pts), std::move(cap));
}

std::size_t OrdinalGrid::index_of(const Ordinal& o) const {
  auto it = std::lower_bound(points.begin(), points.end(), o);
  if (it != points.end() && *it == o) return static_cast<std::size_t>(it - points.begin());
  return npos;
}

std::string OrdinalGrid::str() const {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ",";
    out += points[i].str();
  }
  return out;
}

bool check_order_requirements(const OrdinalGrid& grid) {
  if (grid.points.empty()) return false;
  // Minimum must be the notation 0.
  if (!grid.points.front().is_zero()) return false;
  // All points below the cap.
  for (const Ordinal& p : grid.points)
    if (!(p < grid.cap)) return false;
  // Transitivity of the restriction, checked pairwise the pedestrian way.
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (grid.points[i] < grid.points[j] && grid.points[j] < grid.points[k] &&
            !(grid.points[i] < grid.points[k]))
          return false;
  // Right-discreteness: every non-maximal point has an immediate successor
  // inside the grid (the least grid point above it).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (!(grid.points[i] < grid.points[j])) continue;
      bool least = true;
      for (std::size_t k = 0; k < n; ++k)
        if (grid.points[i] < grid.points[k] && grid.points[k] < grid.points[j]) least = false;
      found = least;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace glpwb
