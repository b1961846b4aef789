#ifndef GLPWB_ORDINAL_HPP
#define GLPWB_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glpwb {

// Thrown by the ordinal/formula/proof parsers. `pos` is a 0-based offset into
// the parsed text.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t p, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// An ordinal below epsilon_0 in Cantor normal form:
//   w^e1 * c1 + ... + w^ek * ck   with e1 > e2 > ... > ek and ci >= 1.
// The empty term list is 0. Exponents are ordinals of the same kind.
class Ordinal {
 public:
  struct Term;  // { exponent, coeff }; defined right below

  Ordinal() = default;  // zero

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_pow(Ordinal exponent, std::uint64_t coeff = 1);
  // Validates the CNF invariants; throws std::invalid_argument on violation.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const;
  // Nonzero and without a finite part.
  bool is_limit() const;
  bool is_nat() const;
  std::uint64_t nat_value() const;  // requires is_nat()

  // Least ordinal notation strictly above *this (adds 1 to the finite part).
  Ordinal succ() const;

  const std::vector<Term>& terms() const;

  std::string str() const;
  // Grammar: o ::= "0" | term ("+" term)* ; term ::= "w" ["^" e] ["*" nat] | nat
  // where e is a nat, a tight w-chain (w, w^w, ...) or "(" o ")".
  static Ordinal parse(std::string_view text);
  // Parses a maximal ordinal starting at `pos`; advances `pos` past it.
  static Ordinal parse_prefix(std::string_view text, std::size_t& pos);

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

inline bool Ordinal::is_zero() const { return terms_.empty(); }
inline const std::vector<Ordinal::Term>& Ordinal::terms() const { return terms_; }

// A finite, strictly increasing set of ordinal notations standing in for the
// "all xi < zeta" quantification in the level recursions. Must contain 0 and
// stay below `cap`.
struct OrdinalGrid {
  std::vector<Ordinal> points;
  Ordinal cap;

  static OrdinalGrid make(std::vector<Ordinal> points, Ordinal cap);
  // Convenience: parses a comma-separated point list ("0,1,2,w"); cap defaults
  // to succ(max point).
  static OrdinalGrid parse(std::string_view spec);

  std::size_t size() const { return points.size(); }
  // Index of an exact grid point, or npos.
  std::size_t index_of(const Ordinal& o) const;
  bool contains(const Ordinal& o) const { return index_of(o) != npos; }
  std::string str() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// True iff the restriction of the order to the grid is transitive, has
// minimum 0, and every non-maximal point has an immediate successor within
// the grid.
bool check_order_requirements(const OrdinalGrid& grid);

}  // namespace glpwb

#endif  // GLPWB_ORDINAL_HPP
