#ifndef GLPWB_FORMULA_HPP
#define GLPWB_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "glpwb/ordinal.hpp"

namespace glpwb {

// Modality index: an ordinal [o], or the black square of the GL# system.
// "#" is the concrete syntax for the black square.
struct ModalLabel {
  bool black_square = false;
  Ordinal level;  // meaningful only when !black_square

  static ModalLabel ord(Ordinal o) { return ModalLabel{false, std::move(o)}; }
  static ModalLabel bsq() { return ModalLabel{true, Ordinal()}; }

  bool operator==(const ModalLabel& other) const {
    return black_square == other.black_square && (black_square || level == other.level);
  }
  std::string str() const { return black_square ? "#" : level.str(); }
};

enum class FKind { Atom, Top, Bot, Not, And, Or, Imp, Iff, Box };

class Formula;
using Fptr = std::shared_ptr<const Formula>;

// Immutable formula node. Diamond is not a constructor: <o>f is sugar for
// ~[o]~f and is expanded by the parser and the dia() builder.
class Formula {
 public:
  FKind kind;
  std::string name;  // Atom
  ModalLabel label;  // Box
  Fptr a, b;         // children (a for unary, a/b for binary)

  static Fptr atom(std::string name);
  static Fptr top();
  static Fptr bot();
  static Fptr lnot(Fptr f);
  static Fptr land(Fptr l, Fptr r);
  static Fptr lor(Fptr l, Fptr r);
  static Fptr imp(Fptr l, Fptr r);
  static Fptr iff(Fptr l, Fptr r);
  static Fptr box(ModalLabel l, Fptr f);
  static Fptr box(const Ordinal& o, Fptr f) { return box(ModalLabel::ord(o), std::move(f)); }
  static Fptr dia(ModalLabel l, Fptr f);  // ~[l]~f
  static Fptr dia(const Ordinal& o, Fptr f) { return dia(ModalLabel::ord(o), std::move(f)); }
};

bool equal(const Fptr& a, const Fptr& b);

std::string print_formula(const Fptr& f);
// Grammar: atoms [a-z][a-z0-9]*, constants T/F, unary ~ [o] <o> (o an ordinal
// or '#'), binary & | -> <-> with conventional precedence, parentheses.
Fptr parse_formula(std::string_view text);

// The set of ordinal modality indices occurring in f (black squares excluded).
std::set<Ordinal> signature(const Fptr& f);

// True iff every box label is Ord(0) or the black square.
bool in_blacksquare_language(const Fptr& f);

// Propositional skeleton: each maximal box-rooted subformula is replaced by a
// placeholder atom "$k"; structurally identical subformulas share the atom.
// boxed[k] is the subformula behind "$k".
struct AbstractResult {
  Fptr skeleton;
  std::vector<Fptr> boxed;
};
AbstractResult abstract_atoms(const Fptr& f);

}  // namespace glpwb

#endif  // GLPWB_FORMULA_HPP
