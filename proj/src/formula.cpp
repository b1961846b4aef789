#include "glpwb/formula.hpp"

#include <cctype>

namespace glpwb {

namespace {
Fptr make(FKind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}
}  // namespace

Fptr Formula::atom(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Atom;
  f->name = std::move(name);
  return f;
}
Fptr Formula::top() { return make(FKind::Top); }
Fptr Formula::bot() { return make(FKind::Bot); }
Fptr Formula::lnot(Fptr x) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Not;
  f->a = std::move(x);
  return f;
}
static Fptr binary(FKind k, Fptr l, Fptr r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->a = std::move(l);
  f->b = std::move(r);
  return f;
}
Fptr Formula::land(Fptr l, Fptr r) { return binary(FKind::And, std::move(l), std::move(r)); }
Fptr Formula::lor(Fptr l, Fptr r) { return binary(FKind::Or, std::move(l), std::move(r)); }
Fptr Formula::imp(Fptr l, Fptr r) { return binary(FKind::Imp, std::move(l), std::move(r)); }
Fptr Formula::iff(Fptr l, Fptr r) { return binary(FKind::Iff, std::move(l), std::move(r)); }
Fptr Formula::box(ModalLabel l, Fptr x) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Box;
  f->label = std::move(l);
  f->a = std::move(x);
  return f;
}
Fptr Formula::dia(ModalLabel l, Fptr x) {
  return lnot(box(std::move(l), lnot(std::move(x))));
}

bool equal(const Fptr& a, const Fptr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Atom: return a->name == b->name;
    case FKind::Top:
    case FKind::Bot: return true;
    case FKind::Not: return equal(a->a, b->a);
    case FKind::Box: return a->label == b->label && equal(a->a, b->a);
    default: return equal(a->a, b->a) && equal(a->b, b->b);
  }
}

namespace {

// Precedence levels for printing: iff 1, imp 2, or 3, and 4, unary 5.
int prec(FKind k) {
  switch (k) {
    case FKind::Iff: return 1;
    case FKind::Imp: return 2;
    case FKind::Or: return 3;
    case FKind::And: return 4;
    default: return 5;
  }
}

void print_rec(const Fptr& f, int outer, std::string& out) {
  const int p = prec(f->kind);
  switch (f->kind) {
    case FKind::Atom: out += f->name; return;
    case FKind::Top: out += "T"; return;
    case FKind::Bot: out += "F"; return;
    case FKind::Not:
      // Print diamond sugar back: ~[l]~x  ==>  <l>x
      if (f->a->kind == FKind::Box && f->a->a->kind == FKind::Not) {
        out += "<" + f->a->label.str() + ">";
        print_rec(f->a->a->a, 5, out);
        return;
      }
      out += "~";
      print_rec(f->a, 5, out);
      return;
    case FKind::Box:
      out += "[" + f->label.str() + "]";
      print_rec(f->a, 5, out);
      return;
    default: {
      const char* op = f->kind == FKind::And   ? " & "
                       : f->kind == FKind::Or  ? " | "
                       : f->kind == FKind::Imp ? " -> "
                                               : " <-> ";
      const bool parens = p < outer;
      if (parens) out += "(";
      // & and | associate to the left; -> and <-> to the right.
      const bool left_assoc = f->kind == FKind::And || f->kind == FKind::Or;
      print_rec(f->a, left_assoc ? p : p + 1, out);
      out += op;
      print_rec(f->b, left_assoc ? p + 1 : p, out);
      if (parens) out += ")";
      return;
    }
  }
}

struct FormulaParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_str(std::string_view s) {
    skip_ws();
    return text.substr(pos, s.size()) == s;
  }
  bool eat_str(std::string_view s) {
    if (peek_str(s)) {
      pos += s.size();
      return true;
    }
    return false;
  }

  ModalLabel label() {
    skip_ws();
    if (pos < text.size() && text[pos] == '#') {
      ++pos;
      return ModalLabel::bsq();
    }
    return ModalLabel::ord(Ordinal::parse_prefix(text, pos));
  }

  Fptr unary() {
    skip_ws();
    if (pos >= text.size()) throw ParseError(pos, "unexpected end of formula");
    const char c = text[pos];
    if (c == '~') {
      ++pos;
      return Formula::lnot(unary());
    }
    if (c == '[') {
      ++pos;
      ModalLabel l = label();
      if (!eat(']')) throw ParseError(pos, "expected ']'");
      return Formula::box(std::move(l), unary());
    }
    if (c == '<') {
      ++pos;
      ModalLabel l = label();
      if (!eat('>')) throw ParseError(pos, "expected '>'");
      return Formula::dia(std::move(l), unary());
    }
    if (c == '(') {
      ++pos;
      Fptr f = iff();
      if (!eat(')')) throw ParseError(pos, "expected ')'");
      return f;
    }
    if (c == 'T') {
      ++pos;
      return Formula::top();
    }
    if (c == 'F') {
      ++pos;
      return Formula::bot();
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos < text.size() &&
             (std::islower(static_cast<unsigned char>(text[pos])) ||
              std::isdigit(static_cast<unsigned char>(text[pos]))))
        name += text[pos++];
      return Formula::atom(std::move(name));
    }
    throw ParseError(pos, std::string("unexpected character '") + c + "'");
  }

  Fptr conj() {
    Fptr f = unary();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '&') {
        ++pos;
        f = Formula::land(std::move(f), unary());
      } else {
        return f;
      }
    }
  }

  Fptr disj() {
    Fptr f = conj();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        f = Formula::lor(std::move(f), conj());
      } else {
        return f;
      }
    }
  }

  Fptr impl() {  // right associative
    Fptr f = disj();
    skip_ws();
    if (peek_str("->")) {
      pos += 2;
      return Formula::imp(std::move(f), impl());
    }
    return f;
  }

  Fptr iff() {  // right associative, loosest
    Fptr f = impl();
    skip_ws();
    if (peek_str("<->")) {
      pos += 3;
      return Formula::iff(std::move(f), iff());
    }
    return f;
  }
};

}  // namespace

std::string print_formula(const Fptr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

Fptr parse_formula(std::string_view text) {
  FormulaParser p{text};
  Fptr f = p.iff();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError(p.pos, "trailing input after formula");
  return f;
}

static void collect_signature(const Fptr& f, std::set<Ordinal>& out) {
  if (!f) return;
  if (f->kind == FKind::Box && !f->label.black_square) out.insert(f->label.level);
  collect_signature(f->a, out);
  collect_signature(f->b, out);
}

std::set<Ordinal> signature(const Fptr& f) {
  std::set<Ordinal> out;
  collect_signature(f, out);
  return out;
}

bool in_blacksquare_language(const Fptr& f) {
  if (!f) return true;
  if (f->kind == FKind::Box && !f->label.black_square && !f->label.level.is_zero()) return false;
  return in_blacksquare_language(f->a) && in_blacksquare_language(f->b);
}

namespace {
Fptr abstract_rec(const Fptr& f, std::vector<Fptr>& boxed) {
  switch (f->kind) {
    case FKind::Box: {
      for (std::size_t i = 0; i < boxed.size(); ++i)
        if (equal(boxed[i], f)) return Formula::atom("$" + std::to_string(i));
      boxed.push_back(f);
      return Formula::atom("$" + std::to_string(boxed.size() - 1));
    }
    case FKind::Atom:
    case FKind::Top:
    case FKind::Bot: return f;
    case FKind::Not: return Formula::lnot(abstract_rec(f->a, boxed));
    default: {
      auto g = std::make_shared<Formula>();
      g->kind = f->kind;
      g->a = abstract_rec(f->a, boxed);
      g->b = abstract_rec(f->b, boxed);
      return g;
    }
  }
}
}  // namespace

AbstractResult abstract_atoms(const Fptr& f) {
  AbstractResult r;
  r.skeleton = abstract_rec(f, r.boxed);
  return r;
}

}  // namespace glpwb
