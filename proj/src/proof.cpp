#include "glpwb/proof.hpp"

#include <map>
#include <sstream>

namespace glpwb {

namespace {

bool eval(const Fptr& f, const std::map<std::string, bool>& env) {
  switch (f->kind) {
    case FKind::Atom: return env.at(f->name);
    case FKind::Top: return true;
    case FKind::Bot: return false;
    case FKind::Not: return !eval(f->a, env);
    case FKind::And: return eval(f->a, env) && eval(f->b, env);
    case FKind::Or: return eval(f->a, env) || eval(f->b, env);
    case FKind::Imp: return !eval(f->a, env) || eval(f->b, env);
    case FKind::Iff: return eval(f->a, env) == eval(f->b, env);
    case FKind::Box: throw std::logic_error("box survived abstraction");
  }
  return false;
}

void collect_atoms(const Fptr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == FKind::Atom) out.insert(f->name);
  collect_atoms(f->a, out);
  collect_atoms(f->b, out);
}

}  // namespace

bool is_tautology(const Fptr& f) {
  AbstractResult abs = abstract_atoms(f);
  std::set<std::string> atom_set;
  collect_atoms(abs.skeleton, atom_set);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  if (atoms.size() > 24)
    throw std::invalid_argument("tautology check limited to 24 distinct atoms, got " +
                                std::to_string(atoms.size()));
  std::map<std::string, bool> env;
  const std::uint64_t total = std::uint64_t{1} << atoms.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t i = 0; i < atoms.size(); ++i) env[atoms[i]] = (bits >> i) & 1;
    if (!eval(abs.skeleton, env)) return false;
  }
  return true;
}

namespace {

// Destructuring helpers. Each returns false when the line does not have the
// required shape.
bool match_imp(const Fptr& f, Fptr& l, Fptr& r) {
  if (f->kind != FKind::Imp) return false;
  l = f->a;
  r = f->b;
  return true;
}
bool match_box(const Fptr& f, const ModalLabel& lab, Fptr& body) {
  if (f->kind != FKind::Box || !(f->label == lab)) return false;
  body = f->a;
  return true;
}
// <lab>x is ~[lab]~x.
bool match_dia(const Fptr& f, const ModalLabel& lab, Fptr& body) {
  if (f->kind != FKind::Not) return false;
  Fptr inner;
  if (!match_box(f->a, lab, inner)) return false;
  if (inner->kind != FKind::Not) return false;
  body = inner->a;
  return true;
}

bool match_ax_k(const Fptr& f, const ModalLabel& l) {
  // [l](a->b) -> ([l]a -> [l]b)
  Fptr lhs, rhs, boxed, a, b, r1, r2, a2, b2;
  return match_imp(f, lhs, rhs) && match_box(lhs, l, boxed) && match_imp(boxed, a, b) &&
         match_imp(rhs, r1, r2) && match_box(r1, l, a2) && match_box(r2, l, b2) &&
         equal(a, a2) && equal(b, b2);
}

bool match_ax_4(const Fptr& f, const ModalLabel& l) {
  // [l]a -> [l][l]a
  Fptr lhs, rhs, a, mid, a2;
  return match_imp(f, lhs, rhs) && match_box(lhs, l, a) && match_box(rhs, l, mid) &&
         match_box(mid, l, a2) && equal(a, a2);
}

bool match_ax_lob(const Fptr& f, const ModalLabel& l) {
  // [l]([l]a -> a) -> [l]a
  Fptr lhs, rhs, body, ba, a, a2, a3;
  return match_imp(f, lhs, rhs) && match_box(lhs, l, body) && match_imp(body, ba, a) &&
         match_box(ba, l, a2) && equal(a, a2) && match_box(rhs, l, a3) && equal(a, a3);
}

bool match_ax_diamono(const Fptr& f, const Ordinal& xi, const Ordinal& zeta) {
  // <zeta>a -> <xi>a
  Fptr lhs, rhs, a, a2;
  return match_imp(f, lhs, rhs) && match_dia(lhs, ModalLabel::ord(zeta), a) &&
         match_dia(rhs, ModalLabel::ord(xi), a2) && equal(a, a2);
}

bool match_ax_introspect(const Fptr& f, const Ordinal& xi, const Ordinal& zeta) {
  // <xi>a -> [zeta]<xi>a
  Fptr lhs, rhs, a, inner;
  return match_imp(f, lhs, rhs) && match_dia(lhs, ModalLabel::ord(xi), a) &&
         match_box(rhs, ModalLabel::ord(zeta), inner) && equal(inner, lhs);
}

bool match_bsq1(const Fptr& f) {
  // [0]a -> [#]a
  Fptr lhs, rhs, a, a2;
  return match_imp(f, lhs, rhs) && match_box(lhs, ModalLabel::ord(Ordinal()), a) &&
         match_box(rhs, ModalLabel::bsq(), a2) && equal(a, a2);
}

// Collects every modality index of the formula; returns false on a label
// outside the system's language.
bool labels_ok(const Fptr& f, const AxiomSystem& sys, std::string& why) {
  if (!f) return true;
  if (f->kind == FKind::Box) {
    if (sys.black_square) {
      if (!f->label.black_square && !f->label.level.is_zero()) {
        why = "GL# formulas may only use [0] and [#], found [" + f->label.str() + "]";
        return false;
      }
    } else {
      if (f->label.black_square) {
        why = "black square label in a GLP proof";
        return false;
      }
      if (!(f->label.level < sys.cap)) {
        why = "label " + f->label.str() + " not below the system cap " + sys.cap.str();
        return false;
      }
    }
  }
  return labels_ok(f->a, sys, why) && labels_ok(f->b, sys, why);
}

struct LineChecker {
  const Proof& proof;
  std::size_t idx;  // 0-based
  std::string reason;

  const Fptr& cur() const { return proof.lines[idx].formula; }

  bool fail(std::string why) {
    reason = std::move(why);
    return false;
  }

  bool ordinal_label_ok(const Ordinal& o) {
    if (proof.system.black_square) {
      if (!o.is_zero()) return fail("GL# admits ordinal axioms only at level 0");
      return true;
    }
    if (!(o < proof.system.cap))
      return fail("axiom label " + o.str() + " not below cap " + proof.system.cap.str());
    return true;
  }

  bool earlier(std::size_t ref, Fptr& out) {
    if (ref == 0 || ref > idx) {
      fail("reference to line " + std::to_string(ref) + " is not an earlier line");
      return false;
    }
    out = proof.lines[ref - 1].formula;
    return true;
  }

  bool operator()(const JTaut&) {
    try {
      if (!is_tautology(cur())) return fail("not a tautology instance");
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
    return true;
  }
  bool operator()(const JAxK& j) {
    if (!ordinal_label_ok(j.xi)) return false;
    if (!match_ax_k(cur(), ModalLabel::ord(j.xi))) return fail("does not match the K schema");
    return true;
  }
  bool operator()(const JAx4& j) {
    if (!ordinal_label_ok(j.xi)) return false;
    if (!match_ax_4(cur(), ModalLabel::ord(j.xi)))
      return fail("does not match the transitivity schema");
    return true;
  }
  bool operator()(const JAxLob& j) {
    if (!ordinal_label_ok(j.xi)) return false;
    if (!match_ax_lob(cur(), ModalLabel::ord(j.xi)))
      return fail("does not match the Loeb schema");
    return true;
  }
  bool operator()(const JAxDiaMono& j) {
    if (proof.system.black_square) return fail("diamono is not a GL# axiom");
    if (!(j.xi < j.zeta))
      return fail("diamono requires " + j.xi.str() + " < " + j.zeta.str());
    if (!ordinal_label_ok(j.zeta) || !ordinal_label_ok(j.xi)) return false;
    if (!match_ax_diamono(cur(), j.xi, j.zeta))
      return fail("does not match the diamond monotonicity schema");
    return true;
  }
  bool operator()(const JAxIntrospect& j) {
    if (proof.system.black_square) return fail("intro is not a GL# axiom");
    if (!(j.xi < j.zeta))
      return fail("intro requires " + j.xi.str() + " < " + j.zeta.str());
    if (!ordinal_label_ok(j.zeta) || !ordinal_label_ok(j.xi)) return false;
    if (!match_ax_introspect(cur(), j.xi, j.zeta))
      return fail("does not match the introspection schema");
    return true;
  }
  bool operator()(const JBsq1&) {
    if (!proof.system.black_square) return fail("bsq1 outside GL#");
    if (!match_bsq1(cur())) return fail("does not match [0]a -> [#]a");
    return true;
  }
  bool operator()(const JBsq2&) {
    if (!proof.system.black_square) return fail("bsq2 outside GL#");
    if (!match_ax_k(cur(), ModalLabel::bsq())) return fail("does not match the # K schema");
    return true;
  }
  bool operator()(const JBsq3&) {
    if (!proof.system.black_square) return fail("bsq3 outside GL#");
    if (!match_ax_4(cur(), ModalLabel::bsq()))
      return fail("does not match the # transitivity schema");
    return true;
  }
  bool operator()(const JMp& j) {
    Fptr maj, min_;
    if (!earlier(j.i, maj) || !earlier(j.j, min_)) return false;
    Fptr a, b;
    if (!match_imp(maj, a, b))
      return fail("line " + std::to_string(j.i) + " is not an implication");
    if (!equal(a, min_))
      return fail("line " + std::to_string(j.j) + " does not match the antecedent");
    if (!equal(b, cur())) return fail("line is not the consequent of the implication");
    return true;
  }
  bool operator()(const JNec& j) {
    if (proof.system.black_square) {
      if (j.label.black_square || !j.label.level.is_zero())
        return fail("GL# necessitation applies to [0] only");
    } else {
      if (j.label.black_square) return fail("black square label in a GLP proof");
      if (!(j.label.level < proof.system.cap))
        return fail("necessitation label " + j.label.str() + " not below cap");
    }
    Fptr prev, body;
    if (!earlier(j.i, prev)) return false;
    if (!match_box(cur(), j.label, body))
      return fail("line is not a [" + j.label.str() + "]-boxed formula");
    if (!equal(body, prev))
      return fail("boxed body differs from line " + std::to_string(j.i));
    return true;
  }
};

}  // namespace

std::optional<ProofError> check_proof(const Proof& p) {
  if (p.lines.empty()) return ProofError{0, "empty proof"};
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    std::string why;
    if (!labels_ok(p.lines[i].formula, p.system, why)) return ProofError{i + 1, why};
    LineChecker ck{p, i, {}};
    if (!std::visit(ck, p.lines[i].just)) return ProofError{i + 1, ck.reason};
  }
  return std::nullopt;
}

bool conservativity_scan(const Proof& p, const Ordinal& lambda) {
  if (p.system.black_square)
    throw std::invalid_argument("conservativity scan applies to GLP proofs only");
  for (const ProofLine& line : p.lines)
    for (const Ordinal& o : signature(line.formula))
      if (!(o < lambda)) return false;
  return true;
}

std::string justification_str(const Justification& j) {
  struct V {
    std::string operator()(const JTaut&) { return "taut"; }
    std::string operator()(const JAxK& a) { return "K " + a.xi.str(); }
    std::string operator()(const JAx4& a) { return "4 " + a.xi.str(); }
    std::string operator()(const JAxLob& a) { return "lob " + a.xi.str(); }
    std::string operator()(const JAxDiaMono& a) {
      return "diamono " + a.xi.str() + " " + a.zeta.str();
    }
    std::string operator()(const JAxIntrospect& a) {
      return "intro " + a.xi.str() + " " + a.zeta.str();
    }
    std::string operator()(const JBsq1&) { return "bsq1"; }
    std::string operator()(const JBsq2&) { return "bsq2"; }
    std::string operator()(const JBsq3&) { return "bsq3"; }
    std::string operator()(const JMp& a) {
      return "mp " + std::to_string(a.i) + " " + std::to_string(a.j);
    }
    std::string operator()(const JNec& a) {
      return "nec " + a.label.str() + " " + std::to_string(a.i);
    }
  };
  return std::visit(V{}, j);
}

std::string write_proof(const Proof& p) {
  std::string out;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    out += std::to_string(i + 1) + ": " + print_formula(p.lines[i].formula) + " ; " +
           justification_str(p.lines[i].just) + "\n";
  }
  return out;
}

namespace {

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Ordinal tok_ordinal(const std::vector<std::string>& toks, std::size_t k, std::size_t line_pos) {
  if (k >= toks.size()) throw ParseError(line_pos, "missing ordinal in justification");
  return Ordinal::parse(toks[k]);
}

std::size_t tok_index(const std::vector<std::string>& toks, std::size_t k, std::size_t line_pos) {
  if (k >= toks.size()) throw ParseError(line_pos, "missing line reference");
  try {
    return static_cast<std::size_t>(std::stoull(toks[k]));
  } catch (const std::exception&) {
    throw ParseError(line_pos, "bad line reference '" + toks[k] + "'");
  }
}

Justification parse_justification(std::string_view text, std::size_t line_pos, bool& saw_bsq) {
  const std::vector<std::string> toks = split_tokens(text);
  if (toks.empty()) throw ParseError(line_pos, "missing justification");
  const std::string& op = toks[0];
  if (op == "taut") return JTaut{};
  if (op == "K") return JAxK{tok_ordinal(toks, 1, line_pos)};
  if (op == "4") return JAx4{tok_ordinal(toks, 1, line_pos)};
  if (op == "lob") return JAxLob{tok_ordinal(toks, 1, line_pos)};
  if (op == "diamono")
    return JAxDiaMono{tok_ordinal(toks, 1, line_pos), tok_ordinal(toks, 2, line_pos)};
  if (op == "intro")
    return JAxIntrospect{tok_ordinal(toks, 1, line_pos), tok_ordinal(toks, 2, line_pos)};
  if (op == "bsq1") { saw_bsq = true; return JBsq1{}; }
  if (op == "bsq2") { saw_bsq = true; return JBsq2{}; }
  if (op == "bsq3") { saw_bsq = true; return JBsq3{}; }
  if (op == "mp") return JMp{tok_index(toks, 1, line_pos), tok_index(toks, 2, line_pos)};
  if (op == "nec") {
    if (toks.size() < 3) throw ParseError(line_pos, "nec takes a label and a line");
    ModalLabel l = toks[1] == "#" ? ModalLabel::bsq() : ModalLabel::ord(Ordinal::parse(toks[1]));
    if (l.black_square) saw_bsq = true;
    return JNec{std::move(l), tok_index(toks, 2, line_pos)};
  }
  throw ParseError(line_pos, "unknown justification '" + op + "'");
}

bool mentions_bsq(const Fptr& f) {
  if (!f) return false;
  if (f->kind == FKind::Box && f->label.black_square) return true;
  return mentions_bsq(f->a) || mentions_bsq(f->b);
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Proof p;
  bool saw_bsq = false;
  Ordinal max_label;
  std::size_t line_start = 0;
  std::size_t expected = 1;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(line_start, nl - line_start);
    const std::size_t pos0 = line_start;
    line_start = nl + 1;
    // Trim and skip comments/blank lines.
    std::size_t b = 0, e = line.size();
    while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    line = line.substr(b, e - b);
    if (line.empty() || line[0] == '#') continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(pos0, "expected 'n: formula ; just'");
    std::size_t idx = 0;
    try {
      idx = static_cast<std::size_t>(std::stoull(std::string(line.substr(0, colon))));
    } catch (const std::exception&) {
      throw ParseError(pos0, "bad line number");
    }
    if (idx != expected)
      throw ParseError(pos0, "expected line number " + std::to_string(expected));
    ++expected;

    const std::size_t semi = line.rfind(';');
    if (semi == std::string_view::npos || semi < colon)
      throw ParseError(pos0, "missing ';' before justification");
    Fptr f = parse_formula(line.substr(colon + 1, semi - colon - 1));
    Justification j = parse_justification(line.substr(semi + 1), pos0, saw_bsq);
    if (mentions_bsq(f)) saw_bsq = true;
    for (const Ordinal& o : signature(f))
      if (max_label < o) max_label = o;
    p.lines.push_back(ProofLine{std::move(f), std::move(j)});
  }
  if (p.lines.empty()) throw ParseError(0, "empty proof");
  p.system = saw_bsq ? AxiomSystem::gl_bsq() : AxiomSystem::glp(max_label.succ());
  return p;
}

}  // namespace glpwb
