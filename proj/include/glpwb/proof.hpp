#ifndef GLPWB_PROOF_HPP
#define GLPWB_PROOF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "glpwb/formula.hpp"

namespace glpwb {

// GLP(cap): ordinal modalities strictly below cap.
// GLBlackSquare: GL for [0] plus the # operator with axioms bsq1..bsq3.
struct AxiomSystem {
  bool black_square = false;
  Ordinal cap;  // GLP only

  static AxiomSystem glp(Ordinal cap) { return AxiomSystem{false, std::move(cap)}; }
  static AxiomSystem gl_bsq() { return AxiomSystem{true, Ordinal()}; }
};

// Line justifications. Axiom parameters are explicit so checking is pattern
// matching, never search. Line references are 1-based.
struct JTaut {};
struct JAxK { Ordinal xi; };                 // [xi](a->b) -> ([xi]a -> [xi]b)
struct JAx4 { Ordinal xi; };                 // [xi]a -> [xi][xi]a
struct JAxLob { Ordinal xi; };               // [xi]([xi]a->a) -> [xi]a
struct JAxDiaMono { Ordinal xi, zeta; };     // <zeta>a -> <xi>a,      xi < zeta
struct JAxIntrospect { Ordinal xi, zeta; };  // <xi>a -> [zeta]<xi>a,  xi < zeta
struct JBsq1 {};                             // [0]a -> [#]a
struct JBsq2 {};                             // [#](a->b) -> ([#]a -> [#]b)
struct JBsq3 {};                             // [#]a -> [#][#]a
struct JMp { std::size_t i, j; };            // line i: a->b, line j: a
struct JNec { ModalLabel label; std::size_t i; };

using Justification = std::variant<JTaut, JAxK, JAx4, JAxLob, JAxDiaMono, JAxIntrospect,
                                   JBsq1, JBsq2, JBsq3, JMp, JNec>;

std::string justification_str(const Justification& j);

struct ProofLine {
  Fptr formula;
  Justification just;
};

struct Proof {
  AxiomSystem system;
  std::vector<ProofLine> lines;

  const Fptr& conclusion() const { return lines.back().formula; }
};

// Truth-table verdict on the propositional skeleton after abstract_atoms.
// Throws std::invalid_argument when the skeleton has more than 24 atoms
// (the formula must be split first).
bool is_tautology(const Fptr& f);

struct ProofError {
  std::size_t line;  // 1-based
  std::string reason;
};

// nullopt = every line checks.
std::optional<ProofError> check_proof(const Proof& p);

// True iff every modality index in the proof is strictly below lambda.
// Only meaningful for GLP proofs; throws std::invalid_argument for GL#.
bool conservativity_scan(const Proof& p, const Ordinal& lambda);

// Line-oriented text format:  `n: <formula> ; <justification>` with
// justifications  taut | K o | 4 o | lob o | diamono o1 o2 | intro o1 o2 |
// bsq1 | bsq2 | bsq3 | mp i j | nec o i.  Lines starting with '#' and blank
// lines are ignored. The system is inferred: black-square syntax anywhere
// selects GLBlackSquare, otherwise GLP capped just above the largest index.
std::string write_proof(const Proof& p);
Proof parse_proof(std::string_view text);

}  // namespace glpwb

#endif  // GLPWB_PROOF_HPP
