#include <doctest.h>

#include "glpwb/proof.hpp"

using namespace glpwb;

namespace {
Fptr P(const char* s) { return parse_formula(s); }
}

TEST_CASE("tautology verdicts") {
  CHECK(is_tautology(P("[1]p -> [1]p")));
  CHECK_FALSE(is_tautology(P("[1]p -> [2]p")));
  CHECK(is_tautology(P("((p->q)->p)->p")));  // Peirce
  CHECK(is_tautology(P("T")));
  CHECK_FALSE(is_tautology(P("F")));
  CHECK(is_tautology(P("~F")));
  CHECK(is_tautology(P("p | ~p")));
  CHECK(is_tautology(P("(p <-> q) -> (q <-> p)")));
  CHECK_FALSE(is_tautology(P("[0](p -> p)")));  // boxed, abstracts to an atom
}

TEST_CASE("tautology check reports the atom limit") {
  Fptr f = Formula::atom("a0");
  for (int i = 1; i < 26; ++i) f = Formula::lor(f, Formula::atom("a" + std::to_string(i)));
  CHECK_THROWS_AS(is_tautology(f), std::invalid_argument);
}

TEST_CASE("necessitation discipline") {
  // A boxed tautology is not itself a tautology instance; it needs nec.
  Proof bad;
  bad.system = AxiomSystem::glp(Ordinal::nat(1));
  bad.lines.push_back({P("[0](p->p)"), JTaut{}});
  const auto err = check_proof(bad);
  REQUIRE(err);
  CHECK(err->line == 1);

  Proof good;
  good.system = AxiomSystem::glp(Ordinal::nat(1));
  good.lines.push_back({P("p->p"), JTaut{}});
  good.lines.push_back({P("[0](p->p)"), JNec{ModalLabel::ord(Ordinal()), 1}});
  CHECK_FALSE(check_proof(good));
}

TEST_CASE("axiom label order is enforced") {
  Proof p;
  p.system = AxiomSystem::glp(Ordinal::nat(3));
  p.lines.push_back(
      {P("<2>q -> [1]<2>q"), JAxIntrospect{Ordinal::nat(2), Ordinal::nat(1)}});
  const auto err = check_proof(p);
  REQUIRE(err);
  CHECK(err->line == 1);
  CHECK(err->reason.find("requires") != std::string::npos);

  Proof ok;
  ok.system = AxiomSystem::glp(Ordinal::nat(3));
  ok.lines.push_back(
      {P("<1>q -> [2]<1>q"), JAxIntrospect{Ordinal::nat(1), Ordinal::nat(2)}});
  CHECK_FALSE(check_proof(ok));
}

TEST_CASE("axiom pattern matching") {
  Proof p;
  p.system = AxiomSystem::glp(Ordinal::nat(3));
  p.lines.push_back({P("[1](p->q) -> ([1]p -> [1]q)"), JAxK{Ordinal::nat(1)}});
  p.lines.push_back({P("[2]p -> [2][2]p"), JAx4{Ordinal::nat(2)}});
  p.lines.push_back({P("[0]([0]p->p) -> [0]p"), JAxLob{Ordinal()}});
  p.lines.push_back({P("<2>r -> <1>r"), JAxDiaMono{Ordinal::nat(1), Ordinal::nat(2)}});
  CHECK_FALSE(check_proof(p));

  // Wrong label on a matching shape.
  Proof q;
  q.system = AxiomSystem::glp(Ordinal::nat(3));
  q.lines.push_back({P("[1](p->q) -> ([1]p -> [1]q)"), JAxK{Ordinal::nat(2)}});
  CHECK(check_proof(q));
}

TEST_CASE("modus ponens plumbing") {
  Proof p;
  p.system = AxiomSystem::glp(Ordinal::nat(1));
  p.lines.push_back({P("p -> (p | q)"), JTaut{}});
  p.lines.push_back({P("(p | q) -> (p | q | r)"), JTaut{}});
  p.lines.push_back({P("p -> (p | q | r)"), JMp{1, 2}});  // wrong: 1 is not maj of 3
  auto err = check_proof(p);
  REQUIRE(err);
  CHECK(err->line == 3);

  Proof fwd;
  fwd.system = AxiomSystem::glp(Ordinal::nat(1));
  fwd.lines.push_back({P("p -> p | q"), JTaut{}});
  fwd.lines.push_back({P("(p -> p | q) -> (~q -> (p -> p | q))"), JTaut{}});
  fwd.lines.push_back({P("~q -> (p -> p | q)"), JMp{2, 1}});
  CHECK_FALSE(check_proof(fwd));

  Proof badidx;
  badidx.system = AxiomSystem::glp(Ordinal::nat(1));
  badidx.lines.push_back({P("p"), JMp{1, 1}});  // self-reference
  err = check_proof(badidx);
  REQUIRE(err);
  CHECK(err->reason.find("earlier") != std::string::npos);
}

TEST_CASE("single non-tautology line never checks") {
  Proof p;
  p.system = AxiomSystem::glp(Ordinal::nat(2));
  p.lines.push_back({P("[1]p -> [1]q"), JTaut{}});
  CHECK(check_proof(p));
}

TEST_CASE("black square system separation") {
  Proof p;
  p.system = AxiomSystem::gl_bsq();
  p.lines.push_back({P("[0]p -> [#]p"), JBsq1{}});
  p.lines.push_back({P("[#](p->q) -> ([#]p -> [#]q)"), JBsq2{}});
  p.lines.push_back({P("[#]p -> [#][#]p"), JBsq3{}});
  CHECK_FALSE(check_proof(p));

  Proof glp;
  glp.system = AxiomSystem::glp(Ordinal::nat(2));
  glp.lines.push_back({P("[0]p -> [#]p"), JBsq1{}});
  CHECK(check_proof(glp));  // bsq1 outside GL#, plus a bad label

  Proof label;
  label.system = AxiomSystem::gl_bsq();
  label.lines.push_back({P("[1]p -> [1]p"), JTaut{}});
  const auto err = check_proof(label);
  REQUIRE(err);  // [1] is not in the GL# language
}

TEST_CASE("proof file format round trip") {
  const char* text =
      "# a comment\n"
      "1: p -> p ; taut\n"
      "2: [0](p -> p) ; nec 0 1\n";
  Proof p = parse_proof(text);
  REQUIRE(p.lines.size() == 2);
  CHECK_FALSE(p.system.black_square);
  CHECK_FALSE(check_proof(p));
  Proof again = parse_proof(write_proof(p));
  CHECK(again.lines.size() == 2);
  CHECK_FALSE(check_proof(again));
  CHECK(equal(again.conclusion(), p.conclusion()));

  CHECK_THROWS_AS(parse_proof(""), ParseError);
  CHECK_THROWS_AS(parse_proof("2: p ; taut"), ParseError);       // bad numbering
  CHECK_THROWS_AS(parse_proof("1: p -> p taut"), ParseError);    // missing ';'
  CHECK_THROWS_AS(parse_proof("1: p ; nonsense"), ParseError);
}

TEST_CASE("conservativity scan") {
  Proof p;
  p.system = AxiomSystem::glp(Ordinal::nat(3));
  p.lines.push_back({P("[2]p -> [2]p"), JTaut{}});
  CHECK(conservativity_scan(p, Ordinal::nat(3)));
  CHECK_FALSE(conservativity_scan(p, Ordinal::nat(2)));

  Proof bs;
  bs.system = AxiomSystem::gl_bsq();
  bs.lines.push_back({P("p->p"), JTaut{}});
  CHECK_THROWS_AS(conservativity_scan(bs, Ordinal::nat(1)), std::invalid_argument);
}
