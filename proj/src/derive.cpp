#include "glpwb/derive.hpp"

#include <stdexcept>

namespace glpwb {

namespace {

using F = Formula;

// Emits lines into a Proof, computing derived formulas as it goes. Every
// emitted line is shaped so that check_proof accepts it; chain() verifies its
// assembled tautology eagerly so constructor bugs surface at build time.
class Builder {
 public:
  explicit Builder(AxiomSystem sys) { proof_.system = std::move(sys); }

  const Fptr& fml(std::size_t i) const { return proof_.lines[i - 1].formula; }

  std::size_t add(Fptr f, Justification j) {
    proof_.lines.push_back(ProofLine{std::move(f), std::move(j)});
    return proof_.lines.size();
  }

  std::size_t taut(Fptr f) {
    if (!is_tautology(f)) throw std::logic_error("builder: not a tautology: " + print_formula(f));
    return add(std::move(f), JTaut{});
  }

  std::size_t mp(std::size_t i, std::size_t j) {
    const Fptr& maj = fml(i);
    if (maj->kind != FKind::Imp || !equal(maj->a, fml(j)))
      throw std::logic_error("builder: modus ponens mismatch");
    return add(maj->b, JMp{i, j});
  }

  std::size_t nec(ModalLabel l, std::size_t i) {
    return add(F::box(l, fml(i)), JNec{l, i});
  }

  std::size_t ax_k(ModalLabel l, Fptr a, Fptr b) {
    Fptr f = F::imp(F::box(l, F::imp(a, b)), F::imp(F::box(l, a), F::box(l, b)));
    if (l.black_square) return add(std::move(f), JBsq2{});
    return add(std::move(f), JAxK{l.level});
  }

  std::size_t ax_4(ModalLabel l, Fptr a) {
    Fptr f = F::imp(F::box(l, a), F::box(l, F::box(l, a)));
    if (l.black_square) return add(std::move(f), JBsq3{});
    return add(std::move(f), JAx4{l.level});
  }

  std::size_t ax_lob(const Ordinal& xi, Fptr a) {
    ModalLabel l = ModalLabel::ord(xi);
    Fptr f = F::imp(F::box(l, F::imp(F::box(l, a), a)), F::box(l, a));
    return add(std::move(f), JAxLob{xi});
  }

  std::size_t ax_bsq1(Fptr a) {
    Fptr f = F::imp(F::box(Ordinal(), a), F::box(ModalLabel::bsq(), a));
    return add(std::move(f), JBsq1{});
  }

  std::size_t ax_diamono(const Ordinal& xi, const Ordinal& zeta, Fptr a) {
    Fptr f = F::imp(F::dia(zeta, a), F::dia(xi, a));
    return add(std::move(f), JAxDiaMono{xi, zeta});
  }

  std::size_t ax_intro(const Ordinal& xi, const Ordinal& zeta, Fptr a) {
    Fptr d = F::dia(xi, std::move(a));
    Fptr f = F::imp(d, F::box(zeta, d));
    return add(std::move(f), JAxIntrospect{xi, zeta});
  }

  // Line i holds a->b; derives [l]a -> [l]b.
  std::size_t box_imp(ModalLabel l, std::size_t i) {
    const Fptr f = fml(i);
    if (f->kind != FKind::Imp) throw std::logic_error("builder: box_imp needs an implication");
    const std::size_t n = nec(l, i);
    const std::size_t k = ax_k(l, f->a, f->b);
    return mp(k, n);
  }

  // a->b is a tautology; derives [l]a -> [l]b.
  std::size_t box_imp_taut(ModalLabel l, Fptr a, Fptr b) {
    return box_imp(l, taut(F::imp(std::move(a), std::move(b))));
  }

  // The target follows propositionally from the given lines: emits the curried
  // tautology and discharges it with modus ponens.
  std::size_t chain(Fptr target, const std::vector<std::size_t>& lines) {
    Fptr big = target;
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) big = F::imp(fml(*it), big);
    std::size_t cur = taut(std::move(big));
    for (std::size_t ln : lines) cur = mp(cur, ln);
    if (!equal(fml(cur), target)) throw std::logic_error("builder: chain drifted off target");
    return cur;
  }

  // [xi]f -> [zeta]f for xi < zeta (double-negation shuffle through diamono).
  std::size_t mono(const Ordinal& xi, const Ordinal& zeta, const Fptr& f) {
    Fptr nnf = F::lnot(F::lnot(f));
    const std::size_t u1 = box_imp_taut(ModalLabel::ord(xi), f, nnf);    // [xi]f -> [xi]~~f
    const std::size_t u2 = ax_diamono(xi, zeta, F::lnot(f));             // <zeta>~f -> <xi>~f
    const std::size_t u3 = box_imp_taut(ModalLabel::ord(zeta), nnf, f);  // [zeta]~~f -> [zeta]f
    return chain(F::imp(F::box(xi, f), F::box(zeta, f)), {u1, u2, u3});
  }

  // a->b is a tautology; derives <l>a -> <l>b.
  std::size_t dia_imp_taut(const Ordinal& l, const Fptr& a, const Fptr& b) {
    const std::size_t w = box_imp_taut(ModalLabel::ord(l), F::lnot(b), F::lnot(a));
    return chain(F::imp(F::dia(l, a), F::dia(l, b)), {w});
  }

  // [l]x -> ([l]~x -> [l]~T)
  std::size_t boxed_pair_contra(ModalLabel l, const Fptr& x) {
    Fptr nt = F::lnot(F::top());
    const std::size_t t = taut(F::imp(x, F::imp(F::lnot(x), nt)));
    const std::size_t b1 = box_imp(l, t);
    const std::size_t k2 = ax_k(l, F::lnot(x), nt);
    return chain(F::imp(F::box(l, x), F::imp(F::box(l, F::lnot(x)), F::box(l, nt))), {b1, k2});
  }

  // <l><l>f -> <l>f
  std::size_t dia_trans(const Ordinal& l, const Fptr& f) {
    Fptr bnf = F::box(l, F::lnot(f));  // [l]~f
    const std::size_t u1 = ax_4(ModalLabel::ord(l), F::lnot(f));  // [l]~f -> [l][l]~f
    const std::size_t u2 =
        box_imp_taut(ModalLabel::ord(l), bnf, F::lnot(F::lnot(bnf)));  // [l][l]~f -> [l]~~[l]~f
    return chain(F::imp(F::dia(l, F::dia(l, f)), F::dia(l, f)), {u1, u2});
  }

  Proof take() { return std::move(proof_); }

 private:
  Proof proof_;
};

Ordinal cap_for(const Ordinal& alpha, std::initializer_list<Fptr> formulas) {
  Ordinal m = alpha;
  for (const Fptr& f : formulas)
    for (const Ordinal& o : signature(f))
      if (m < o) m = o;
  return m.succ();
}

}  // namespace

Proof derive_cons_provable(const Ordinal& alpha, const Ordinal& beta) {
  if (!(beta < alpha))
    throw std::invalid_argument("derive_cons_provable requires beta < alpha, got alpha=" +
                                alpha.str() + " beta=" + beta.str());
  Builder b(AxiomSystem::glp(cap_for(alpha, {})));
  Fptr top = Formula::top();
  Fptr d = Formula::dia(beta, top);  // <beta>T

  // Either <beta>T holds and introspection lifts it, or [beta]~T and an
  // ex falso under the [beta] box produces it, after which monotonicity lifts.
  const std::size_t lift = b.ax_intro(beta, alpha, top);                    // <b>T -> [a]<b>T
  const std::size_t exf = b.box_imp_taut(ModalLabel::ord(beta), Formula::lnot(top), d);
  const std::size_t up = b.mono(beta, alpha, d);                            // [b]<b>T -> [a]<b>T
  b.chain(Formula::box(alpha, d), {lift, exf, up});
  return b.take();
}

Proof derive_cons_absorption(const Ordinal& alpha, const Ordinal& beta, const Fptr& phi) {
  if (!(beta < alpha))
    throw std::invalid_argument("derive_cons_absorption requires beta < alpha, got alpha=" +
                                alpha.str() + " beta=" + beta.str());
  Builder b(AxiomSystem::glp(cap_for(alpha, {phi})));
  Fptr top = Formula::top();
  Fptr small = Formula::dia(beta, phi);                 // <beta>phi
  Fptr big = Formula::dia(alpha, small);                // <alpha><beta>phi

  const std::size_t lift = b.ax_intro(beta, alpha, phi);                 // <b>p -> [a]<b>p
  const std::size_t contra = b.boxed_pair_contra(ModalLabel::ord(alpha), small);
  const std::size_t down = b.ax_diamono(beta, alpha, small);             // <a><b>p -> <b><b>p
  const std::size_t collapse = b.dia_trans(beta, phi);                   // <b><b>p -> <b>p
  b.chain(Formula::imp(Formula::dia(alpha, top), Formula::iff(small, big)),
          {lift, contra, down, collapse});
  return b.take();
}

Proof derive_box_disjunction(const Ordinal& alpha, const Ordinal& beta, const Fptr& phi,
                             const Fptr& psi) {
  if (beta.is_zero() || alpha < beta)
    throw std::invalid_argument("derive_box_disjunction requires 0 < beta <= alpha, got alpha=" +
                                alpha.str() + " beta=" + beta.str());
  Builder b(AxiomSystem::glp(cap_for(alpha, {phi, psi})));
  const Ordinal zero;
  const ModalLabel l0 = ModalLabel::ord(zero);
  Fptr top = Formula::top();
  Fptr bx = Formula::box(zero, psi);                     // [0]psi
  Fptr lhs = Formula::lor(Formula::dia(beta, phi), bx);  // <b>phi | [0]psi
  Fptr rhs = Formula::dia(beta, Formula::lor(phi, bx));  // <b>(phi | [0]psi)
  Fptr guard = Formula::dia(alpha, top);                 // <a>T

  // Forward: under <a>T, a provable [0]psi is [a]-provable, hence compatible
  // with <a>T, and drops to a <beta> witness.
  std::vector<std::size_t> fwd;
  fwd.push_back(b.dia_imp_taut(beta, phi, Formula::lor(phi, bx)));
  fwd.push_back(b.ax_4(l0, psi));                         // [0]psi -> [0][0]psi
  fwd.push_back(b.mono(zero, alpha, bx));                 // [0][0]psi -> [a][0]psi
  fwd.push_back(b.boxed_pair_contra(ModalLabel::ord(alpha), bx));
  if (beta < alpha) fwd.push_back(b.ax_diamono(beta, alpha, bx));
  fwd.push_back(b.dia_imp_taut(beta, bx, Formula::lor(phi, bx)));
  const std::size_t forward = b.chain(Formula::imp(guard, Formula::imp(lhs, rhs)), fwd);

  // Backward (needs no guard): ~[0]psi is a <0> fact, so it introspects to
  // level beta and strips the [0]psi disjunct under the <beta>.
  const std::size_t w1 =
      b.box_imp_taut(l0, Formula::lnot(Formula::lnot(psi)), psi);  // [0]~~psi -> [0]psi
  const std::size_t w1b =
      b.box_imp_taut(l0, psi, Formula::lnot(Formula::lnot(psi)));  // [0]psi -> [0]~~psi
  const std::size_t w2 = b.ax_intro(zero, beta, Formula::lnot(psi));
  const std::size_t inner = b.chain(
      Formula::imp(Formula::lnot(Formula::box(zero, Formula::lnot(Formula::lnot(psi)))),
                   Formula::lnot(bx)),
      {w1b});
  const std::size_t w3 = b.box_imp(ModalLabel::ord(beta), inner);
  const std::size_t t = b.taut(Formula::imp(
      Formula::lnot(phi),
      Formula::imp(Formula::lnot(bx), Formula::lnot(Formula::lor(phi, bx)))));
  const std::size_t w6 = b.box_imp(ModalLabel::ord(beta), t);
  const std::size_t w7 =
      b.ax_k(ModalLabel::ord(beta), Formula::lnot(bx), Formula::lnot(Formula::lor(phi, bx)));
  const std::size_t backward =
      b.chain(Formula::imp(rhs, lhs), {w1, w2, w3, w6, w7});

  b.chain(Formula::imp(guard, Formula::iff(lhs, rhs)), {forward, backward});
  return b.take();
}

Proof derive_blacksquare_lob(const Fptr& phi) {
  if (!in_blacksquare_language(phi))
    throw std::invalid_argument("formula is outside the GL# language: " + print_formula(phi));
  Builder b(AxiomSystem::gl_bsq());
  const ModalLabel bs = ModalLabel::bsq();
  const ModalLabel l0 = ModalLabel::ord(Ordinal());
  Fptr bphi = Formula::box(bs, phi);                          // #phi
  Fptr hyp = Formula::box(bs, Formula::imp(bphi, phi));       // #(#phi -> phi)
  Fptr goal = Formula::imp(hyp, bphi);                        // the Loeb shape for #

  // [0]goal -> goal, assembled from bsq1..bsq3; then Loeb for [0] closes it.
  const std::size_t a1 = b.ax_bsq1(goal);                     // [0]goal -> #goal
  const std::size_t a2 = b.ax_k(bs, hyp, bphi);               // #goal -> (#hyp -> ##phi)
  const std::size_t a3 = b.ax_4(bs, Formula::imp(bphi, phi)); // hyp -> #hyp
  const std::size_t a4 = b.ax_k(bs, bphi, phi);               // hyp -> (##phi -> #phi)
  const std::size_t step =
      b.chain(Formula::imp(Formula::box(l0, goal), goal), {a1, a2, a3, a4});
  const std::size_t boxed = b.nec(l0, step);
  const std::size_t lob = b.ax_lob(Ordinal(), goal);
  const std::size_t bg = b.mp(lob, boxed);                    // [0]goal
  b.mp(step, bg);                                             // goal
  return b.take();
}

}  // namespace glpwb
