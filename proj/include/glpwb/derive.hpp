#ifndef GLPWB_DERIVE_HPP
#define GLPWB_DERIVE_HPP

#include "glpwb/proof.hpp"

namespace glpwb {

// Checkable GLP proof of [alpha]<beta>T. Requires beta < alpha.
Proof derive_cons_provable(const Ordinal& alpha, const Ordinal& beta);

// Checkable GLP proof of <alpha>T -> (<beta>phi <-> <alpha><beta>phi).
// Requires beta < alpha.
Proof derive_cons_absorption(const Ordinal& alpha, const Ordinal& beta, const Fptr& phi);

// Checkable GLP proof of
//   <alpha>T -> ((<beta>phi | [0]psi) <-> <beta>(phi | [0]psi)).
// Requires 0 < beta <= alpha.
Proof derive_box_disjunction(const Ordinal& alpha, const Ordinal& beta, const Fptr& phi,
                             const Fptr& psi);

// Checkable GL# proof of [#]([#]phi -> phi) -> [#]phi from bsq1..bsq3 and
// Loeb for [0]. phi must be in the GL# language.
Proof derive_blacksquare_lob(const Fptr& phi);

}  // namespace glpwb

#endif  // GLPWB_DERIVE_HPP
