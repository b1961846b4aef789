#ifndef GLPWB_UNIFORMPP_HPP
#define GLPWB_UNIFORMPP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glpwb/muench.hpp"

namespace glpwb {

// A derivation token for the certificate-level proof predicate pi(c,l,phi).
// Base certificates carry only padding (the nonce); oracle certificates name
// a level xi, an oracle sentence psi and a padded base proof of
// <xi>psi -> phi. Every certificate fixes the single formula it derives.
struct Certificate {
  bool oracle = false;
  Ordinal xi;           // oracle only
  Elem psi = 0;         // oracle only
  std::uint64_t nonce = 0;
  Elem formula = 0;

  static Certificate base(std::uint64_t nonce, Elem formula) {
    Certificate c;
    c.nonce = nonce;
    c.formula = formula;
    return c;
  }
  static Certificate with_oracle(Ordinal xi, Elem psi, std::uint64_t nonce, Elem formula) {
    Certificate c;
    c.oracle = true;
    c.xi = std::move(xi);
    c.psi = psi;
    c.nonce = nonce;
    c.formula = formula;
    return c;
  }
};

// Everything pi needs: the frame algebra, the grid and a single-oracle
// levelled predicate for the diamond elements.
struct PiContext {
  Frame frame;
  OrdinalGrid grid;
  OracleUniverse universe;
  LevelledPredicate pred;

  static PiContext make(const Frame& f, const OrdinalGrid& grid, const OracleUniverse& u);
};

// Base provability of an element is the global fact "element = top".
bool base_provable(const PiContext& ctx, Elem phi);

// pi(c, lambda, phi):
//   base case:   phi matches the certificate and is base-provable;
//   oracle case: phi matches, xi < lambda is a grid point, the global fact
//                <xi>psi holds (element = top) and <xi>psi -> phi is
//                base-provable.
// Throws std::invalid_argument when lambda is not a grid point.
bool pi_check(const Certificate& c, const Ordinal& lambda, Elem phi, const PiContext& ctx);

// Searches base and oracle certificates (over the universe and the grid
// points below lambda). Some certificate exists iff the global rendering of
// [lambda]phi holds; see global_provable.
std::optional<Certificate> exists_certificate(const Ordinal& lambda, Elem phi,
                                              const PiContext& ctx);

// The level recursion read globally: provable(lambda, phi) iff phi = top or
// some grid xi < lambda and psi in U give a globally-true consistency fact
// whose sentence element base-provably implies phi. Independent of the
// certificate search; the two must agree everywhere.
bool global_provable(const Ordinal& lambda, Elem phi, const PiContext& ctx);

struct CheckCounter {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  bool out_of_scope = false;
  bool holds() const { return violations == 0; }
};

struct UniformReport {
  std::vector<CheckCounter> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.holds()) return false;
    return true;
  }
};

// Normalization: (a) one formula per certificate, (b) nonce padding gives at
// least `multiplicity` distinct certificates per derivable pair, (c) a
// certificate valid at xi stays valid at every grid point above it.
UniformReport normalization_checks(const PiContext& ctx, std::uint64_t multiplicity = 10,
                                   std::uint64_t seed = 1);

// Instance checks for the uniform-proof-predicate properties: base
// provability gives certificates, modus ponens closure, level monotonicity of
// fixed certificates, stability of certificate facts and their negations
// under re-derivation, and lifting of consistency facts to higher levels.
// The induction property is arithmetic-only and reported out of scope.
UniformReport uprov_property_suite(const PiContext& ctx);

// Text format: `base <nonce> <formula-id>` and
// `oracle <ordinal> <psi-id> <nonce> <formula-id>`, ids indexing the
// universe listing.
std::string certificate_str(const Certificate& c, const PiContext& ctx);
Certificate certificate_parse(std::string_view text, const PiContext& ctx);

}  // namespace glpwb

#endif  // GLPWB_UNIFORMPP_HPP
