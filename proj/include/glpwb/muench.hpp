#ifndef GLPWB_MUENCH_HPP
#define GLPWB_MUENCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glpwb/formula.hpp"
#include "glpwb/frame.hpp"
#include "glpwb/ordinal.hpp"

namespace glpwb {

// Candidate oracle sentences. Default is the full algebra.
struct OracleUniverse {
  std::vector<Elem> elems;

  static OracleUniverse full(const Frame& f);
  static OracleUniverse listed(std::vector<Elem> elems);
  bool is_full(const Frame& f) const;
};

enum class Mode { kSingle, kVector };

// The computed level operators [zeta] : Elem -> Elem, one full table per grid
// point. Level zeta may consult diamonds of every grid level strictly below,
// applied to universe elements; vector mode closes the diamond set under
// meets (up to max_len factors).
struct LevelledPredicate {
  Frame frame;
  OrdinalGrid grid;
  OracleUniverse universe;
  Mode mode = Mode::kSingle;
  int max_len = 1;                            // vector mode only
  std::vector<std::vector<Elem>> table;       // [level][x]
  std::optional<std::size_t> stabilization;   // grid index, see stabilize()

  Elem apply(std::size_t level, Elem x) const { return table[level][x]; }
  Elem dia(std::size_t level, Elem x) const {
    const Elem full = frame.full();
    return full & ~table[level][full & ~x];
  }
};

// Single-oracle recursion:
//   [zeta]x = box(x) | OR_{xi<zeta, psi in U} ( <xi>psi & box(<xi>psi -> x) ).
// Requires check_order_requirements(grid) and a non-empty universe.
LevelledPredicate eval_single(const Frame& f, const OrdinalGrid& grid, const OracleUniverse& u);

// Multi-oracle variant: the oracle ranges over meets of at most max_len
// single diamonds (the value-level image of length-<=max_len sequences).
// max_len >= 2^worlds saturates the closure.
LevelledPredicate eval_vector(const Frame& f, const OrdinalGrid& grid, const OracleUniverse& u,
                              int max_len);
// Saturating max_len for a frame.
int saturating_len(const Frame& f);

// Reference evaluator for the vector clause: enumerates the level/oracle
// sequences of length 1..max_len directly. Test oracle for eval_vector;
// exponential in max_len.
std::vector<std::vector<Elem>> eval_vector_bruteforce(const Frame& f, const OrdinalGrid& grid,
                                                      const OracleUniverse& u, int max_len);

// Least grid point from which consecutive tables coincide through the end of
// the grid; absent when the grid cannot witness two equal consecutive tables.
std::optional<std::size_t> stabilize(const LevelledPredicate& p);

struct LawRecord {
  std::string law;
  Mode mode;
  std::string level;  // printed grid point, or "xi<zeta" for cross laws
  bool asserted = false;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<std::pair<Elem, Elem>> witness;
  bool holds() const { return violations == 0; }
};

struct SoundnessReport {
  std::vector<LawRecord> records;
  bool asserted_ok() const;
};

// Per-level law sweep. Exhaustive over element pairs for n <= 4, sampled
// above. Asserted laws: ex falso, K-monotonicity, level monotonicity,
// negative introspection and necessitation for both modes; distribution,
// conjunction closure, transitivity, Loeb and weak disjunction closure are
// additionally asserted in vector mode and exploratory in single mode.
SoundnessReport soundness_suite(const LevelledPredicate& p, std::uint64_t seed = 1);

// Non-recursive finite-level operator: level 0 is box, level m+1 adds the
// oracle disjunction over explicit levels <= m. Independent of eval_single.
std::vector<Elem> finite_level_boxbox(const Frame& f, int level, const OracleUniverse& u);

// Semantic reflexive-induction instance: if for every grid point a,
// box(AND_{b<a} phi[b]) <= phi[a] as elements, then AND phi[a] must be full.
// Returns whether the implication instance holds.
bool reflexive_induction_check(const Frame& f, const OrdinalGrid& grid,
                               const std::vector<Elem>& phi);

// Per-world class of the levelled predicate: pair (level index, universe
// index) is in the class of w iff w is in [level]psi. The recursion is
// verified pointwise, and the per-world brute force enumerates every
// candidate class (other worlds fixed) to confirm it is the only solution.
struct ImcResult {
  std::vector<std::uint32_t> classes;  // classes[w] bit (level*|U|+k)
  bool verified = false;
  bool unique_per_world = false;
  std::uint64_t candidates_checked = 0;
};

// Requires a complement-closed universe and |grid|*|U| <= 24; throws
// std::invalid_argument("instance too large...") otherwise.
ImcResult build_imc(const Frame& f, const OrdinalGrid& grid, const OracleUniverse& u);

struct ClosureFinding {
  std::string law;
  std::string level;
  Elem x, y;
};

struct ClosureReport {
  std::uint64_t checked = 0;
  std::map<std::string, std::uint64_t> counts;  // per law
  std::vector<ClosureFinding> samples;          // first few witnesses
};

// Enumerates conjunction-closure, disjunction-closure and transitivity
// violations of a single-oracle predicate. Records outcomes; asserts nothing.
ClosureReport explore_closure_failures(const Frame& f, const LevelledPredicate& p);

// Evaluates a modal formula over the predicate: atoms from the assignment,
// [o] as the operator at grid point o, [#] as the top grid level.
Elem eval_formula(const Fptr& f, const LevelledPredicate& p,
                  const std::map<std::string, Elem>& atoms);

}  // namespace glpwb

#endif  // GLPWB_MUENCH_HPP
