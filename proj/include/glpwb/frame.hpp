#ifndef GLPWB_FRAME_HPP
#define GLPWB_FRAME_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace glpwb {

// A set of worlds, one bit per world.
using Elem = std::uint32_t;

// Finite transitive irreflexive frame on at most 16 worlds. Elements of the
// world-set algebra are bitmasks; box is the usual relational operator.
class Frame {
 public:
  static constexpr int kMaxWorlds = 16;

  // Applies the transitive closure to the given edges; throws
  // std::invalid_argument on reflexive pairs, cycles, or out-of-range input.
  static Frame from_edges(int worlds, const std::vector<std::pair<int, int>>& edges);
  // No validation: for experiments that deliberately break the invariants
  // (e.g. demonstrating a Loeb failure on a reflexive point).
  static Frame unchecked(int worlds, std::vector<Elem> succ);

  Frame() = default;  // empty frame, only useful as a placeholder

  int worlds() const { return n_; }
  Elem full() const { return n_ == 32 ? ~Elem{0} : (Elem{1} << n_) - 1; }
  Elem succ(int w) const { return succ_[static_cast<std::size_t>(w)]; }
  std::vector<std::pair<int, int>> edges() const;

  // { w | every successor of w is in x }. Throws on stray bits.
  Elem box(Elem x) const;
  // ~box(~x) = { w | some successor of w is in x }.
  Elem dia(Elem x) const;

  bool operator==(const Frame& other) const { return n_ == other.n_ && succ_ == other.succ_; }

 private:
  int n_ = 0;
  std::vector<Elem> succ_;
};

// Deterministic in seed: a random strict partial order (random DAG through a
// shuffled topological order, then transitive closure). 1 <= n <= 16.
Frame random_frame(std::uint64_t seed, int n);

// Every transitive irreflexive relation on n labeled worlds. Intended for the
// exhaustive sweeps (n <= 4; counts 1, 3, 19, 219).
std::vector<Frame> enumerate_frames(int n);

// JSON frame file: {"worlds": n, "edges": [[i,j],...]}. The loader applies
// the transitive closure and rejects reflexive pairs and cycles.
Frame load_frame_json(std::istream& in);
Frame load_frame_file(const std::string& path);
std::string frame_to_json(const Frame& f);

struct GlLawViolation {
  std::string law;
  Elem x, y;
};

struct GlLawReport {
  std::uint64_t checked = 0;
  std::vector<GlLawViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Samples (or exhausts, for small frames) x,y and verifies the K,
// transitivity and Loeb inequalities plus necessitation. On frames satisfying
// the invariants the report is expected to be empty.
GlLawReport check_gl_laws(const Frame& f, std::uint64_t samples = 4096, std::uint64_t seed = 1);

}  // namespace glpwb

#endif  // GLPWB_FRAME_HPP
