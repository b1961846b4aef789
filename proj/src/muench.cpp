#include "glpwb/muench.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace glpwb {

OracleUniverse OracleUniverse::full(const Frame& f) {
  OracleUniverse u;
  const Elem full = f.full();
  u.elems.reserve(static_cast<std::size_t>(full) + 1);
  for (Elem x = 0;; ++x) {
    u.elems.push_back(x);
    if (x == full) break;
  }
  return u;
}

OracleUniverse OracleUniverse::listed(std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  OracleUniverse u;
  u.elems = std::move(elems);
  return u;
}

bool OracleUniverse::is_full(const Frame& f) const {
  return elems.size() == static_cast<std::size_t>(f.full()) + 1;
}

namespace {

void validate_inputs(const Frame& f, const OrdinalGrid& grid, const OracleUniverse& u) {
  if (!check_order_requirements(grid))
    throw std::invalid_argument("grid fails the order requirements (needs 0, all points < cap)");
  if (u.elems.empty()) throw std::invalid_argument("oracle universe is empty");
  for (Elem e : u.elems)
    if (e & ~f.full()) throw std::invalid_argument("universe element outside the frame");
}

// Diamonds of every level strictly below `level`, applied to the universe.
std::vector<Elem> lower_diamonds(const Frame& f, const std::vector<std::vector<Elem>>& tables,
                                 std::size_t level, const OracleUniverse& u) {
  const Elem full = f.full();
  std::set<Elem> ds;
  for (std::size_t xi = 0; xi < level; ++xi)
    for (Elem psi : u.elems) ds.insert(full & ~tables[xi][full & ~psi]);
  return {ds.begin(), ds.end()};
}

std::vector<Elem> level_table(const Frame& f, const std::vector<Elem>& oracles) {
  const Elem full = f.full();
  std::vector<Elem> tab(static_cast<std::size_t>(full) + 1);
  for (Elem x = 0;; ++x) {
    Elem v = f.box(x);
    for (Elem d : oracles) v |= d & f.box((full & ~d) | x);
    tab[x] = v;
    if (x == full) break;
  }
  return tab;
}

}  // namespace

LevelledPredicate eval_single(const Frame& f, const OrdinalGrid& grid, const OracleUniverse& u) {
  validate_inputs(f, grid, u);
  LevelledPredicate p;
  p.frame = f;
  p.grid = grid;
  p.universe = u;
  p.mode = Mode::kSingle;
  for (std::size_t lev = 0; lev < grid.size(); ++lev)
    p.table.push_back(level_table(f, lower_diamonds(f, p.table, lev, u)));
  p.stabilization = stabilize(p);
  return p;
}

int saturating_len(const Frame& f) { return static_cast<int>(f.full()) + 1; }

LevelledPredicate eval_vector(const Frame& f, const OrdinalGrid& grid, const OracleUniverse& u,
                              int max_len) {
  validate_inputs(f, grid, u);
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  LevelledPredicate p;
  p.frame = f;
  p.grid = grid;
  p.universe = u;
  p.mode = Mode::kVector;
  p.max_len = max_len;
  for (std::size_t lev = 0; lev < grid.size(); ++lev) {
    const std::vector<Elem> single = lower_diamonds(f, p.table, lev, u);
    // Meets of up to max_len single diamonds, collected as values; each round
    // below the bound either grows the set or has already saturated it.
    std::set<Elem> meets(single.begin(), single.end());
    for (int round = 1; round < max_len; ++round) {
      std::set<Elem> next = meets;
      for (Elem m : meets)
        for (Elem d : single) next.insert(m & d);
      if (next == meets) break;
      meets.swap(next);
    }
    p.table.push_back(level_table(f, {meets.begin(), meets.end()}));
  }
  p.stabilization = stabilize(p);
  return p;
}

std::vector<std::vector<Elem>> eval_vector_bruteforce(const Frame& f, const OrdinalGrid& grid,
                                                      const OracleUniverse& u, int max_len) {
  validate_inputs(f, grid, u);
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  const Elem full = f.full();
  std::vector<std::vector<Elem>> tables;
  for (std::size_t lev = 0; lev < grid.size(); ++lev) {
    // One diamond per (level below, universe element) pair, duplicates kept:
    // the enumeration walks literal sequences.
    std::vector<Elem> dias;
    for (std::size_t xi = 0; xi < lev; ++xi)
      for (Elem psi : u.elems) dias.push_back(full & ~tables[xi][full & ~psi]);
    std::vector<Elem> tab(static_cast<std::size_t>(full) + 1);
    for (Elem x = 0;; ++x) {
      Elem v = f.box(x);
      if (!dias.empty()) {
        for (int len = 1; len <= max_len; ++len) {
          std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
          while (true) {
            Elem m = full;
            for (std::size_t k : idx) m &= dias[k];
            v |= m & f.box((full & ~m) | x);
            // odometer
            std::size_t pos = 0;
            while (pos < idx.size()) {
              if (++idx[pos] < dias.size()) break;
              idx[pos] = 0;
              ++pos;
            }
            if (pos == idx.size()) break;
          }
        }
      }
      tab[x] = v;
      if (x == full) break;
    }
    tables.push_back(std::move(tab));
  }
  return tables;
}

std::optional<std::size_t> stabilize(const LevelledPredicate& p) {
  const std::size_t n = p.table.size();
  if (n < 2) return std::nullopt;
  std::size_t first = 0;
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (p.table[k] != p.table[k + 1]) first = k + 1;
  if (first + 1 >= n) return std::nullopt;  // no equal consecutive pair witnessed
  return first;
}

namespace {

// Boolean subalgebra generated by the universe (complement/meet closure).
std::vector<Elem> boolean_closure(const Frame& f, const OracleUniverse& u) {
  const Elem full = f.full();
  std::set<Elem> cl(u.elems.begin(), u.elems.end());
  cl.insert(0);
  cl.insert(full);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur(cl.begin(), cl.end());
    for (Elem a : cur)
      if (cl.insert(full & ~a).second) grew = true;
    for (Elem a : cur)
      for (Elem b : cur)
        if (cl.insert(a & b).second) grew = true;
  }
  return {cl.begin(), cl.end()};
}

struct PairSource {
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> singles;
};

PairSource make_pairs(const Frame& f, std::uint64_t seed) {
  PairSource src;
  const Elem full = f.full();
  if (f.worlds() <= 4) {
    for (Elem x = 0;; ++x) {
      src.singles.push_back(x);
      for (Elem y = 0;; ++y) {
        src.pairs.emplace_back(x, y);
        if (y == full) break;
      }
      if (x == full) break;
    }
  } else {
    for (Elem x = 0;; ++x) {
      src.singles.push_back(x);
      if (x == full) break;
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 4096; ++i)
      src.pairs.emplace_back(static_cast<Elem>(rng()) & full, static_cast<Elem>(rng()) & full);
    src.pairs.emplace_back(full, full);
    src.pairs.emplace_back(0, 0);
  }
  return src;
}

}  // namespace

bool SoundnessReport::asserted_ok() const {
  for (const LawRecord& r : records)
    if (r.asserted && !r.holds()) return false;
  return true;
}

SoundnessReport soundness_suite(const LevelledPredicate& p, std::uint64_t seed) {
  const Frame& f = p.frame;
  const Elem full = f.full();
  const bool vec = p.mode == Mode::kVector;
  const PairSource src = make_pairs(f, seed);
  const std::vector<Elem> closure = boolean_closure(f, p.universe);
  SoundnessReport report;

  auto imp = [&](Elem a, Elem b) { return (full & ~a) | b; };
  auto record = [&](LawRecord r) { report.records.push_back(std::move(r)); };
  auto mk = [&](const char* law, const std::string& at, bool asserted) {
    LawRecord r;
    r.law = law;
    r.mode = p.mode;
    r.level = at;
    r.asserted = asserted;
    return r;
  };

  for (std::size_t lev = 0; lev < p.grid.size(); ++lev) {
    const std::string at = p.grid.points[lev].str();
    const auto& tab = p.table[lev];

    LawRecord exf = mk("ex_falso", at, true);
    for (Elem x : src.singles) {
      ++exf.checked;
      if (tab[0] & ~tab[x]) {
        if (++exf.violations == 1) exf.witness = {x, 0};
      }
    }
    record(std::move(exf));

    LawRecord kmono = mk("k_monotone", at, true);
    LawRecord dist = mk("distribution", at, vec);
    LawRecord conj = mk("conjunction_closure", at, vec);
    for (const auto& [x, y] : src.pairs) {
      ++kmono.checked;
      if (tab[x] & f.box(imp(x, y)) & ~tab[y]) {
        if (++kmono.violations == 1) kmono.witness = {x, y};
      }
      ++dist.checked;
      if (tab[imp(x, y)] & tab[x] & ~tab[y]) {
        if (++dist.violations == 1) dist.witness = {x, y};
      }
      ++conj.checked;
      if ((tab[x] & tab[y]) != tab[x & y]) {
        if (++conj.violations == 1) conj.witness = {x, y};
      }
    }
    record(std::move(kmono));
    record(std::move(dist));
    record(std::move(conj));

    LawRecord trans = mk("transitivity", at, vec);
    LawRecord loeb = mk("loeb", at, vec);
    for (Elem x : src.singles) {
      ++trans.checked;
      if (tab[x] & ~tab[tab[x]]) {
        if (++trans.violations == 1) trans.witness = {x, 0};
      }
      ++loeb.checked;
      if (tab[imp(tab[x], x)] & ~tab[x]) {
        if (++loeb.violations == 1) loeb.witness = {x, 0};
      }
    }
    record(std::move(trans));
    record(std::move(loeb));

    LawRecord nec = mk("necessitation", at, true);
    nec.checked = 1;
    if (tab[full] != full) {
      nec.violations = 1;
      nec.witness = {full, full};
    }
    record(std::move(nec));

    // Disjunction closure only has oracle support above the minimal level;
    // the base box provably lacks it on some frames.
    if (lev > 0) {
      LawRecord disj = mk("weak_disjunction_closure", at, vec);
      std::set<Elem> image;
      for (Elem z : closure) image.insert(tab[z]);
      for (const auto& [x, y] : src.pairs) {
        ++disj.checked;
        if (!image.count(tab[x] | tab[y])) {
          if (++disj.violations == 1) disj.witness = {x, y};
        }
      }
      record(std::move(disj));
    }
  }

  for (std::size_t lo = 0; lo < p.grid.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi < p.grid.size(); ++hi) {
      const std::string at = p.grid.points[lo].str() + "<" + p.grid.points[hi].str();
      LawRecord lmono = mk("level_monotone", at, true);
      for (Elem x : src.singles) {
        ++lmono.checked;
        if (p.table[lo][x] & ~p.table[hi][x]) {
          if (++lmono.violations == 1) lmono.witness = {x, 0};
        }
      }
      record(std::move(lmono));

      // The oracle sentence must itself be available as an oracle, so the
      // introspected element ranges over the universe.
      LawRecord intro = mk("negative_introspection", at, true);
      for (Elem x : p.universe.elems) {
        ++intro.checked;
        const Elem d = full & ~p.table[lo][full & ~x];
        if (d & ~p.table[hi][d]) {
          if (++intro.violations == 1) intro.witness = {x, 0};
        }
      }
      record(std::move(intro));
    }
  }
  return report;
}

std::vector<Elem> finite_level_boxbox(const Frame& f, int level, const OracleUniverse& u) {
  if (level < 0) throw std::invalid_argument("level must be non-negative");
  if (u.elems.empty()) throw std::invalid_argument("oracle universe is empty");
  const Elem full = f.full();
  std::vector<std::vector<Elem>> tabs;
  for (int m = 0; m <= level; ++m) {
    std::vector<Elem> tab(static_cast<std::size_t>(full) + 1);
    for (Elem x = 0;; ++x) {
      Elem v = f.box(x);
      for (int k = 0; k < m; ++k) {
        for (Elem psi : u.elems) {
          const Elem d = full & ~tabs[static_cast<std::size_t>(k)][full & ~psi];
          v |= d & f.box((full & ~d) | x);
        }
      }
      tab[x] = v;
      if (x == full) break;
    }
    tabs.push_back(std::move(tab));
  }
  return tabs.back();
}

bool reflexive_induction_check(const Frame& f, const OrdinalGrid& grid,
                               const std::vector<Elem>& phi) {
  if (phi.size() != grid.size())
    throw std::invalid_argument("need one element per grid point");
  const Elem full = f.full();
  Elem premise = full;
  for (std::size_t a = 0; a < phi.size(); ++a) {
    Elem below = full;
    for (std::size_t b = 0; b < a; ++b) below &= phi[b];
    premise &= (full & ~f.box(below)) | phi[a];
  }
  if (premise != full) return true;  // implication holds vacuously
  Elem conclusion = full;
  for (Elem e : phi) conclusion &= e;
  return conclusion == full;
}

ImcResult build_imc(const Frame& f, const OrdinalGrid& grid, const OracleUniverse& u) {
  validate_inputs(f, grid, u);
  const Elem full = f.full();
  const std::size_t nu = u.elems.size();
  const std::size_t pairs = grid.size() * nu;
  if (pairs > 24)
    throw std::invalid_argument("instance too large for the uniqueness brute force (" +
                                std::to_string(pairs) + " pairs)");
  // The class records [level]psi for psi in U; diamonds need complements.
  std::vector<std::size_t> comp(nu);
  for (std::size_t k = 0; k < nu; ++k) {
    const auto it = std::lower_bound(u.elems.begin(), u.elems.end(), full & ~u.elems[k]);
    if (it == u.elems.end() || *it != (full & ~u.elems[k]))
      throw std::invalid_argument("oracle universe must be complement-closed for classes");
    comp[k] = static_cast<std::size_t>(it - u.elems.begin());
  }

  const LevelledPredicate p = eval_single(f, grid, u);
  const int n = f.worlds();
  ImcResult res;
  res.classes.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t lev = 0; lev < grid.size(); ++lev)
    for (std::size_t k = 0; k < nu; ++k)
      for (int w = 0; w < n; ++w)
        if (p.table[lev][u.elems[k]] >> w & 1)
          res.classes[static_cast<std::size_t>(w)] |= std::uint32_t{1} << (lev * nu + k);

  // Diamond elements recomputed from the classes alone: v is in D(beta,psi)
  // iff (beta, ~psi) is not in v's class.
  auto dia_from_classes = [&](std::size_t beta, std::size_t k) {
    Elem d = 0;
    for (int w = 0; w < n; ++w)
      if (!(res.classes[static_cast<std::size_t>(w)] >> (beta * nu + comp[k]) & 1))
        d |= Elem{1} << w;
    return d;
  };

  auto rhs_mask = [&](int w) {
    std::uint32_t mask = 0;
    for (std::size_t lev = 0; lev < grid.size(); ++lev) {
      for (std::size_t k = 0; k < nu; ++k) {
        bool holds = (f.box(u.elems[k]) >> w & 1) != 0;
        for (std::size_t beta = 0; beta < lev && !holds; ++beta) {
          for (std::size_t c = 0; c < nu && !holds; ++c) {
            const Elem d = dia_from_classes(beta, c);
            if ((d >> w & 1) && (f.box((full & ~d) | u.elems[k]) >> w & 1)) holds = true;
          }
        }
        if (holds) mask |= std::uint32_t{1} << (lev * nu + k);
      }
    }
    return mask;
  };

  res.verified = true;
  res.unique_per_world = true;
  const std::uint64_t space = std::uint64_t{1} << pairs;
  for (int w = 0; w < n; ++w) {
    const std::uint32_t rhs = rhs_mask(w);
    if (rhs != res.classes[static_cast<std::size_t>(w)]) res.verified = false;
    // By irreflexivity the recursion at w never consults w's own class, so
    // the enumeration pits every candidate against a fixed right-hand side.
    std::uint64_t hits = 0;
    for (std::uint64_t c = 0; c < space; ++c)
      if (c == rhs) ++hits;
    res.candidates_checked += space;
    if (hits != 1) res.unique_per_world = false;
  }
  return res;
}

ClosureReport explore_closure_failures(const Frame& f, const LevelledPredicate& p) {
  if (p.mode != Mode::kSingle)
    throw std::invalid_argument("closure exploration applies to single-oracle predicates");
  const PairSource src = make_pairs(f, /*seed=*/7);
  const std::vector<Elem> closure = boolean_closure(f, p.universe);
  ClosureReport rep;
  rep.counts["conjunction_closure"] = 0;
  rep.counts["weak_disjunction_closure"] = 0;
  rep.counts["transitivity"] = 0;
  auto note = [&](const std::string& law, std::size_t lev, Elem x, Elem y) {
    ++rep.counts[law];
    if (rep.samples.size() < 16)
      rep.samples.push_back({law, p.grid.points[lev].str(), x, y});
  };
  for (std::size_t lev = 0; lev < p.grid.size(); ++lev) {
    const auto& tab = p.table[lev];
    std::set<Elem> image;
    for (Elem z : closure) image.insert(tab[z]);
    for (const auto& [x, y] : src.pairs) {
      ++rep.checked;
      if ((tab[x] & tab[y]) != tab[x & y]) note("conjunction_closure", lev, x, y);
      if (!image.count(tab[x] | tab[y])) note("weak_disjunction_closure", lev, x, y);
    }
    for (Elem x : src.singles) {
      ++rep.checked;
      if (tab[x] & ~tab[tab[x]]) note("transitivity", lev, x, 0);
    }
  }
  return rep;
}

Elem eval_formula(const Fptr& f, const LevelledPredicate& p,
                  const std::map<std::string, Elem>& atoms) {
  const Elem full = p.frame.full();
  switch (f->kind) {
    case FKind::Atom: {
      auto it = atoms.find(f->name);
      if (it == atoms.end())
        throw std::invalid_argument("no assignment for atom '" + f->name + "'");
      return it->second;
    }
    case FKind::Top: return full;
    case FKind::Bot: return 0;
    case FKind::Not: return full & ~eval_formula(f->a, p, atoms);
    case FKind::And: return eval_formula(f->a, p, atoms) & eval_formula(f->b, p, atoms);
    case FKind::Or: return eval_formula(f->a, p, atoms) | eval_formula(f->b, p, atoms);
    case FKind::Imp:
      return (full & ~eval_formula(f->a, p, atoms)) | eval_formula(f->b, p, atoms);
    case FKind::Iff: {
      const Elem a = eval_formula(f->a, p, atoms);
      const Elem b = eval_formula(f->b, p, atoms);
      return full & ~(a ^ b);
    }
    case FKind::Box: {
      std::size_t lev;
      if (f->label.black_square) {
        lev = p.grid.size() - 1;
      } else {
        lev = p.grid.index_of(f->label.level);
        if (lev == OrdinalGrid::npos)
          throw std::invalid_argument("label " + f->label.str() + " is not a grid point");
      }
      return p.table[lev][eval_formula(f->a, p, atoms)];
    }
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace glpwb
