#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "glpwb/ordinal.hpp"

using namespace glpwb;

namespace {

Ordinal O(const char* s) { return Ordinal::parse(s); }

// Independent comparison oracle for ordinals whose exponents lie below w^3:
// encode each exponent w^2*a + w*b + c as a*10000 + b*100 + c and compare the
// resulting sparse coefficient vectors largest-exponent-first. Faithful while
// all exponent coefficients stay below 100.
std::optional<long long> exponent_code(const Ordinal& e) {
  long long code = 0;
  for (const auto& t : e.terms()) {
    if (!t.exponent.is_nat()) return std::nullopt;
    const std::uint64_t k = t.exponent.nat_value();
    if (k > 2 || t.coeff >= 100) return std::nullopt;
    long long scale = 1;
    for (std::uint64_t i = 0; i < k; ++i) scale *= 100;
    code += static_cast<long long>(t.coeff) * scale;
  }
  return code;
}

std::optional<std::vector<std::pair<long long, std::uint64_t>>> embed(const Ordinal& o) {
  std::vector<std::pair<long long, std::uint64_t>> v;
  for (const auto& t : o.terms()) {
    auto c = exponent_code(t.exponent);
    if (!c) return std::nullopt;
    v.emplace_back(*c, t.coeff);
  }
  return v;
}

int oracle_compare(const Ordinal& a, const Ordinal& b) {
  auto va = embed(a), vb = embed(b);
  REQUIRE(va);
  REQUIRE(vb);
  for (std::size_t i = 0; i < std::min(va->size(), vb->size()); ++i) {
    if ((*va)[i].first != (*vb)[i].first) return (*va)[i].first < (*vb)[i].first ? -1 : 1;
    if ((*va)[i].second != (*vb)[i].second) return (*va)[i].second < (*vb)[i].second ? -1 : 1;
  }
  if (va->size() != vb->size()) return va->size() < vb->size() ? -1 : 1;
  return 0;
}

// All notations with up to max_terms terms, exponents from the pool,
// coefficients 1..max_coeff.
void enumerate(const std::vector<Ordinal>& pool, std::size_t max_terms, std::uint64_t max_coeff,
               std::size_t start, std::vector<Ordinal::Term>& acc, std::vector<Ordinal>& out) {
  out.push_back(Ordinal::from_terms(acc));
  if (acc.size() == max_terms) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    for (std::uint64_t c = 1; c <= max_coeff; ++c) {
      acc.push_back({pool[i], c});
      enumerate(pool, max_terms, max_coeff, i + 1, acc, out);
      acc.pop_back();
    }
  }
}

std::vector<Ordinal> small_ordinals() {
  // Exponent pool descending, all <= w^2.
  const std::vector<Ordinal> pool = {O("w^2"), O("w+1"), O("w"),     O("3"),
                                     O("2"),   O("1"),   Ordinal()};
  std::vector<Ordinal::Term> acc;
  std::vector<Ordinal> out;
  enumerate(pool, 3, 2, 0, acc, out);
  return out;
}

Ordinal random_small(std::mt19937_64& rng) {
  static const std::vector<Ordinal> all = small_ordinals();
  return all[rng() % all.size()];
}

}  // namespace

TEST_CASE("comparison basics") {
  CHECK((O("w") <=> O("3")) == std::strong_ordering::greater);
  CHECK(O("0") == O("0"));
  CHECK((O("0") <=> O("0")) == std::strong_ordering::equal);
  // Frozen from the embedding oracle below.
  CHECK(oracle_compare(O("w^2*2+1"), O("w^2*2+w")) == -1);
  CHECK((O("w^2*2+1") <=> O("w^2*2+w")) == std::strong_ordering::less);
}

TEST_CASE("comparison agrees with the integer-embedding oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const Ordinal a = random_small(rng), b = random_small(rng);
    const int want = oracle_compare(a, b);
    const auto got = a <=> b;
    CHECK((want < 0) == (got == std::strong_ordering::less));
    CHECK((want == 0) == (got == std::strong_ordering::equal));
    CHECK((want > 0) == (got == std::strong_ordering::greater));
  }
}

TEST_CASE("comparison is a total order on random triples") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10000; ++i) {
    const Ordinal a = random_small(rng), b = random_small(rng), c = random_small(rng);
    // antisymmetry
    if (a < b) CHECK_FALSE(b < a);
    if (a < b && b < a) FAIL("both directions");
    // totality
    CHECK((a < b || b < a || a == b));
    // transitivity
    if (a < b && b < c) CHECK(a < c);
  }
}

TEST_CASE("successor basics") {
  CHECK(O("0").succ() == O("1"));
  CHECK(O("w").succ() == O("w+1"));
  CHECK(O("w^w+w*2").succ() == O("w^w+w*2+1"));
}

TEST_CASE("successor is immediate on the bounded enumeration") {
  const std::vector<Ordinal> all = small_ordinals();
  // No enumerated notation lies strictly between a and succ(a); in particular
  // this freezes succ(w^w+w*2) = w^w+w*2+1 against a brute-force sweep.
  std::vector<Ordinal> probe = all;
  probe.push_back(O("w^w+w*2"));
  probe.push_back(O("w^w+w*2+1"));
  for (const Ordinal& a : probe) {
    const Ordinal s = a.succ();
    CHECK(a < s);
    for (const Ordinal& c : probe) {
      const bool between = a < c && c < s;
      CHECK_FALSE(between);
    }
  }
}

TEST_CASE("limit, zero and successor-reachable partition the notations") {
  for (const Ordinal& a : small_ordinals()) {
    int flags = 0;
    if (a.is_zero()) ++flags;
    if (a.is_limit()) ++flags;
    // a is a successor notation iff it has a finite part.
    if (!a.terms().empty() && a.terms().back().exponent.is_zero()) {
      Ordinal pred = [&] {
        auto terms = a.terms();
        if (terms.back().coeff == 1)
          terms.pop_back();
        else
          terms.back().coeff -= 1;
        return Ordinal::from_terms(terms);
      }();
      CHECK(pred.succ() == a);
      ++flags;
    }
    CHECK(flags == 1);
  }
  CHECK_FALSE(O("0").is_limit());
  CHECK(O("w").is_limit());
  CHECK_FALSE(O("w^2+5").is_limit());
}

TEST_CASE("parse and print round trip") {
  CHECK(O("w^2*3+w+1").str() == "w^2*3+w+1");
  CHECK(O("0").str() == "0");
  CHECK(Ordinal::parse(O("w^w").str()) == O("w^w"));
  CHECK(O("w^(w+1)").str() == "w^(w+1)");
  CHECK(O("w^(w*2)+3").str() == "w^(w*2)+3");
  for (const Ordinal& a : small_ordinals()) CHECK(Ordinal::parse(a.str()) == a);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(O("1+w"), ParseError);      // increasing exponents
  CHECK_THROWS_AS(O("w+w"), ParseError);      // equal exponents
  CHECK_THROWS_AS(O("w*0"), ParseError);      // zero coefficient
  CHECK_THROWS_AS(O("w^"), ParseError);
  CHECK_THROWS_AS(O(""), ParseError);
  CHECK_THROWS_AS(O("w+"), ParseError);
  CHECK_THROWS_AS(O("5x"), ParseError);
}

TEST_CASE("grid order requirements") {
  auto grid = [](const char* spec) { return OrdinalGrid::parse(spec); };
  CHECK(check_order_requirements(grid("0,1,2,3")));
  OrdinalGrid g = OrdinalGrid::make({O("0"), O("1"), O("w")}, O("w+1"));
  CHECK(check_order_requirements(g));
  OrdinalGrid missing_zero = OrdinalGrid::make({O("1"), O("2")}, O("3"));
  CHECK_FALSE(check_order_requirements(missing_zero));
  OrdinalGrid cap_too_low = OrdinalGrid::make({O("0"), O("w")}, O("w"));
  CHECK_FALSE(check_order_requirements(cap_too_low));
  CHECK(grid("0,1,2,w").contains(O("w")));
  CHECK(grid("0,1,2").index_of(O("5")) == OrdinalGrid::npos);
}
