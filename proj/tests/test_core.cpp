#include <stdexcept>

#include "boolinv/anf.hpp"
#include "boolinv/corpus.hpp"
#include "boolinv/system.hpp"
#include "doctest.h"

using namespace boolinv;

namespace {

VarId v(std::uint32_t i) { return VarId{i}; }
Anf var(std::uint32_t i) { return Anf::variable(v(i)); }
Literal pos(std::uint32_t i) { return Literal{v(i), true}; }
Literal neg(std::uint32_t i) { return Literal{v(i), false}; }
Term term(std::vector<Literal> lits) { return Term::from_literals(std::move(lits)); }

// Shift-register graph system over x1 x2 x3 y1 y2 y3 = VarIds 0..5.
BoolSystem fsr_graph() {
  const Universe u = universe_range(0, 6);
  return BoolSystem({(var(1) ^ var(3)) ^ true, (var(2) ^ var(4)) ^ true,
                     (var(0) ^ (var(1) * var(2)) ^ var(5)) ^ true},
                    u);
}

}  // namespace

TEST_CASE("eval: examples") {
  const Universe u = universe_range(0, 4);
  const Anf f = var(0) ^ (var(1) * var(2));
  CHECK_FALSE(eval(f, Assignment::from_code(universe_range(0, 3), 0b111)));
  CHECK(eval(Anf::constant(true), Assignment::from_code(u, 0b0101)));
  // x1*x3 at (x1, x2, x3, x4) = (1, 0, 1, 0)
  CHECK(eval(var(0) * var(2), Assignment::from_code(u, 0b1010)));
}

TEST_CASE("eval: missing variable names the variable") {
  const Anf f = var(0) ^ var(3);
  try {
    eval(f, Assignment::from_code(universe_range(0, 3), 0));
    FAIL("expected an exception");
  } catch (const MissingVariableError& e) {
    CHECK(e.var() == v(3));
    CHECK(std::string(e.what()).find("#3") != std::string::npos);
  }
}

TEST_CASE("ratio: examples") {
  const Anf f = var(0) ^ (var(1) * var(2));
  CHECK(ratio(f, term({neg(1)})) == var(0));
  CHECK(ratio(f, term({neg(1)})).universe() == Universe{v(0), v(2)});
  CHECK(ratio(var(0) * var(2), term({pos(0), pos(2)})).is_one());
  // x1 + x2 x3 + y3 with x2 = 1 (y3 is VarId 5)
  const Anf g = var(0) ^ (var(1) * var(2)) ^ var(5);
  CHECK(ratio(g, term({pos(1)})) == (var(0) ^ var(2) ^ var(5)));
}

TEST_CASE("term_conjoin: examples") {
  CHECK(term_conjoin(term({pos(0)}), term({neg(1)})) == term({pos(0), neg(1)}));
  CHECK_FALSE(term_conjoin(term({pos(0)}), term({neg(0)})).has_value());
  // x2'x3' with y1'y2'y3'x1' (x1..x3 = 0..2, y1..y3 = 3..5)
  auto t = term_conjoin(term({neg(1), neg(2)}), term({neg(3), neg(4), neg(5), neg(0)}));
  REQUIRE(t);
  CHECK(*t == Term::minterm(universe_range(0, 6), 0));
}

TEST_CASE("Term: construction rejects x x'") {
  CHECK_THROWS_AS(term({pos(2), neg(2)}), std::invalid_argument);
  CHECK(term({pos(2), pos(2)}).size() == 1);
  CHECK(Term{}.empty());
}

TEST_CASE("is_implicant: examples") {
  const BoolSystem sys = fsr_graph();
  CHECK(is_implicant(term({neg(1), neg(2), neg(3), neg(4), neg(5), neg(0)}), sys));
  CHECK_FALSE(is_implicant(term({neg(1), neg(2)}), sys));
  const BoolSystem single({var(0)}, universe_range(0, 1));
  CHECK(is_implicant(term({pos(0)}), single));
  CHECK_FALSE(is_implicant(term({neg(0)}), single));
}

TEST_CASE("og_sum_is_tautology: examples") {
  CHECK(og_sum_is_tautology(ImplicantSet{{term({pos(0)}), term({neg(0)})}, universe_range(0, 1)}));

  const Universe y = universe_range(3, 3);
  std::vector<Term> all;
  for (std::uint64_t c = 0; c < 8; ++c) all.push_back(Term::minterm(y, c));
  CHECK(og_sum_is_tautology(ImplicantSet{all, y}));
  all.pop_back();
  CHECK_FALSE(og_sum_is_tautology(ImplicantSet{all, y}));

  const Universe y4 = universe_range(0, 4);
  CHECK_FALSE(og_sum_is_tautology(ImplicantSet{{Term::minterm(y4, 0b1110), Term::minterm(y4, 0b0010)}, y4}));

  // Mixed cube sizes: x1, x1' x2, x1' x2'
  CHECK(og_sum_is_tautology(
      ImplicantSet{{term({pos(0)}), term({neg(0), pos(1)}), term({neg(0), neg(1)})}, universe_range(0, 2)}));
}

TEST_CASE("og_sum_is_tautology: rejects overlapping families") {
  CHECK_THROWS_AS(og_sum_is_tautology(ImplicantSet{{term({pos(0)}), Term{}}, universe_range(0, 1)}),
                  std::invalid_argument);
}

TEST_CASE("satisfying_count: examples") {
  CHECK(satisfying_count(Term{}, universe_range(0, 3)) == 8);
  CHECK(satisfying_count(Term::minterm(universe_range(0, 5), 7), universe_range(0, 5)) == 1);
  CHECK(satisfying_count(term({neg(0)}), universe_range(0, 4)) == 8);
  CHECK_THROWS_AS(satisfying_count(term({pos(7)}), universe_range(0, 4)), std::invalid_argument);
}

TEST_CASE("Anf: canonical form and algebra") {
  const Anf f = var(0) ^ (var(1) * var(2)) ^ true;
  CHECK((f ^ f).is_zero());
  CHECK((var(0) * var(0)) == var(0));
  CHECK(((var(0) ^ true) * var(0)).is_zero());
  CHECK(Anf::from_monomials({{v(2), v(1)}, {v(1), v(2)}}).is_zero());
  CHECK_THROWS_AS(Anf::from_monomials({{v(5)}}, universe_range(0, 3)), std::invalid_argument);
  CHECK(Anf::from_term(term({pos(0), neg(1)})) == (var(0) ^ (var(0) * var(1))));
  CHECK(f.degree() == 2);
}

TEST_CASE("property: xor / and / ratio agree with pointwise evaluation") {
  corpus::Rng rng(11);
  for (int round = 0; round < 60; ++round) {
    const auto k = static_cast<std::uint32_t>(rng.between(1, 10));
    const Universe u = universe_range(0, k);
    const Anf f = corpus::random_sparse_anf(rng, u, 6, 4);
    const Anf g = corpus::random_sparse_anf(rng, u, 6, 4);
    const Anf sum = f ^ g;
    const Anf prod = f * g;

    std::vector<Literal> lits;
    for (VarId x : u) {
      if (rng.below(3) == 0) lits.push_back(Literal{x, rng.coin()});
    }
    const Term t = Term::from_literals(lits);
    const Anf cof = ratio(f, t);

    for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
      const auto a = Assignment::from_code(u, c);
      const bool fa = eval(f, a);
      const bool ga = eval(g, a);
      REQUIRE(eval(sum, a) == (fa != ga));
      REQUIRE(eval(prod, a) == (fa && ga));
      if (t.satisfied_by(a)) REQUIRE(eval(cof, a) == fa);
    }
  }
}

TEST_CASE("property: conjunction is commutative, associative and detects disjoint cubes") {
  corpus::Rng rng(5);
  const Universe u = universe_range(0, 6);
  auto random_term = [&] {
    std::vector<Literal> lits;
    for (VarId x : u) {
      if (rng.below(3) == 0) lits.push_back(Literal{x, rng.coin()});
    }
    return Term::from_literals(lits);
  };
  for (int round = 0; round < 300; ++round) {
    const Term a = random_term(), b = random_term(), c = random_term();
    REQUIRE(term_conjoin(a, b) == term_conjoin(b, a));
    auto ab = term_conjoin(a, b);
    auto bc = term_conjoin(b, c);
    auto left = ab ? term_conjoin(*ab, c) : std::nullopt;
    auto right = bc ? term_conjoin(a, *bc) : std::nullopt;
    REQUIRE(left == right);

    bool shared_point = false;
    for (std::uint64_t p = 0; p < 64 && !shared_point; ++p) {
      const auto pt = Assignment::from_code(u, p);
      shared_point = a.satisfied_by(pt) && b.satisfied_by(pt);
    }
    REQUIRE(ab.has_value() == shared_point);
    REQUIRE(orthogonal(a, b) == !shared_point);
  }
}

TEST_CASE("VarTable: lookup and duplicates") {
  VarTable t({"x1", "x2"});
  CHECK(t.find("x2") == v(1));
  CHECK_FALSE(t.find("x3"));
  CHECK_THROWS_AS(t.add("x1"), std::invalid_argument);
  CHECK(to_string(term({pos(0), neg(1)}), t) == "x1 x2'");
  CHECK(to_string(Term{}, t) == "1");
  CHECK(to_string((var(0) * var(1)) ^ true, t) == "x1*x2 + 1");
}
