#include <stdexcept>

#include "boolinv/corpus.hpp"
#include "boolinv/map_analysis.hpp"
#include "boolinv/oracle.hpp"
#include "doctest.h"

using namespace boolinv;

namespace {

Anf x(std::uint32_t i) { return Anf::variable(VarId{i}); }

BoolMap example1() {
  return BoolMap(4, {x(0) * x(2), x(1) * x(2), x(0) * x(3), (x(1) * x(3)) ^ true});
}

BoolMap fsr3() { return BoolMap(3, {x(1), x(2), x(0) ^ (x(1) * x(2))}); }

BoolMap parity_embed() { return BoolMap(2, {x(0), x(1), x(0) ^ x(1)}); }

BoolMap and_twice() { return BoolMap(2, {x(0) * x(1), x(0) * x(1)}); }

std::vector<std::uint64_t> bits(std::initializer_list<const char*> codes) {
  std::vector<std::uint64_t> out;
  for (const char* c : codes) out.push_back(std::stoull(c, nullptr, 2));
  return out;
}

void check_witness(const BoolMap& F, const Collision& w) {
  REQUIRE(w.x.code() != w.x_tilde.code());
  for (const auto& f : F.coords()) REQUIRE(eval(f, w.x) == eval(f, w.x_tilde));
}

void check_complement(const BoolMap& F, const ImageComplement& c) {
  const auto expected = oracle::brute_complement_of_image(F);
  REQUIRE(c.count);
  REQUIRE(*c.count == expected.size());
  REQUIRE(c.enumerated);
  REQUIRE(c.points == expected);
}

}  // namespace

TEST_CASE("BoolMap: names and validation") {
  const BoolMap F = fsr3();
  CHECK(F.n_in() == 3);
  CHECK(F.m_out() == 3);
  CHECK(F.input_names() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(F.output_names() == std::vector<std::string>{"y1", "y2", "y3"});
  CHECK(F.graph_table().name(VarId{4}) == "y2");
  CHECK_THROWS_AS(BoolMap(2, {x(2)}), std::invalid_argument);
}

TEST_CASE("build_graph_system: one factor per output") {
  const BoolSystem sys = build_graph_system(fsr3());
  CHECK(sys.factors.size() == 3);
  CHECK(sys.universe == universe_range(0, 6));
  // x2 + y1 + 1
  CHECK(sys.factors[0] == ((x(1) ^ x(3)) ^ true));
}

TEST_CASE("graph_implicants: every s-factor is a full Y-minterm") {
  const auto parts = graph_implicants(fsr3());
  CHECK(parts.size() == 8);
  for (const auto& p : parts) {
    CHECK(p.s.size() == 3);
    for (const auto& l : p.r.literals()) CHECK(l.var.index < 3);
  }
  const auto split = split_xy(Term::minterm(universe_range(0, 6), 0b101011), fsr3());
  CHECK(split.r == Term::minterm(universe_range(0, 3), 0b101));
  CHECK(split.s == Term::minterm(universe_range(3, 3), 0b011));
}

TEST_CASE("is_invertible_square: examples") {
  auto v = is_invertible_square(fsr3());
  CHECK(v.one_to_one);
  CHECK(v.y_minterm_count == 8);
  CHECK_FALSE(v.witness);

  CHECK(is_invertible_square(BoolMap(3, {x(0), x(1), x(2)})).one_to_one);

  v = is_invertible_square(example1());
  CHECK_FALSE(v.one_to_one);
  CHECK(v.y_minterm_count == 10);
  REQUIRE(v.witness);
  check_witness(example1(), *v.witness);

  CHECK_THROWS_WITH_AS(is_invertible_square(parity_embed()), doctest::Contains("is_one_to_one_general"),
                       std::invalid_argument);
}

TEST_CASE("goe: examples") {
  const auto g = goe(example1());
  REQUIRE(g.count);
  CHECK(*g.count == 6);
  CHECK(g.points == bits({"0110", "0111", "1000", "1010", "1100", "1111"}));
  CHECK(goe(fsr3()).points.empty());
  CHECK(goe(and_twice()).points == bits({"01", "10"}));
}

TEST_CASE("goe: symbolic form past the enumeration cap") {
  const auto g = goe(example1(), {}, 2);
  CHECK_FALSE(g.enumerated);
  CHECK(g.points.empty());
  REQUIRE(g.count);
  CHECK(*g.count == 6);
  CHECK(g.covered.size() == 10);
  const auto sols = oracle::brute_solutions(g.defining_system());
  CHECK(sols.codes == bits({"0110", "0111", "1000", "1010", "1100", "1111"}));
}

TEST_CASE("is_one_to_one_general and coi: examples") {
  const auto v = is_one_to_one_general(parity_embed());
  CHECK(v.one_to_one);
  CHECK(v.y_minterm_count == 4);
  CHECK(coi(parity_embed()).points == bits({"001", "010", "100", "111"}));

  const BoolMap squash(3, {x(0) ^ x(2), x(1)});
  const auto w = is_one_to_one_general(squash);
  CHECK_FALSE(w.one_to_one);
  REQUIRE(w.witness);
  check_witness(squash, *w.witness);
  CHECK_THROWS_AS(coi(squash), std::invalid_argument);
}

TEST_CASE("unique_solution: examples") {
  const Universe u = universe_range(0, 2);
  const BoolSystem one({x(0), x(1) ^ true}, u);
  const auto r = unique_solution(one);
  CHECK(r.kind == UniqueSolution::Kind::unique);
  REQUIRE(r.solution);
  CHECK(r.solution->code() == 0b10);

  CHECK(unique_solution(BoolSystem({x(0), x(0) ^ true}, u)).kind == UniqueSolution::Kind::none);
  const auto many = unique_solution(BoolSystem({x(0) ^ x(1)}, u));
  CHECK(many.kind == UniqueSolution::Kind::multiple);
  CHECK_FALSE(many.solution);
  CHECK(std::string(to_string(UniqueSolution::Kind::multiple)) == "MULTIPLE");
}

TEST_CASE("property: verdicts and complements agree with the oracle") {
  corpus::MapCorpusSpec spec;
  spec.count = 160;
  spec.n_max = 9;
  const auto maps = corpus::map_corpus(17, spec);
  std::size_t index = 0;
  for (const auto& F : maps) {
    CAPTURE(index++);
    const EngineConfig cfg{static_cast<int>(2 + index % 11), 1, true};
    const auto truth = oracle::brute_injective(F);
    const auto image = oracle::brute_image(F);
    const auto v = is_one_to_one_general(F, cfg);
    REQUIRE(v.one_to_one == truth.injective);
    REQUIRE(v.y_minterm_count == image.size());
    if (v.witness) check_witness(F, *v.witness);
    REQUIRE(v.witness.has_value() == !truth.injective);
    if (F.m_out() == F.n_in()) {
      REQUIRE(is_invertible_square(F, cfg).one_to_one == truth.injective);
      check_complement(F, goe(F, cfg));
    } else {
      check_complement(F, coi(F, cfg));
    }
  }
}

TEST_CASE("property: unique_solution agrees with solution counts") {
  for (const auto& sys : corpus::system_corpus(23, 120, 10, 12)) {
    const auto count = oracle::brute_solutions(sys).codes.size();
    const auto r = unique_solution(sys);
    const auto expected = count == 0   ? UniqueSolution::Kind::none
                          : count == 1 ? UniqueSolution::Kind::unique
                                       : UniqueSolution::Kind::multiple;
    REQUIRE(r.kind == expected);
    if (r.solution) {
      for (const auto& h : sys.factors) REQUIRE(eval(h, *r.solution));
    }
  }
}
