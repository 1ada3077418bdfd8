#include <stdexcept>

#include "boolinv/corpus.hpp"
#include "boolinv/oracle.hpp"
#include "doctest.h"

using namespace boolinv;

namespace {

Anf x(std::uint32_t i) { return Anf::variable(VarId{i}); }

BoolMap example1() {
  return BoolMap(4, {x(0) * x(2), x(1) * x(2), x(0) * x(3), (x(1) * x(3)) ^ true});
}

}  // namespace

TEST_CASE("CompiledMap: x1 and y1 are the most significant bits") {
  const BoolMap shift(3, {x(1), x(2), x(0)});
  const oracle::CompiledMap F(shift);
  CHECK(F(0b100) == 0b001);
  CHECK(F(0b011) == 0b110);
  const auto tt = oracle::TruthTable::of(x(0) * x(2), universe_range(0, 3));
  CHECK(tt.at(0b101));
  CHECK_FALSE(tt.at(0b001));
}

TEST_CASE("brute_image: example") {
  const auto image = oracle::brute_image(example1());
  CHECK(image.size() == 10);
  CHECK(oracle::brute_complement_of_image(example1()) ==
        std::vector<std::uint64_t>{0b0110, 0b0111, 0b1000, 0b1010, 0b1100, 0b1111});
  CHECK(oracle::image_size_streaming(example1()) == 10);
}

TEST_CASE("brute_injective: first colliding pair") {
  const auto r = oracle::brute_injective(example1());
  CHECK_FALSE(r.injective);
  REQUIRE(r.witness);
  CHECK(r.witness->first == 0b0000);
  CHECK(r.witness->second == 0b0001);
  CHECK(oracle::brute_injective(BoolMap(2, {x(0), x(1), x(0) ^ x(1)})).injective);
}

TEST_CASE("brute_solutions: examples") {
  const Universe u = universe_range(0, 2);
  const auto s = oracle::brute_solutions(BoolSystem({x(0) ^ x(1)}, u));
  CHECK(s.codes == std::vector<std::uint64_t>{0b01, 0b10});
  CHECK(s.assignment(1).get(VarId{0}) == true);
  CHECK(oracle::brute_solutions(BoolSystem({x(0), x(0) ^ true}, u)).codes.empty());
}

TEST_CASE("oracle: arity limits") {
  std::vector<Anf> coords;
  for (std::uint32_t i = 0; i < 17; ++i) coords.push_back(x(i));
  const BoolMap wide(17, coords);
  CHECK_THROWS_AS(oracle::brute_image(wide), CapExceededError);
  std::vector<Anf> many;
  for (std::uint32_t i = 0; i < 25; ++i) many.push_back(x(i));
  CHECK_THROWS_AS(oracle::brute_injective(BoolMap(25, many)), CapExceededError);
}

TEST_CASE("validate_implicant_set: reports each defect") {
  const Universe u = universe_range(0, 2);
  const BoolSystem sys({x(0) ^ x(1)}, u);
  auto t = [&](std::uint64_t c) { return Term::minterm(u, c); };
  CHECK(oracle::validate_implicant_set(ImplicantSet{{t(0b01), t(0b10)}, u}, sys).ok());

  const auto missing = oracle::validate_implicant_set(ImplicantSet{{t(0b01)}, u}, sys);
  CHECK_FALSE(missing.complete);
  CHECK(missing.uncovered_point == 0b10);

  const auto wrong = oracle::validate_implicant_set(ImplicantSet{{t(0b01), t(0b10), t(0b11)}, u}, sys);
  CHECK_FALSE(wrong.sound);
  CHECK(wrong.unsound_point == 0b11);

  const Term x1 = Term::from_literals({Literal{VarId{0}, true}});
  const auto overlap = oracle::validate_implicant_set(ImplicantSet{{t(0b01), t(0b10), x1}, u}, sys);
  CHECK_FALSE(overlap.orthogonal);
  CHECK(overlap.overlap_point == 0b10);
}

TEST_CASE("property: serial and parallel kernels agree") {
  corpus::MapCorpusSpec spec;
  spec.count = 40;
  spec.n_min = 6;
  spec.n_max = 14;
  for (const auto& F : corpus::map_corpus(77, spec)) {
    const auto serial = oracle::brute_image_serial(F);
    for (int jobs : {1, 2, 4}) {
      REQUIRE(oracle::brute_image_parallel(F, jobs) == serial);
      REQUIRE(oracle::image_size_streaming(F, jobs) == serial.size());
    }
    const auto comp = oracle::brute_complement_of_image(F);
    REQUIRE(comp.size() + serial.size() == (std::uint64_t{1} << F.m_out()));
  }
}
