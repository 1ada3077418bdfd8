#include <filesystem>

#include "boolinv/corpus.hpp"
#include "boolinv/problem_file.hpp"
#include "doctest.h"

using namespace boolinv;

namespace {

Anf x(std::uint32_t i) { return Anf::variable(VarId{i}); }

io::ParseError parse_error(std::string_view text) {
  try {
    io::parse_problem(text);
  } catch (const io::ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return io::ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parse_problem: map") {
  const auto p = io::parse_problem("# shift\nvars: x1 x2 x3\ny1 = x2\ny2 = x3\ny3 = x1 + x2*x3\n");
  const auto* F = std::get_if<BoolMap>(&p);
  REQUIRE(F);
  CHECK(F->n_in() == 3);
  CHECK(F->coords()[2] == (x(0) ^ (x(1) * x(2))).with_universe(universe_range(0, 3)));
  CHECK(std::string(io::kind_name(p)) == "map");
}

TEST_CASE("parse_problem: system and separators") {
  const auto p = io::parse_problem("vars: a b\n0 = a + 1; 0 = b\n");
  const auto* s = std::get_if<io::SystemProblem>(&p);
  REQUIRE(s);
  CHECK(s->vars.names() == std::vector<std::string>{"a", "b"});
  // 0 = a + 1 is the factor a; 0 = b is the factor b + 1.
  REQUIRE(s->system.factors.size() == 2);
  CHECK(s->system.factors[0] == x(0).with_universe(universe_range(0, 2)));
  CHECK(s->system.factors[1] == (x(1) ^ true).with_universe(universe_range(0, 2)));
}

TEST_CASE("parse_problem: polynomial") {
  const auto p = io::parse_problem("field: n=4 modulus=10011\npoly: 3*X^2 + X + 1\n");
  const auto* poly = std::get_if<gf2n::UniPoly>(&p);
  REQUIRE(poly);
  CHECK(poly->spec().modulus() == 0b10011);
  CHECK(poly->coeffs() == std::vector<std::uint32_t>{1, 1, 3});
  const auto d = io::parse_problem("field: n=4\npoly: X^3");
  CHECK(std::get<gf2n::UniPoly>(d).spec().modulus() == gf2n::default_modulus(4));
}

TEST_CASE("parse_problem: errors carry line and column") {
  auto e = parse_error("vars: x1\ny1 = x1 + x9\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 11);
  CHECK(std::string(e.what()).find("line 2, column 11") == 0);

  e = parse_error("vars: x1 x2\ny1 = x1\ny1 = x2\n");
  CHECK(e.line() == 3);
  e = parse_error("vars: x1\nx1 = x1\n");
  CHECK(e.line() == 2);
  e = parse_error("vars: x1\ny1 = x1\n0 = x1\n");
  CHECK(e.line() == 3);
  e = parse_error("vars: x1\ny1 = (x1\n");
  CHECK(e.line() == 2);
  e = parse_error("field: n=3 modulus=1111\npoly: X\n");
  CHECK(e.line() == 1);
  e = parse_error("# nothing\n");
  CHECK(e.line() == 1);
  CHECK_THROWS_AS(io::read_problem_file(std::filesystem::path(BOOLINV_FIXTURES) / "missing.txt"),
                  std::runtime_error);
}

TEST_CASE("read_problem_file: fixtures") {
  const std::filesystem::path dir(BOOLINV_FIXTURES);
  CHECK(std::holds_alternative<BoolMap>(io::read_problem_file(dir / "example1.txt")));
  CHECK(std::holds_alternative<io::SystemProblem>(io::read_problem_file(dir / "unique.txt")));
  CHECK(std::holds_alternative<gf2n::UniPoly>(io::read_problem_file(dir / "x3_f8.txt")));
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    CAPTURE(entry.path().string());
    const auto p = io::read_problem_file(entry.path());
    CHECK(io::parse_problem(io::print_problem(p)) == p);
  }
}

TEST_CASE("property: print then parse is the identity") {
  const auto maps = corpus::map_corpus(5, corpus::MapCorpusSpec{});
  for (const auto& F : maps) {
    const io::Problem p = F;
    REQUIRE(io::parse_problem(io::print_problem(p)) == p);
  }
  for (const auto& sys : corpus::system_corpus(6, 100, 12, 8)) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sys.universe.size(); ++i) names.push_back("v" + std::to_string(i + 1));
    const io::Problem p = io::SystemProblem{VarTable(names), sys};
    REQUIRE(io::parse_problem(io::print_problem(p)) == p);
  }
  corpus::Rng rng(2);
  for (int round = 0; round < 50; ++round) {
    const auto spec = gf2n::FieldSpec::with_default_modulus(static_cast<unsigned>(rng.between(1, 16)));
    std::vector<std::uint32_t> coeffs(rng.between(1, 8));
    for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng.below(spec.order()));
    const io::Problem p = gf2n::UniPoly(spec, coeffs);
    REQUIRE(io::parse_problem(io::print_problem(p)) == p);
  }
}
