// Writes a seeded corpus of problem files for regression fixtures.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "boolinv/corpus.hpp"
#include "boolinv/problem_file.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate random map / system problem files"};
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::string kind = "maps";
  std::string out_dir = ".";
  std::size_t max_vars = 12;
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--count", count)->capture_default_str();
  app.add_option("--kind", kind)->check(CLI::IsMember({"maps", "systems"}))->capture_default_str();
  app.add_option("--max-vars", max_vars, "Variables per system / largest map arity")->capture_default_str();
  app.add_option("--out", out_dir)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  std::vector<boolinv::io::Problem> problems;
  if (kind == "maps") {
    boolinv::corpus::MapCorpusSpec spec;
    spec.count = count;
    spec.n_max = std::max<std::size_t>(spec.n_min, max_vars);
    for (auto& m : boolinv::corpus::map_corpus(seed, spec)) problems.emplace_back(std::move(m));
  } else {
    for (auto& s : boolinv::corpus::system_corpus(seed, count, max_vars, 10)) {
      boolinv::VarTable names;
      for (std::size_t i = 0; i < s.universe.size(); ++i) names.add("v" + std::to_string(i + 1));
      problems.emplace_back(boolinv::io::SystemProblem{std::move(names), std::move(s)});
    }
  }
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto path = std::filesystem::path(out_dir) / (kind + "_" + std::to_string(seed) + "_" + std::to_string(i) + ".txt");
    std::ofstream(path) << "# seed " << seed << " item " << i << "\n" << boolinv::io::print_problem(problems[i]);
  }
  std::cout << "wrote " << problems.size() << " files to " << out_dir << "\n";
  return 0;
}
