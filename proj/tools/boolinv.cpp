#include <iostream>

#include "CLI11.hpp"
#include "boolinv/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invertibility, Garden-of-Eden and implicant analysis of Boolean maps"};
  boolinv::cli::Options options;
  std::string path;

  app.add_option("command", options.command, "Subcommand")
      ->required()
      ->check(CLI::IsMember(boolinv::cli::subcommands()));
  app.add_option("file", path, "Problem file")->required();
  app.add_option("--bound", options.bound, "Largest support solved by minterm enumeration")
      ->capture_default_str();
  app.add_option("--jobs", options.jobs, "Worker threads for the implicant engine")->capture_default_str();
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-enum", options.max_enum, "Largest point set printed explicitly")
      ->capture_default_str();
  app.add_flag("--timing", options.timing, "Report wall time and worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : boolinv::cli::kExitError;
  }

  const auto outcome = boolinv::cli::run_file(options, path);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
