#include "boolinv/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "boolinv/collision.hpp"
#include "boolinv/engine.hpp"
#include "boolinv/gf2n.hpp"
#include "boolinv/oracle.hpp"
#include "boolinv/problem_file.hpp"
#include "json.hpp"

namespace boolinv::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial files stand for their coordinate map.
BoolMap need_map(const io::Problem& p, const std::string& command) {
  if (const auto* map = std::get_if<BoolMap>(&p)) return *map;
  if (const auto* poly = std::get_if<gf2n::UniPoly>(&p)) return gf2n::coordinate_functions(*poly);
  throw UsageError("'" + command + "' needs a map or polynomial file, got a " + std::string(io::kind_name(p)) +
                   " file");
}

std::string image_bits(const BoolMap& F, const Assignment& x) {
  std::string out;
  for (const auto& f : F.coords()) out += eval(f, x) ? '1' : '0';
  return out;
}

Json witness_json(const BoolMap& F, const std::optional<Collision>& w) {
  if (!w) return nullptr;
  return Json{{"x", to_bitstring(w->x)}, {"x_tilde", to_bitstring(w->x_tilde)}, {"image", image_bits(F, w->x)}};
}

Json verdict_json(const BoolMap& F, const Verdict& v) {
  Json j;
  j["one_to_one"] = v.one_to_one;
  j["y_minterm_count"] = v.y_minterm_count;
  j["implicant_count"] = v.implicant_count;
  j["witness"] = witness_json(F, v.witness);
  return j;
}

Json complement_json(const BoolMap& F, const ImageComplement& c, std::uint64_t cap) {
  Json j;
  if (c.count) {
    j["count"] = *c.count;
  } else {
    j["count"] = nullptr;
  }
  j["enumerated"] = c.enumerated;
  if (c.enumerated) {
    Json points = Json::array();
    for (auto p : c.points) points.push_back(to_bitstring(p, c.width));
    j["points"] = std::move(points);
  } else {
    // Symbolic form: every listed Y-minterm is excluded from the set.
    const VarTable names = F.graph_table();
    Json covered = Json::array();
    for (const auto& s : c.covered) covered.push_back(to_string(s, names));
    j["notice"] = "more than " + std::to_string(cap) + " points; set = {Y : s(Y) = 0 for every s in covered}";
    j["covered"] = std::move(covered);
  }
  return j;
}

Json oracle_map_json(const BoolMap& F, std::uint64_t cap, int& exit_code) {
  const auto inj = oracle::brute_injective(F);
  Json j;
  j["injective"] = inj.injective;
  if (inj.witness) {
    j["witness"] = Json{{"x", to_bitstring(inj.witness->first, F.n_in())},
                        {"x_tilde", to_bitstring(inj.witness->second, F.n_in())}};
  } else {
    j["witness"] = nullptr;
  }
  if (F.n_in() <= oracle::kMaxMaterialized) {
    j["image_size"] = oracle::brute_image(F).size();
  } else {
    j["image_size"] = oracle::image_size_streaming(F);
  }
  if (F.m_out() <= 32) {
    const std::uint64_t total = std::uint64_t{1} << F.m_out();
    const std::uint64_t missing = total - j["image_size"].get<std::uint64_t>();
    j["complement_count"] = missing;
    if (missing <= cap && F.n_in() <= oracle::kMaxMaterialized) {
      Json points = Json::array();
      for (auto p : oracle::brute_complement_of_image(F)) points.push_back(to_bitstring(p, F.m_out()));
      j["complement"] = std::move(points);
    }
  }
  exit_code = inj.injective ? kExitDecided : kExitNegative;
  return j;
}

Json run_command(const Options& o, const io::Problem& problem, int& exit_code) {
  const EngineConfig cfg{o.bound, o.jobs, true};
  Json doc;
  const std::string& cmd = o.command;

  if (cmd == "implicants") {
    ImplicantSet set;
    VarTable names;
    if (const auto* sys = std::get_if<io::SystemProblem>(&problem)) {
      set = implicants(sys->system, cfg);
      names = sys->vars;
    } else {
      const BoolMap F = need_map(problem, cmd);
      set = implicants(build_graph_system(F), cfg);
      names = F.graph_table();
    }
    doc["satisfiable"] = !set.terms.empty();
    doc["implicant_count"] = set.terms.size();
    Json terms = Json::array();
    for (const auto& t : set.terms) terms.push_back(to_string(t, names));
    doc["implicants"] = std::move(terms);
  } else if (cmd == "invert") {
    const BoolMap F = need_map(problem, cmd);
    const auto v = is_invertible_square(F, cfg);
    doc["verdict"] = verdict_json(F, v);
    doc["goe"] = complement_json(F, goe(F, cfg, o.max_enum), o.max_enum);
    exit_code = v.one_to_one ? kExitDecided : kExitNegative;
  } else if (cmd == "goe" || cmd == "coi") {
    const BoolMap F = need_map(problem, cmd);
    const auto c = cmd == "goe" ? goe(F, cfg, o.max_enum) : coi(F, cfg, o.max_enum);
    doc[cmd] = complement_json(F, c, o.max_enum);
  } else if (cmd == "one2one") {
    const BoolMap F = need_map(problem, cmd);
    const auto v = is_one_to_one_general(F, cfg);
    doc["verdict"] = verdict_json(F, v);
    exit_code = v.one_to_one ? kExitDecided : kExitNegative;
  } else if (cmd == "diag") {
    const BoolMap F = need_map(problem, cmd);
    const auto d = is_one_to_one_diagonal(F, cfg, o.max_enum);
    Json v;
    v["one_to_one"] = d.verdict.one_to_one;
    v["implicant_count"] = d.verdict.implicant_count;
    v["witness"] = witness_json(F, d.verdict.witness);
    if (d.equals_diagonal_set) {
      v["equals_diagonal_set"] = *d.equals_diagonal_set;
    } else {
      v["equals_diagonal_set"] = nullptr;
    }
    doc["verdict"] = std::move(v);
    exit_code = d.verdict.one_to_one ? kExitDecided : kExitNegative;
  } else if (cmd == "unique") {
    const auto* sys = std::get_if<io::SystemProblem>(&problem);
    if (!sys) throw UsageError("'unique' needs a system file (lines like `0 = x1 + 1`)");
    const auto u = unique_solution(sys->system, cfg);
    doc["result"] = to_string(u.kind);
    if (u.solution) {
      Json sol;
      for (VarId v : sys->system.universe) sol[sys->vars.name(v)] = u.solution->at(v) ? 1 : 0;
      doc["solution"] = std::move(sol);
    } else {
      doc["solution"] = nullptr;
    }
  } else if (cmd == "permpoly") {
    const auto* p = std::get_if<gf2n::UniPoly>(&problem);
    if (!p) throw UsageError("'permpoly' needs a polynomial file (field: and poly: lines)");
    const BoolMap F = gf2n::coordinate_functions(*p);
    const auto v = is_invertible_square(F, cfg);
    doc["permutation"] = v.one_to_one;
    doc["verdict"] = verdict_json(F, v);
    exit_code = v.one_to_one ? kExitDecided : kExitNegative;
  } else if (cmd == "oracle") {
    if (const auto* map = std::get_if<BoolMap>(&problem)) {
      doc["oracle"] = oracle_map_json(*map, o.max_enum, exit_code);
    } else if (const auto* p = std::get_if<gf2n::UniPoly>(&problem)) {
      doc["oracle"] = oracle_map_json(gf2n::coordinate_functions(*p), o.max_enum, exit_code);
    } else {
      const auto& sys = std::get<io::SystemProblem>(problem);
      const auto sols = oracle::brute_solutions(sys.system);
      Json j;
      j["solution_count"] = sols.codes.size();
      if (sols.codes.size() <= o.max_enum) {
        Json points = Json::array();
        for (auto c : sols.codes) points.push_back(to_bitstring(c, sys.system.universe.size()));
        j["solutions"] = std::move(points);
      }
      const auto report = oracle::validate_implicant_set(implicants(sys.system, cfg), sys.system);
      j["engine_check"] = Json{{"sound", report.sound}, {"complete", report.complete}, {"orthogonal", report.orthogonal}};
      doc["oracle"] = std::move(j);
    }
  } else {
    throw UsageError("unknown subcommand '" + cmd + "'");
  }
  return doc;
}

void render_text(const Json& j, const std::string& prefix, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      render_text(v, key, os);
    } else if (v.is_array()) {
      os << key << ": " << v.size() << " item(s)\n";
      for (const auto& item : v) os << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
    } else if (v.is_string()) {
      os << key << ": " << v.get<std::string>() << '\n';
    } else if (v.is_null()) {
      os << key << ": -\n";
    } else {
      os << key << ": " << v.dump() << '\n';
    }
  }
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::ostringstream os;
  render_text(doc, "", os);
  return os.str();
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> kCommands = {"implicants", "invert", "goe",      "one2one", "coi",
                                                     "unique",     "diag",   "permpoly", "oracle"};
  return kCommands;
}

Outcome run(const Options& options, std::string_view problem_text) {
  Outcome outcome;
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = options.command;
  try {
    if (options.format != "text" && options.format != "json") {
      throw UsageError("--format must be text or json");
    }
    if (options.bound < 1 || options.bound > kMaxBaseBound) {
      throw UsageError("--bound must lie in [1, " + std::to_string(kMaxBaseBound) + "]");
    }
    if (options.jobs < 1) throw UsageError("--jobs must be at least 1");

    const auto start = std::chrono::steady_clock::now();
    const io::Problem problem = io::parse_problem(problem_text);
    doc["kind"] = io::kind_name(problem);
    int exit_code = kExitDecided;
    Json body = run_command(options, problem, exit_code);
    for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
    doc["engine"] = Json{{"bound", options.bound}, {"deterministic", true}};
    if (options.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      doc["engine"]["jobs"] = options.jobs;
      doc["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    outcome.exit_code = exit_code;
  } catch (const std::exception& e) {
    outcome.exit_code = kExitError;
    outcome.err = std::string("error: ") + e.what() + "\n";
    doc["error"] = e.what();
  }
  outcome.out = render(doc, options.format);
  return outcome;
}

Outcome run_file(const Options& options, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Outcome o;
    o.exit_code = kExitError;
    o.err = "error: cannot open " + path + "\n";
    return o;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return run(options, buffer.str());
}

}  // namespace boolinv::cli
