#include "boolinv/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace boolinv::oracle {
namespace {

void require_cap(std::size_t vars, unsigned max_vars, const char* what) {
  if (vars > max_vars) {
    throw CapExceededError(std::string(what) + ": " + std::to_string(vars) +
                           " variables exceed the enumeration cap of " + std::to_string(max_vars));
  }
}

// Monomials of f as masks over `universe` codes (universe[0] is the top bit).
std::vector<std::uint64_t> compile(const Anf& f, const Universe& universe) {
  const std::size_t k = universe.size();
  std::vector<std::uint64_t> masks;
  for (const auto& m : f.monomials()) {
    std::uint64_t mask = 0;
    for (VarId v : m) {
      auto it = std::lower_bound(universe.begin(), universe.end(), v);
      if (it == universe.end() || *it != v) throw MissingVariableError(v);
      mask |= std::uint64_t{1} << (k - 1 - static_cast<std::size_t>(it - universe.begin()));
    }
    masks.push_back(mask);
  }
  return masks;
}

bool eval_compiled(const std::vector<std::uint64_t>& masks, std::uint64_t code) {
  bool acc = false;
  for (auto mask : masks) acc ^= (code & mask) == mask;
  return acc;
}

}  // namespace

TruthTable TruthTable::of(const Anf& f, const Universe& universe) {
  require_cap(universe.size(), kMaxVars, "truth table");
  const auto masks = compile(f, universe);
  TruthTable t{universe, std::vector<bool>(std::size_t{1} << universe.size())};
  for (std::uint64_t code = 0; code < t.bits.size(); ++code) t.bits[code] = eval_compiled(masks, code);
  return t;
}

CompiledMap::CompiledMap(const BoolMap& F) : n_(F.n_in()) {
  if (F.n_in() > 63 || F.m_out() > 63) throw CapExceededError("map too wide for 64-bit codes");
  const Universe in = F.inputs();
  for (const auto& c : F.coords()) coords_.push_back(compile(c, in));
}

std::uint64_t CompiledMap::operator()(std::uint64_t x) const {
  const std::size_t m = coords_.size();
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (eval_compiled(coords_[i], x)) y |= std::uint64_t{1} << (m - 1 - i);
  }
  return y;
}

std::vector<std::uint64_t> brute_image_serial(const BoolMap& F, unsigned max_vars) {
  require_cap(F.n_in(), max_vars, "brute_image");
  const CompiledMap eval(F);
  const std::uint64_t inputs = std::uint64_t{1} << F.n_in();
  std::vector<std::uint64_t> out;
  out.reserve(inputs);
  for (std::uint64_t x = 0; x < inputs; ++x) out.push_back(eval(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> brute_image_parallel(const BoolMap& F, int jobs, unsigned max_vars) {
  require_cap(F.n_in(), max_vars, "brute_image");
  const CompiledMap eval(F);
  const auto inputs = static_cast<std::int64_t>(std::uint64_t{1} << F.n_in());
  std::vector<std::uint64_t> out(static_cast<std::size_t>(inputs));
#pragma omp parallel for num_threads(jobs) schedule(static)
  for (std::int64_t x = 0; x < inputs; ++x) {
    out[static_cast<std::size_t>(x)] = eval(static_cast<std::uint64_t>(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> brute_image(const BoolMap& F, unsigned max_vars) {
  return brute_image_serial(F, max_vars);
}

std::uint64_t image_size_streaming(const BoolMap& F, int jobs, unsigned max_vars) {
  require_cap(F.n_in(), max_vars, "image_size_streaming");
  if (F.m_out() > 32) throw CapExceededError("image_size_streaming needs at most 32 outputs");
  const CompiledMap eval(F);
  const std::size_t words = std::max<std::size_t>(1, (std::size_t{1} << F.m_out()) / 64);
  std::vector<std::atomic<std::uint64_t>> seen(words);
  const auto inputs = static_cast<std::int64_t>(std::uint64_t{1} << F.n_in());
#pragma omp parallel for num_threads(jobs) schedule(static)
  for (std::int64_t x = 0; x < inputs; ++x) {
    const std::uint64_t y = eval(static_cast<std::uint64_t>(x));
    seen[y / 64].fetch_or(std::uint64_t{1} << (y % 64), std::memory_order_relaxed);
  }
  std::uint64_t count = 0;
  for (const auto& w : seen) count += static_cast<std::uint64_t>(__builtin_popcountll(w.load()));
  return count;
}

std::vector<std::uint64_t> brute_complement_of_image(const BoolMap& F, unsigned max_vars) {
  if (F.m_out() > 32) throw CapExceededError("complement of image limited to 32 outputs");
  const auto image = brute_image(F, max_vars);
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << F.m_out();
  std::size_t i = 0;
  for (std::uint64_t y = 0; y < total; ++y) {
    if (i < image.size() && image[i] == y) {
      ++i;
    } else {
      out.push_back(y);
    }
  }
  return out;
}

Injectivity brute_injective(const BoolMap& F, unsigned max_vars) {
  require_cap(F.n_in(), max_vars, "brute_injective");
  const CompiledMap eval(F);
  const std::uint64_t inputs = std::uint64_t{1} << F.n_in();
  Injectivity out;

  if (F.m_out() <= 32) {
    std::vector<std::uint64_t> seen(std::max<std::size_t>(1, (std::size_t{1} << F.m_out()) / 64), 0);
    for (std::uint64_t x2 = 0; x2 < inputs; ++x2) {
      const std::uint64_t y = eval(x2);
      const std::uint64_t bit = std::uint64_t{1} << (y % 64);
      if (seen[y / 64] & bit) {
        std::uint64_t x1 = 0;
        while (eval(x1) != y) ++x1;
        out.witness = std::make_pair(x1, x2);
        return out;
      }
      seen[y / 64] |= bit;
    }
    out.injective = true;
    return out;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  pairs.reserve(inputs);
  for (std::uint64_t x = 0; x < inputs; ++x) pairs.emplace_back(eval(x), x);
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    // pairs[i] is the second preimage of its output when it follows the first.
    if (pairs[i].first == pairs[i - 1].first && (i < 2 || pairs[i - 2].first != pairs[i].first)) {
      if (!out.witness || pairs[i].second < out.witness->second) {
        out.witness = std::make_pair(pairs[i - 1].second, pairs[i].second);
      }
    }
  }
  out.injective = !out.witness;
  return out;
}

SolutionSet brute_solutions(const BoolSystem& sys, unsigned max_vars) {
  require_cap(sys.universe.size(), max_vars, "brute_solutions");
  std::vector<std::vector<std::uint64_t>> factors;
  for (const auto& h : sys.factors) factors.push_back(compile(h, sys.universe));
  SolutionSet out{sys.universe, {}};
  const std::uint64_t points = std::uint64_t{1} << sys.universe.size();
  for (std::uint64_t code = 0; code < points; ++code) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](const auto& masks) { return eval_compiled(masks, code); });
    if (ok) out.codes.push_back(code);
  }
  return out;
}

ValidationReport validate_implicant_set(const ImplicantSet& I, const BoolSystem& sys, unsigned max_vars) {
  const Universe& u = sys.universe;
  const std::size_t k = u.size();
  require_cap(k, max_vars, "validate_implicant_set");

  std::vector<bool> is_solution(std::size_t{1} << k, false);
  for (auto code : brute_solutions(sys, max_vars).codes) is_solution[code] = true;

  std::vector<std::uint8_t> cover(is_solution.size(), 0);
  ValidationReport report;
  for (const auto& t : I.terms) {
    std::uint64_t fixed_mask = 0, fixed_value = 0;
    for (const auto& l : t.literals()) {
      auto it = std::lower_bound(u.begin(), u.end(), l.var);
      if (it == u.end() || *it != l.var) {
        throw std::invalid_argument("implicant mentions a variable outside the system universe");
      }
      const std::uint64_t bit = std::uint64_t{1} << (k - 1 - static_cast<std::size_t>(it - u.begin()));
      fixed_mask |= bit;
      if (l.positive) fixed_value |= bit;
    }
    const std::uint64_t all = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    const std::uint64_t free_mask = all & ~fixed_mask;
    // Enumerate every subset of the free positions.
    std::uint64_t sub = 0;
    do {
      const std::uint64_t point = fixed_value | sub;
      if (cover[point] < 2) ++cover[point];
      sub = (sub - free_mask) & free_mask;
    } while (sub != 0);
  }

  for (std::uint64_t p = 0; p < cover.size(); ++p) {
    if (cover[p] > 0 && !is_solution[p] && report.sound) {
      report.sound = false;
      report.unsound_point = p;
    }
    if (cover[p] == 0 && is_solution[p] && report.complete) {
      report.complete = false;
      report.uncovered_point = p;
    }
    if (cover[p] > 1 && report.orthogonal) {
      report.orthogonal = false;
      report.overlap_point = p;
    }
  }
  return report;
}

}  // namespace boolinv::oracle
