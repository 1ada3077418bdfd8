#include "boolinv/gf2n.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace boolinv::gf2n {
namespace {

int degree_of(std::uint64_t poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree_of(m);
  for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t out = 0;
  for (std::uint64_t x = a; b != 0; b >>= 1, x <<= 1) {
    if (b & 1U) out ^= x;
  }
  return out;
}

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (!(a.spec == b.spec)) throw std::invalid_argument("field elements from different fields");
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = degree_of(poly);
  if (d < 1) return false;
  for (std::uint32_t q = 2; degree_of(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(unsigned n) {
  static constexpr std::array<std::uint32_t, kMaxDegree + 1> kTable = {
      0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,    0x11D,
      0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("no built-in modulus for degree " + std::to_string(n));
  }
  return kTable[n];
}

FieldSpec::FieldSpec(unsigned n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("field degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  }
  if (degree_of(modulus) != static_cast<int>(n)) {
    throw std::invalid_argument("modulus degree does not match n = " + std::to_string(n));
  }
  if (!is_irreducible(modulus)) throw std::invalid_argument("modulus is reducible over F2");
}

FieldSpec FieldSpec::with_default_modulus(unsigned n) { return FieldSpec(n, default_modulus(n)); }

FieldElem element(const FieldSpec& spec, std::uint32_t bits) {
  if (bits >= spec.order()) throw std::invalid_argument("element has more than n coefficient bits");
  return FieldElem{spec, bits};
}

FieldElem gf_add(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return FieldElem{a.spec, a.bits ^ b.bits};
}

FieldElem gf_mul(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return FieldElem{a.spec, static_cast<std::uint32_t>(poly_mod(clmul(a.bits, b.bits), a.spec.modulus()))};
}

FieldElem gf_pow(const FieldElem& a, std::uint64_t e) {
  FieldElem result{a.spec, 1};
  FieldElem base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1U) result = gf_mul(result, base);
    base = gf_mul(base, base);
  }
  return result;
}

FieldElem gf_inv(const FieldElem& a) {
  if (a.bits == 0) throw std::domain_error("zero has no inverse");
  return gf_pow(a, a.spec.order() - 2);
}

UniPoly::UniPoly(FieldSpec spec, std::vector<std::uint32_t> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c >= spec_.order()) throw std::invalid_argument("coefficient does not fit the field");
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldElem UniPoly::evaluate(const FieldElem& x) const {
  if (!(x.spec == spec_)) throw std::invalid_argument("evaluation point from a different field");
  FieldElem acc{spec_, 0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = gf_add(gf_mul(acc, x), FieldElem{spec_, *it});
  }
  return acc;
}

void moebius_transform(std::vector<std::uint8_t>& table) {
  const std::size_t size = table.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("truth table length must be a power of two");
  }
  for (std::size_t step = 1; step < size; step <<= 1) {
    for (std::size_t i = 0; i < size; ++i) {
      if (i & step) table[i] ^= table[i ^ step];
    }
  }
}

BoolMap coordinate_functions(const UniPoly& p, unsigned max_degree) {
  const unsigned n = p.spec().n();
  if (n > max_degree) {
    throw CapExceededError("field degree " + std::to_string(n) + " exceeds the enumeration cap " +
                           std::to_string(max_degree));
  }
  const std::uint32_t size = p.spec().order();
  std::vector<std::uint32_t> values(size);
  for (std::uint32_t x = 0; x < size; ++x) values[x] = p.evaluate(FieldElem{p.spec(), x}).bits;

  // Table index i has bit j = x_{j+1}; after the transform, index i is the
  // coefficient of the monomial over exactly those variables.
  const Universe inputs = universe_range(0, n);
  std::vector<Anf> coords;
  coords.reserve(n);
  std::vector<std::uint8_t> table(size);
  for (unsigned out = 0; out < n; ++out) {
    for (std::uint32_t x = 0; x < size; ++x) table[x] = (values[x] >> out) & 1U;
    moebius_transform(table);
    std::vector<Monomial> monomials;
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      if (!table[mask]) continue;
      Monomial m;
      for (unsigned j = 0; j < n; ++j) {
        if ((mask >> j) & 1U) m.push_back(VarId{j});
      }
      monomials.push_back(std::move(m));
    }
    coords.push_back(Anf::from_monomials(std::move(monomials), inputs));
  }
  return BoolMap(n, std::move(coords));
}

bool is_permutation_polynomial(const UniPoly& p, const EngineConfig& cfg) {
  return is_invertible_square(coordinate_functions(p), cfg).one_to_one;
}

}  // namespace boolinv::gf2n
