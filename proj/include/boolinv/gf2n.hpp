#pragma once

#include <cstdint>
#include <vector>

#include "boolinv/engine.hpp"
#include "boolinv/map_analysis.hpp"

namespace boolinv::gf2n {

inline constexpr unsigned kMaxDegree = 16;

/// F_{2^n} in the polynomial basis {1, a, ..., a^(n-1)}. The modulus is the
/// bit vector of its coefficients, bit k holding the coefficient of X^k
/// (X^3 + X + 1 is 0b1011).
class FieldSpec {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= kMaxDegree and `modulus`
  /// is an irreducible polynomial of degree exactly n.
  FieldSpec(unsigned n, std::uint32_t modulus);

  /// Uses the built-in irreducible polynomial for degree n.
  static FieldSpec with_default_modulus(unsigned n);

  unsigned n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return std::uint32_t{1} << n_; }

  bool operator==(const FieldSpec&) const = default;

 private:
  unsigned n_;
  std::uint32_t modulus_;
};

/// Built-in modulus for degree n (1 <= n <= kMaxDegree).
std::uint32_t default_modulus(unsigned n);

/// Exhaustive trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

/// Field element; bit i of `bits` is the coefficient of a^i.
struct FieldElem {
  FieldSpec spec;
  std::uint32_t bits = 0;

  bool operator==(const FieldElem&) const = default;
};

FieldElem element(const FieldSpec& spec, std::uint32_t bits);

/// Each throws std::invalid_argument on operands from different fields.
FieldElem gf_add(const FieldElem& a, const FieldElem& b);
FieldElem gf_mul(const FieldElem& a, const FieldElem& b);
FieldElem gf_pow(const FieldElem& a, std::uint64_t e);
/// Multiplicative inverse; throws std::domain_error for zero.
FieldElem gf_inv(const FieldElem& a);

/// Univariate polynomial with coefficients in one field; index = exponent.
class UniPoly {
 public:
  UniPoly(FieldSpec spec, std::vector<std::uint32_t> coeffs);

  const FieldSpec& spec() const { return spec_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  FieldElem evaluate(const FieldElem& x) const;

  bool operator==(const UniPoly&) const = default;

 private:
  FieldSpec spec_;
  std::vector<std::uint32_t> coeffs_;
};

/// In-place Moebius transform over F2 on a table of 2^k entries; it is its
/// own inverse and maps truth tables to ANF coefficient tables.
void moebius_transform(std::vector<std::uint8_t>& table);

/// Coordinates f_1..f_n of x -> p(x): input x_{i+1} and output y_{i+1} carry
/// the coefficient of a^i. Throws CapExceededError above `max_degree`.
BoolMap coordinate_functions(const UniPoly& p, unsigned max_degree = kMaxDegree);

/// Permutation test through invertibility of the coordinate map.
bool is_permutation_polynomial(const UniPoly& p, const EngineConfig& cfg = {});

}  // namespace boolinv::gf2n
