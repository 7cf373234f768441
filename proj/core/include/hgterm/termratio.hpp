#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgterm/geometry.hpp"
#include "hgterm/poly.hpp"

namespace hgterm {

/// scalar * prod base^exponent. Bases are normalized (content 1, positive
/// leading coefficient), nonconstant and pairwise coprime; exponents nonzero.
class FactoredRational {
 public:
  struct Factor {
    MultiPoly base;
    std::int64_t exponent = 0;
    bool operator==(const Factor&) const = default;
  };

  /// The constant 1.
  explicit FactoredRational(std::size_t arity = 0);
  /// Normalizes and refines the factor list; bases must be nonzero.
  FactoredRational(std::size_t arity, Rat scalar, std::vector<Factor> factors);

  static FactoredRational constant(std::size_t arity, const Rat& c);
  static FactoredRational from_poly(const MultiPoly& p);
  /// num / den, refined; both nonzero.
  static FactoredRational quotient(const MultiPoly& num, const MultiPoly& den);

  std::size_t arity() const { return arity_; }
  const Rat& scalar() const { return scalar_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return scalar_ == 1 && factors_.empty(); }
  bool is_constant() const { return factors_.empty(); }

  /// scalar times the positive-exponent part.
  MultiPoly numerator() const;
  /// The negative-exponent part.
  MultiPoly denominator() const;

  FactoredRational inverse() const;
  FactoredRational pow(std::int64_t e) const;
  /// q(z) = r(z + w)
  FactoredRational shift(std::span<const std::int64_t> w) const;

  /// Value at z, or nothing when a denominator base vanishes there.
  std::optional<Rat> evaluate(std::span<const std::int64_t> z) const;

  friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational operator/(const FactoredRational& a, const FactoredRational& b) {
    return a * b.inverse();
  }
  /// Equality as rational functions.
  bool operator==(const FactoredRational& o) const;

  std::string to_string() const;

 private:
  void refine();

  std::size_t arity_;
  Rat scalar_ = 1;
  std::vector<Factor> factors_;  // sorted by base
};

struct Seed {
  IntVec point;
  Rat value;
  bool operator==(const Seed&) const = default;
};

/// A term given by its shift quotients R_i = f(z + e_i) / f(z).
struct TermSpec {
  std::size_t k = 0;
  std::vector<FactoredRational> generators;
  /// Common factor multiplied into both A_i and B_i; 1 unless the term was
  /// extended by zero or the input quotient was not reduced.
  std::vector<MultiPoly> guards;
  MeasureZeroSet exceptions;
  std::optional<Seed> seed;
  std::optional<MultiPoly> zero_divisor_witness;
  bool honest = true;

  /// Spec with the given generators and unit guards.
  static TermSpec from_generators(std::vector<FactoredRational> generators);

  /// A_i with A_i(z) f(z) = B_i(z) f(z + e_i).
  MultiPoly A(std::size_t i) const;
  MultiPoly B(std::size_t i) const;
  const MultiPoly& guard(std::size_t i) const;

  /// Throws DimensionError on inconsistent arity.
  void validate() const;

  bool operator==(const TermSpec&) const = default;
};

/// R_{e_i} R_{e_j}(z + e_i) == R_{e_j} R_{e_i}(z + e_j) for all i < j.
bool check_compatibility(const TermSpec& spec);

/// R_w, composed axis by axis. Throws CocycleError on incompatible input.
FactoredRational compose_direction(const TermSpec& spec, std::span<const std::int64_t> w);

/// Same as compose_direction with an explicit order of unit steps (+-(i+1)
/// for +-e_i); used to compare composition routes.
FactoredRational compose_along(const TermSpec& spec, const std::vector<int>& steps);

/// Spec of f restricted to `support` and zero elsewhere.
TermSpec extend_by_zero(const TermSpec& spec, const PolyhedralRegion& support);

}  // namespace hgterm
