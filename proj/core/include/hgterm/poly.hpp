#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgterm/box.hpp"
#include "hgterm/rational.hpp"

namespace hgterm {

/// Exponent vector of a monomial.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class UniPoly;

/// Multivariate polynomial in z1..zk with exact rational coefficients.
/// No zero coefficient is ever stored; the zero polynomial has no terms.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexLess>;

  explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Rat& c);
  static MultiPoly variable(std::size_t arity, std::size_t i);
  /// v . z + c
  static MultiPoly linear_form(std::span<const std::int64_t> v, const Rat& c = 0);
  static MultiPoly monomial(const Monomial& m, const Rat& c);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term, or the value of a constant polynomial.
  Rat constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t i) const;
  bool depends_on(std::size_t i) const { return degree_in(i) > 0; }

  /// Leading term under the graded lexicographic order; requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rat& leading_coefficient() const;

  void add_term(const Monomial& m, const Rat& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  /// Arbitrary total order used for canonical sorting.
  bool operator<(const MultiPoly& o) const;

  MultiPoly pow(unsigned e) const;

  Rat evaluate(std::span<const std::int64_t> z) const;
  Rat evaluate(std::span<const Rat> z) const;

  /// q(z) = p(z + v)
  MultiPoly shift(std::span<const std::int64_t> v) const;
  MultiPoly derivative(std::size_t i) const;

  /// Gcd of numerators over lcm of denominators, positive; zero for the zero polynomial.
  Rat content() const;
  /// Content 1 with positive leading coefficient.
  MultiPoly normalized() const;

  std::string to_string() const;

 private:
  void check_arity(const MultiPoly& o) const;

  std::size_t arity_;
  TermMap terms_;
};

/// Univariate polynomial; coefficients stored lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  /// t - r
  static UniPoly linear_root(const Rat& r) { return UniPoly({-r, Rat(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  const Rat& leading() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rat& c);
  bool operator==(const UniPoly& o) const = default;

  UniPoly pow(unsigned e) const;
  /// (quotient, remainder); divisor nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  Rat evaluate(const Rat& t) const;
  /// q(t) = p(t + c)
  UniPoly shift(const Rat& c) const;
  UniPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UniPoly primitive() const;
  /// p(v . z + c) as a polynomial in z.
  MultiPoly compose_linear(std::span<const std::int64_t> v, std::int64_t c = 0) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Greatest common divisor normalized to content 1 with positive graded-lex
/// leading coefficient. gcd(p, 0) is normalized p; gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

/// Exact quotient p / q, or nothing when q does not divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Representation p(z) = pbar(v . z) with v primitive (first nonzero entry positive).
struct SimpleForm {
  IntVec direction;
  UniPoly pbar;
};

/// Detects whether p is a univariate polynomial in one linear form.
/// Constants yield the zero direction. Throws on the zero polynomial.
std::optional<SimpleForm> detect_simple(const MultiPoly& p);

/// A point of the box where p does not vanish. Requires box.size >= total_degree(p);
/// returns nothing only for the zero polynomial.
std::optional<IntVec> find_nonzero_in_box(const MultiPoly& p, const LatticeBox& box);

/// Roots with multiplicity and the cofactor left after removing them.
struct RootSplit {
  std::vector<Rat> roots;
  UniPoly cofactor;
};

RootSplit rational_roots(const UniPoly& p);
/// Integer roots only; non-integral rational roots stay in the cofactor.
struct IntegerRootSplit {
  std::vector<std::int64_t> roots;
  UniPoly cofactor;
};
IntegerRootSplit integer_roots(const UniPoly& p);

}  // namespace hgterm
