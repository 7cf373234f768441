#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgterm/geometry.hpp"
#include "hgterm/oresato.hpp"

namespace hgterm {

struct Piece {
  PolyhedralRegion region;
  IntVec z0;
  std::optional<Rat> f0;  // nothing when the seed does not reach the piece
  bool operator==(const Piece&) const = default;
};

/// f(z) = f(z0) C(z)/C(z0) D(z0)/D(z) gamma^(z-z0) prod_v gp(v.z0, v.z, a_v/b_v)
/// on each piece; H collects the measure-zero remainder.
struct PiecewiseStructure {
  std::size_t k = 0;
  OreSatoForm form;
  std::vector<Piece> pieces;
  MeasureZeroSet H;
  bool zero_divisor = false;
  /// Hyperplanes fed to the arrangement, after deduplication.
  std::size_t arrangement_size = 0;
  bool operator==(const PiecewiseStructure&) const = default;
};

PiecewiseStructure build_structure(const TermSpec& spec);

enum class Undefined { none, measure_zero, uncovered, d_zero, value_unknown };

struct ClosedFormValue {
  std::optional<Rat> value;
  Undefined reason = Undefined::none;
  std::optional<std::size_t> piece;
};

/// Points on H are undefined even when a piece region contains them.
ClosedFormValue closed_form_eval(const PiecewiseStructure& ps, std::span<const std::int64_t> z);

/// prod_{j=1}^{w.z+n} a(j)/b(j)
struct FactorialChain {
  IntVec v;
  IntVec w;
  UniPoly a;
  UniPoly b;
  std::int64_t n = 0;
  bool operator==(const FactorialChain&) const = default;
};

/// f(z) = scalar gamma^z C(z)/D(z) prod_chains prod_{j=1}^{w.z+n} a(j)/b(j) on region.
struct FactorialForm {
  std::size_t k = 0;
  std::size_t piece = 0;
  PolyhedralRegion region;
  std::vector<FactorialChain> chains;
  MultiPoly C;
  MultiPoly D;
  std::vector<Rat> gamma;
  Rat scalar;
  bool operator==(const FactorialForm&) const = default;
};

/// Splits every piece with a known value by the sign of v.(z - z0), v in V.
std::vector<FactorialForm> split_factorial(const PiecewiseStructure& ps);

/// Value at z, or nothing when D(z) = 0. Throws IntegrityError on a negative
/// product length or a vanishing denominator term.
std::optional<Rat> factorial_eval(const FactorialForm& ff, std::span<const std::int64_t> z);

struct PochhammerSymbol {
  Rat m;
  IntVec v;
  std::int64_t r = 0;
  bool operator==(const PochhammerSymbol&) const = default;
};

/// f(z) = scalar gamma^z C(z)/D(z) prod (m_i)_{v_i.z+r_i} / prod (n_j)_{w_j.z+s_j}
struct PochhammerForm {
  std::size_t k = 0;
  std::size_t piece = 0;
  PolyhedralRegion region;
  std::vector<Rat> gamma;
  Rat scalar;
  MultiPoly C;
  MultiPoly D;
  std::vector<PochhammerSymbol> numerator;
  std::vector<PochhammerSymbol> denominator;
  bool operator==(const PochhammerForm&) const = default;
};

/// Throws SplittingError when a chain polynomial has an irrational root.
PochhammerForm to_pochhammer(const FactorialForm& ff);

/// (m)_r = m (m+1) ... (m+r-1); throws IntegrityError for r < 0.
Rat pochhammer(const Rat& m, std::int64_t r);

std::optional<Rat> pochhammer_eval(const PochhammerForm& pf, std::span<const std::int64_t> z);

}  // namespace hgterm
