#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hgterm/rational.hpp"

namespace hgterm {

/// {z : corner_i <= z_i <= corner_i + size}.
struct LatticeBox {
  IntVec corner;
  std::int64_t size = 0;

  std::size_t arity() const { return corner.size(); }
  bool contains(std::span<const std::int64_t> z) const;

  /// Visits every point in lexicographic order; stops early when the visitor returns false.
  void for_each(const std::function<bool(const IntVec&)>& visit) const;

  bool operator==(const LatticeBox&) const = default;
};

/// {z : lo_i <= z_i <= hi_i}, one range per axis.
struct Window {
  IntVec lo;
  IntVec hi;

  static Window from_box(const LatticeBox& b);
  /// Bounding box of the points, inflated by margin on every side.
  static Window around(const std::vector<IntVec>& points, std::int64_t margin);

  std::size_t arity() const { return lo.size(); }
  bool contains(std::span<const std::int64_t> z) const;
  std::size_t point_count() const;
  /// Lexicographic order; stops early when the visitor returns false.
  void for_each(const std::function<bool(const IntVec&)>& visit) const;

  bool operator==(const Window&) const = default;
};

}  // namespace hgterm
