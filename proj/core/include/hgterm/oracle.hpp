#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgterm/box.hpp"
#include "hgterm/structure.hpp"
#include "hgterm/termratio.hpp"

namespace hgterm {

enum class PropagationFailure { none, blocked, out_of_window };

/// One recurrence application: from `from` along +-e_i (step = +-(i+1)),
/// multiplying the value by `factor`.
struct PropagationStep {
  IntVec from;
  int step = 0;
  Rat factor;
  bool operator==(const PropagationStep&) const = default;
};

struct PropagationResult {
  std::optional<Rat> value;
  PropagationFailure failure = PropagationFailure::none;
  std::vector<PropagationStep> certificate;

  bool ok() const { return value.has_value(); }
};

struct PropagationOptions {
  /// Default: bounding box of seed and target inflated by 2(k+1).
  std::optional<Window> window;
  /// Randomizes the step order at every node; otherwise +e_1..+e_k, -e_1..-e_k.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Values of a term over a window, propagated breadth first from a seed.
class PropagationField {
 public:
  PropagationField(const TermSpec& spec, const Seed& seed, Window window,
                   std::optional<std::uint64_t> shuffle_seed = std::nullopt);

  const Window& window() const { return window_; }
  std::optional<Rat> value(std::span<const std::int64_t> z) const;
  /// Value with its path certificate, or the failure reason.
  PropagationResult result(std::span<const std::int64_t> z) const;

 private:
  std::size_t index(std::span<const std::int64_t> z) const;

  Window window_;
  std::vector<std::size_t> stride_;
  std::vector<std::optional<Rat>> values_;
  std::vector<int> parent_step_;  // step that reached the node, 0 for the seed
  std::vector<Rat> step_factor_;
};

PropagationResult propagate(const TermSpec& spec, const Seed& from, const IntVec& to,
                            const PropagationOptions& options = {});

/// Replays a certificate from the seed; nothing when a step does not apply.
std::optional<Rat> replay(const TermSpec& spec, const Seed& from,
                          const std::vector<PropagationStep>& certificate);

struct Mismatch {
  IntVec z;
  Rat closed;
  Rat oracle;
  bool operator==(const Mismatch&) const = default;
};

struct CompareReport {
  std::size_t checked = 0;
  std::size_t equal = 0;
  std::size_t on_H = 0;
  std::size_t d_zero = 0;
  /// Oracle could not reach the point, or the piece value is unknown.
  std::size_t blocked = 0;
  std::vector<Mismatch> mismatches;
  bool operator==(const CompareReport&) const = default;
};

/// Closed form against propagation at every point of the window.
CompareReport grid_compare(const PiecewiseStructure& ps, const TermSpec& spec,
                           const Window& window);

/// A box of size n in the window on which propagated values are all defined
/// and nonzero.
std::optional<LatticeBox> nonzero_box_search(const TermSpec& spec, std::int64_t n,
                                             const Window& window);

}  // namespace hgterm
