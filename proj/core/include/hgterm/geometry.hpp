#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "hgterm/box.hpp"
#include "hgterm/poly.hpp"
#include "hgterm/rational.hpp"

namespace hgterm {

/// {z : v . z = n}, kept canonical: v primitive with first nonzero entry
/// positive. A hyperplane whose scaled offset is not integral contains no
/// lattice point and is flagged empty.
class Hyperplane {
 public:
  Hyperplane() = default;
  /// Canonicalizes; v must be nonzero.
  Hyperplane(IntVec v, std::int64_t n);

  const IntVec& normal() const { return v_; }
  std::int64_t offset() const { return n_; }
  bool empty() const { return empty_; }
  std::size_t arity() const { return v_.size(); }
  bool contains(std::span<const std::int64_t> z) const;

  auto operator<=>(const Hyperplane&) const = default;

 private:
  IntVec v_;
  std::int64_t n_ = 0;
  bool empty_ = false;
};

/// {z : v . z > n}. `v . z >= n` is written as `v . z > n - 1`.
struct HalfSpace {
  IntVec v;
  std::int64_t gt = 0;

  bool contains(std::span<const std::int64_t> z) const { return dot(v, z) > gt; }
  HalfSpace opposite_closed() const { return {scaled(v, -1), -gt - 1}; }  // v . z <= gt
  auto operator<=>(const HalfSpace&) const = default;
};

/// Intersection of finitely many half-spaces; no constraints means all of Z^k.
class PolyhedralRegion {
 public:
  explicit PolyhedralRegion(std::size_t arity = 0) : arity_(arity) {}
  PolyhedralRegion(std::size_t arity, std::vector<HalfSpace> constraints);

  static PolyhedralRegion whole(std::size_t arity) { return PolyhedralRegion(arity); }

  std::size_t arity() const { return arity_; }
  const std::vector<HalfSpace>& constraints() const { return constraints_; }
  bool contains(std::span<const std::int64_t> z) const;

  PolyhedralRegion intersect(const HalfSpace& h) const;
  PolyhedralRegion intersect(const PolyhedralRegion& other) const;

  bool operator==(const PolyhedralRegion&) const = default;

 private:
  std::size_t arity_;
  std::vector<HalfSpace> constraints_;
};

/// Finite union of hyperplanes, deduplicated under canonical form.
class MeasureZeroSet {
 public:
  MeasureZeroSet() = default;
  explicit MeasureZeroSet(std::vector<Hyperplane> hs);

  void add(const Hyperplane& h);
  void add(const MeasureZeroSet& other);
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  bool covers(std::span<const std::int64_t> z) const;

  bool operator==(const MeasureZeroSet&) const = default;

 private:
  std::vector<Hyperplane> hyperplanes_;  // sorted
};

/// Membership test; throws on arity mismatch.
bool contains(const PolyhedralRegion& r, std::span<const std::int64_t> z);

struct Erosion {
  PolyhedralRegion region;
  MeasureZeroSet cover;
};

/// Points z of r whose box {z, size n} lies in r, plus hyperplanes covering
/// the removed part.
Erosion erode(const PolyhedralRegion& r, std::int64_t n);

/// Open cells of the arrangement that contain lattice points. Cells come
/// from splitting by each hyperplane in turn, positive side first.
std::vector<PolyhedralRegion> arrangement(const std::vector<Hyperplane>& hs, std::size_t arity);

struct MeasureZeroVerdict {
  bool measure_zero = false;
  MeasureZeroSet cover;  // populated when measure_zero
};

/// True iff the region holds no arbitrarily large boxes, i.e. its lattice
/// points are empty or the recession cone of its closure has empty interior.
MeasureZeroVerdict is_measure_zero(const PolyhedralRegion& r);

/// A box of the requested size inside r, when one can be located.
std::optional<LatticeBox> box_in_region(const PolyhedralRegion& r, std::int64_t size);

/// Some lattice point of r; nothing when r is empty or none was found by the
/// bounded search (a warning is logged in that case).
std::optional<IntVec> find_lattice_point(const PolyhedralRegion& r);

/// True when the rational closure {v . z >= gt + 1} is empty.
bool rationally_empty(const PolyhedralRegion& r);

/// Drops constraints implied by the others over the rationals.
PolyhedralRegion simplify(const PolyhedralRegion& r);

struct PathOptions {
  std::optional<std::int64_t> margin;  // default (max step magnitude) * (k + 1)
};

/// Breadth-first search for a path with steps in `steps` staying in `ambient`,
/// restricted to the bounding box of {from, to} inflated by the margin.
std::optional<std::vector<IntVec>> s_path(const IntVec& from, const IntVec& to,
                                          const PolyhedralRegion& ambient,
                                          const std::vector<IntVec>& steps,
                                          const PathOptions& options = {});

/// {+-e_1, ..., +-e_k}
std::vector<IntVec> lattice_steps(std::size_t k);

/// Membership in the lattice points of the convex hull of two unit boxes.
class HullPoints {
 public:
  HullPoints(LatticeBox b0, LatticeBox b1);
  bool operator()(std::span<const std::int64_t> z) const;
  /// Bounding box of both boxes.
  LatticeBox bounding_box() const;

 private:
  LatticeBox b0_;
  LatticeBox b1_;
};

HullPoints hull_points(const LatticeBox& b0, const LatticeBox& b1);

/// Per direction e_i, linear factors p with p(z) chi(z) = p(z) chi(z + e_i),
/// chi being the characteristic function of r.
struct Certificate {
  std::size_t arity = 0;
  std::vector<MultiPoly> factors;  // linear factors v . z - m
  MultiPoly product() const;
  MeasureZeroSet zero_set() const;
};

std::vector<Certificate> characteristic_certificates(const PolyhedralRegion& r);

}  // namespace hgterm
