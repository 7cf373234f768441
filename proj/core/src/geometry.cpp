#include "hgterm/geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "hgterm/errors.hpp"
#include "hgterm/log.hpp"

namespace hgterm {

namespace {

void require_arity(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + ": expected arity " + std::to_string(expected) +
                         ", got " + std::to_string(got));
  }
}

// ---- Fourier-Motzkin over the rationals: rows a . x >= b ----

struct Row {
  std::vector<Rat> a;
  Rat b;
};

struct System {
  std::size_t vars = 0;
  std::vector<Row> rows;
  bool infeasible = false;
};

// Scales so the first nonzero coefficient has magnitude one and keeps the
// tightest bound per direction.
System canonical(System s) {
  std::map<std::vector<Rat>, Rat> best;
  for (auto& r : s.rows) {
    auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rat& x) { return sgn(x) != 0; });
    if (it == r.a.end()) {
      if (sgn(r.b) > 0) s.infeasible = true;
      continue;
    }
    Rat scale = abs(*it);
    for (auto& x : r.a) x /= scale;
    r.b /= scale;
    auto [pos, inserted] = best.emplace(r.a, r.b);
    if (!inserted && r.b > pos->second) pos->second = r.b;
  }
  s.rows.clear();
  if (s.infeasible) return s;
  for (auto& [a, b] : best) s.rows.push_back({a, b});
  return s;
}

System eliminate(const System& s, std::size_t j) {
  System out;
  out.vars = s.vars;
  out.infeasible = s.infeasible;
  std::vector<const Row*> pos, neg;
  for (const auto& r : s.rows) {
    int sg = sgn(r.a[j]);
    if (sg > 0) {
      pos.push_back(&r);
    } else if (sg < 0) {
      neg.push_back(&r);
    } else {
      out.rows.push_back(r);
    }
  }
  for (const Row* p : pos) {
    for (const Row* n : neg) {
      Row c;
      Rat fp = -n->a[j];
      Rat fn = p->a[j];
      c.a.resize(s.vars);
      for (std::size_t i = 0; i < s.vars; ++i) c.a[i] = fp * p->a[i] + fn * n->a[i];
      c.a[j] = 0;
      c.b = fp * p->b + fn * n->b;
      out.rows.push_back(std::move(c));
    }
  }
  return canonical(std::move(out));
}

System closure(const PolyhedralRegion& r, std::size_t extra = 0) {
  System s;
  s.vars = r.arity() + extra;
  for (const auto& h : r.constraints()) {
    Row row;
    row.a.assign(s.vars, Rat(0));
    for (std::size_t i = 0; i < h.v.size(); ++i) row.a[i] = h.v[i];
    row.b = Rat(h.gt) + 1;
    s.rows.push_back(std::move(row));
  }
  return canonical(std::move(s));
}

bool feasible(System s) {
  for (std::size_t j = 0; j < s.vars && !s.infeasible; ++j) s = eliminate(s, j);
  return !s.infeasible;
}

// Supremum of c . z over the closure: nullopt for +infinity. Sets `empty`
// when the closure has no points.
std::optional<Rat> supremum(const PolyhedralRegion& r, std::span<const std::int64_t> c,
                            bool& empty) {
  const std::size_t k = r.arity();
  System s = closure(r, 1);
  Row up, down;
  up.a.assign(k + 1, Rat(0));
  down.a.assign(k + 1, Rat(0));
  for (std::size_t i = 0; i < k; ++i) {
    up.a[i] = c[i];
    down.a[i] = -c[i];
  }
  up.a[k] = -1;
  down.a[k] = 1;
  s.rows.push_back(up);
  s.rows.push_back(down);
  s = canonical(std::move(s));
  for (std::size_t j = 0; j < k && !s.infeasible; ++j) s = eliminate(s, j);
  empty = s.infeasible;
  if (empty) return std::nullopt;
  std::optional<Rat> best;
  for (const auto& row : s.rows) {
    if (sgn(row.a[k]) < 0) {
      Rat bound = row.b / row.a[k];
      if (!best || bound < *best) best = bound;
    }
  }
  return best;
}

// ---- integer witness by back-substitution over the projections ----

constexpr int kCandidatesPerLevel = 64;
constexpr long kMaxNodes = 10000;

struct WitnessSearch {
  std::vector<System> proj;  // proj[m]: constraints on x_0..x_m
  IntVec x;
  long nodes = 0;

  bool bounds(std::size_t m, std::optional<Int>& lo, std::optional<Int>& hi) const {
    std::optional<Rat> l, h;
    for (const auto& row : proj[m].rows) {
      Rat rest = row.b;
      for (std::size_t i = 0; i < m; ++i) rest -= row.a[i] * x[i];
      int sg = sgn(row.a[m]);
      if (sg == 0) {
        if (sgn(rest) > 0) return false;
        continue;
      }
      Rat bound = rest / row.a[m];
      if (sg > 0) {
        if (!l || bound > *l) l = bound;
      } else {
        if (!h || bound < *h) h = bound;
      }
    }
    if (l) lo = ceil_rat(*l);
    if (h) hi = floor_rat(*h);
    return !(lo && hi && *lo > *hi);
  }

  bool run(std::size_t m) {
    if (m == x.size()) return true;
    if (++nodes > kMaxNodes) return false;
    std::optional<Int> lo, hi;
    if (!bounds(m, lo, hi)) return false;
    std::vector<Int> order;
    if (lo && hi) {
      Int mid = (*lo + *hi) / 2;
      if (mid < *lo) mid = *lo;
      for (int d = 0; static_cast<int>(order.size()) < kCandidatesPerLevel; ++d) {
        bool any = false;
        Int a = mid + d;
        if (a <= *hi) {
          order.push_back(a);
          any = true;
        }
        Int b = mid - d - 1;
        if (b >= *lo) {
          order.push_back(b);
          any = true;
        }
        if (!any) break;
      }
    } else if (lo) {
      for (int d = 0; d < kCandidatesPerLevel; ++d) order.push_back(*lo + d);
    } else if (hi) {
      for (int d = 0; d < kCandidatesPerLevel; ++d) order.push_back(*hi - d);
    } else {
      order.push_back(0);
      for (int d = 1; static_cast<int>(order.size()) < kCandidatesPerLevel; ++d) {
        order.push_back(Int(d));
        order.push_back(Int(-d));
      }
    }
    for (const auto& c : order) {
      x[m] = to_int64(c);
      if (run(m + 1)) return true;
      if (nodes > kMaxNodes) return false;
    }
    return false;
  }
};

std::optional<IntVec> witness(const PolyhedralRegion& r, bool warn) {
  const std::size_t k = r.arity();
  System full = closure(r);
  if (full.infeasible) return std::nullopt;
  WitnessSearch ws;
  ws.proj.resize(k);
  System cur = full;
  for (std::size_t m = k; m-- > 0;) {
    ws.proj[m] = cur;
    cur = eliminate(cur, m);
    if (cur.infeasible) return std::nullopt;
  }
  ws.x.assign(k, 0);
  if (k == 0) return IntVec{};
  if (ws.run(0) && r.contains(ws.x)) return ws.x;
  if (warn) {
    log_warning("no lattice point located in a rationally nonempty region with " +
                std::to_string(r.constraints().size()) + " constraints; dropped");
  }
  return std::nullopt;
}

}  // namespace

// ---- Hyperplane ----

Hyperplane::Hyperplane(IntVec v, std::int64_t n) {
  if (is_zero_vector(v)) throw PreconditionError("hyperplane normal must be nonzero");
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  if (*first < 0) g = -g;
  if (n % g != 0) {
    empty_ = true;
    for (auto& x : v) x /= g;
    v_ = std::move(v);
    n_ = n / g;
    return;
  }
  for (auto& x : v) x /= g;
  v_ = std::move(v);
  n_ = n / g;
}

bool Hyperplane::contains(std::span<const std::int64_t> z) const {
  require_arity(arity(), z.size(), "hyperplane");
  return !empty_ && dot(v_, z) == n_;
}

// ---- PolyhedralRegion ----

PolyhedralRegion::PolyhedralRegion(std::size_t arity, std::vector<HalfSpace> constraints)
    : arity_(arity), constraints_(std::move(constraints)) {
  for (const auto& h : constraints_) require_arity(arity_, h.v.size(), "half-space");
}

bool PolyhedralRegion::contains(std::span<const std::int64_t> z) const {
  require_arity(arity_, z.size(), "region");
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const HalfSpace& h) { return h.contains(z); });
}

PolyhedralRegion PolyhedralRegion::intersect(const HalfSpace& h) const {
  require_arity(arity_, h.v.size(), "half-space");
  PolyhedralRegion out = *this;
  out.constraints_.push_back(h);
  return out;
}

PolyhedralRegion PolyhedralRegion::intersect(const PolyhedralRegion& other) const {
  require_arity(arity_, other.arity_, "region");
  PolyhedralRegion out = *this;
  for (const auto& h : other.constraints_) out.constraints_.push_back(h);
  return out;
}

bool contains(const PolyhedralRegion& r, std::span<const std::int64_t> z) {
  return r.contains(z);
}

// ---- MeasureZeroSet ----

MeasureZeroSet::MeasureZeroSet(std::vector<Hyperplane> hs) {
  for (auto& h : hs) add(h);
}

void MeasureZeroSet::add(const Hyperplane& h) {
  if (h.empty()) return;
  auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), h);
  if (it != hyperplanes_.end() && *it == h) return;
  hyperplanes_.insert(it, h);
}

void MeasureZeroSet::add(const MeasureZeroSet& other) {
  for (const auto& h : other.hyperplanes_) add(h);
}

bool MeasureZeroSet::covers(std::span<const std::int64_t> z) const {
  return std::any_of(hyperplanes_.begin(), hyperplanes_.end(),
                     [&](const Hyperplane& h) { return h.contains(z); });
}

// ---- erosion, arrangement, measure zero ----

Erosion erode(const PolyhedralRegion& r, std::int64_t n) {
  if (n < 0) throw PreconditionError("erosion size must be nonnegative");
  Erosion out{PolyhedralRegion(r.arity()), {}};
  std::vector<HalfSpace> hs;
  for (const auto& h : r.constraints()) {
    std::int64_t neg = 0;
    for (auto x : h.v) {
      if (x < 0) neg += x;
    }
    std::int64_t gt = h.gt - n * neg;
    hs.push_back({h.v, gt});
    if (is_zero_vector(h.v)) continue;
    for (std::int64_t c = h.gt + 1; c <= gt; ++c) out.cover.add(Hyperplane(h.v, c));
  }
  out.region = PolyhedralRegion(r.arity(), std::move(hs));
  return out;
}

bool rationally_empty(const PolyhedralRegion& r) { return !feasible(closure(r)); }

std::optional<IntVec> find_lattice_point(const PolyhedralRegion& r) { return witness(r, true); }

PolyhedralRegion simplify(const PolyhedralRegion& r) {
  std::vector<HalfSpace> kept;
  for (const auto& h : r.constraints()) {
    if (std::find(kept.begin(), kept.end(), h) == kept.end()) kept.push_back(h);
  }
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<HalfSpace> trial;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) trial.push_back(kept[j]);
    }
    trial.push_back(kept[i].opposite_closed());
    if (rationally_empty(PolyhedralRegion(r.arity(), trial))) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return PolyhedralRegion(r.arity(), std::move(kept));
}

std::vector<PolyhedralRegion> arrangement(const std::vector<Hyperplane>& hs, std::size_t arity) {
  MeasureZeroSet unique;
  for (const auto& h : hs) {
    require_arity(arity, h.arity(), "arrangement");
    unique.add(h);
  }
  std::vector<PolyhedralRegion> cells{PolyhedralRegion::whole(arity)};
  for (const auto& h : unique.hyperplanes()) {
    std::vector<PolyhedralRegion> next;
    for (const auto& cell : cells) {
      HalfSpace sides[2] = {{h.normal(), h.offset()}, {scaled(h.normal(), -1), -h.offset()}};
      for (const auto& side : sides) {
        PolyhedralRegion c = cell.intersect(side);
        if (find_lattice_point(c)) next.push_back(simplify(c));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

MeasureZeroVerdict is_measure_zero(const PolyhedralRegion& r) {
  MeasureZeroVerdict out;
  for (const auto& h : r.constraints()) {
    if (is_zero_vector(h.v)) {
      if (h.gt >= 0) {
        out.measure_zero = true;
        return out;
      }
      continue;
    }
    bool empty = false;
    auto sup = supremum(r, h.v, empty);
    if (empty) {
      out.measure_zero = true;
      out.cover = {};
      return out;
    }
    if (sup) {
      out.measure_zero = true;
      Int top = floor_rat(*sup);
      for (std::int64_t c = h.gt + 1; c <= to_int64(top); ++c) out.cover.add(Hyperplane(h.v, c));
      return out;
    }
  }
  return out;
}

std::optional<LatticeBox> box_in_region(const PolyhedralRegion& r, std::int64_t size) {
  auto e = erode(r, size);
  auto p = find_lattice_point(e.region);
  if (!p) return std::nullopt;
  return LatticeBox{*p, size};
}

// ---- paths ----

std::vector<IntVec> lattice_steps(std::size_t k) {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(unit_vector(k, i, 1));
  for (std::size_t i = 0; i < k; ++i) out.push_back(unit_vector(k, i, -1));
  return out;
}

std::optional<std::vector<IntVec>> s_path(const IntVec& from, const IntVec& to,
                                          const PolyhedralRegion& ambient,
                                          const std::vector<IntVec>& steps,
                                          const PathOptions& options) {
  const std::size_t k = ambient.arity();
  require_arity(k, from.size(), "path start");
  require_arity(k, to.size(), "path end");
  for (const auto& s : steps) require_arity(k, s.size(), "path step");
  if (!ambient.contains(from) || !ambient.contains(to)) {
    throw PreconditionError("path endpoints must lie in the ambient region");
  }
  std::int64_t mag = 0;
  for (const auto& s : steps) {
    for (auto x : s) mag = std::max(mag, x < 0 ? -x : x);
  }
  std::int64_t margin = options.margin.value_or(mag * static_cast<std::int64_t>(k + 1));
  IntVec lo(k), hi(k);
  std::vector<std::size_t> stride(k);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    lo[i] = std::min(from[i], to[i]) - margin;
    hi[i] = std::max(from[i], to[i]) + margin;
    stride[i] = total;
    total *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  auto index = [&](const IntVec& z) {
    std::size_t id = 0;
    for (std::size_t i = 0; i < k; ++i) id += static_cast<std::size_t>(z[i] - lo[i]) * stride[i];
    return id;
  };
  std::unordered_map<std::size_t, std::size_t> parent;  // id -> step index + 1 (0 = root)
  std::deque<IntVec> queue{from};
  parent[index(from)] = 0;
  while (!queue.empty()) {
    IntVec z = queue.front();
    queue.pop_front();
    if (z == to) break;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      IntVec y = add(z, steps[s]);
      bool inside = true;
      for (std::size_t i = 0; i < k && inside; ++i) inside = y[i] >= lo[i] && y[i] <= hi[i];
      if (!inside || !ambient.contains(y)) continue;
      if (parent.emplace(index(y), s + 1).second) queue.push_back(std::move(y));
    }
  }
  if (!parent.count(index(to))) return std::nullopt;
  std::vector<IntVec> path{to};
  IntVec z = to;
  while (true) {
    std::size_t s = parent[index(z)];
    if (s == 0) break;
    z = sub(z, steps[s - 1]);
    path.push_back(z);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// ---- hull of two unit boxes ----

HullPoints::HullPoints(LatticeBox b0, LatticeBox b1) : b0_(std::move(b0)), b1_(std::move(b1)) {
  require_arity(b0_.arity(), b1_.arity(), "hull");
  if (b0_.size != 1 || b1_.size != 1) throw PreconditionError("hull points need unit boxes");
}

bool HullPoints::operator()(std::span<const std::int64_t> z) const {
  require_arity(b0_.arity(), z.size(), "hull");
  Rat lo(0), hi(1);
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::int64_t w = b1_.corner[i] - b0_.corner[i];
    std::int64_t rel = z[i] - b0_.corner[i];
    if (w == 0) {
      if (rel < 0 || rel > 1) return false;
      continue;
    }
    Rat a(rel - 1, w), b(rel, w);
    a.canonicalize();
    b.canonicalize();
    if (w < 0) std::swap(a, b);
    if (a > lo) lo = a;
    if (b < hi) hi = b;
    if (lo > hi) return false;
  }
  return true;
}

LatticeBox HullPoints::bounding_box() const {
  IntVec corner(b0_.arity());
  std::int64_t size = 1;
  for (std::size_t i = 0; i < corner.size(); ++i) {
    corner[i] = std::min(b0_.corner[i], b1_.corner[i]);
    std::int64_t d = std::max(b0_.corner[i], b1_.corner[i]) + 1 - corner[i];
    size = std::max(size, d);
  }
  return {corner, size};
}

HullPoints hull_points(const LatticeBox& b0, const LatticeBox& b1) { return HullPoints(b0, b1); }

// ---- characteristic certificates ----

MultiPoly Certificate::product() const {
  MultiPoly p = MultiPoly::constant(arity, 1);
  for (const auto& f : factors) p = p * f;
  return p;
}

MeasureZeroSet Certificate::zero_set() const {
  MeasureZeroSet out;
  for (const auto& f : factors) {
    IntVec v(arity);
    Rat c = 0;
    for (const auto& [m, coeff] : f.terms()) {
      auto it = std::find(m.begin(), m.end(), 1u);
      if (it == m.end()) {
        c = coeff;
      } else {
        v[static_cast<std::size_t>(it - m.begin())] = coeff.get_num().get_si();
      }
    }
    out.add(Hyperplane(v, -c.get_num().get_si()));
  }
  return out;
}

std::vector<Certificate> characteristic_certificates(const PolyhedralRegion& r) {
  const std::size_t k = r.arity();
  std::vector<Certificate> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i].arity = k;
    for (const auto& h : r.constraints()) {
      std::int64_t vi = h.v[i];
      if (vi == 0) continue;
      std::int64_t lo = vi > 0 ? h.gt - vi + 1 : h.gt + 1;
      std::int64_t hi = vi > 0 ? h.gt : h.gt - vi;
      for (std::int64_t m = lo; m <= hi; ++m) {
        out[i].factors.push_back(MultiPoly::linear_form(h.v, Rat(-m)));
      }
    }
  }
  return out;
}

}  // namespace hgterm
