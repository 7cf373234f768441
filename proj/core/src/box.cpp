#include "hgterm/box.hpp"

#include <algorithm>

#include "hgterm/errors.hpp"

namespace hgterm {

bool LatticeBox::contains(std::span<const std::int64_t> z) const {
  return Window::from_box(*this).contains(z);
}

void LatticeBox::for_each(const std::function<bool(const IntVec&)>& visit) const {
  Window::from_box(*this).for_each(visit);
}

Window Window::from_box(const LatticeBox& b) {
  Window w{b.corner, b.corner};
  for (auto& x : w.hi) x += b.size;
  return w;
}

Window Window::around(const std::vector<IntVec>& points, std::int64_t margin) {
  if (points.empty()) throw PreconditionError("window around no points");
  Window w{points.front(), points.front()};
  for (const auto& p : points) {
    if (p.size() != w.lo.size()) throw DimensionError("window: arity mismatch");
    for (std::size_t i = 0; i < p.size(); ++i) {
      w.lo[i] = std::min(w.lo[i], p[i]);
      w.hi[i] = std::max(w.hi[i], p[i]);
    }
  }
  for (auto& x : w.lo) x -= margin;
  for (auto& x : w.hi) x += margin;
  return w;
}

bool Window::contains(std::span<const std::int64_t> z) const {
  if (z.size() != lo.size()) throw DimensionError("window membership: arity mismatch");
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < lo[i] || z[i] > hi[i]) return false;
  }
  return true;
}

std::size_t Window::point_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  return n;
}

void Window::for_each(const std::function<bool(const IntVec&)>& visit) const {
  if (point_count() == 0) return;
  IntVec z = lo;
  const std::size_t k = z.size();
  while (true) {
    if (!visit(z)) return;
    std::size_t i = k;
    while (true) {
      if (i == 0) return;
      --i;
      if (z[i] < hi[i]) {
        ++z[i];
        for (std::size_t j = i + 1; j < k; ++j) z[j] = lo[j];
        break;
      }
    }
  }
}

}  // namespace hgterm
