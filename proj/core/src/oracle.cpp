#include "hgterm/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "hgterm/errors.hpp"

namespace hgterm {

namespace {

struct StepRule {
  const TermSpec& spec;
  std::vector<MultiPoly> A;
  std::vector<MultiPoly> B;

  explicit StepRule(const TermSpec& s) : spec(s) {
    for (std::size_t i = 0; i < s.k; ++i) {
      A.push_back(s.A(i));
      B.push_back(s.B(i));
    }
  }

  // Factor turning f(y) into f(y + sign e_i), when the recurrence allows it.
  std::optional<Rat> factor(const IntVec& y, int step) const {
    const std::size_t i = static_cast<std::size_t>(std::abs(step)) - 1;
    if (step > 0) {
      if (spec.exceptions.covers(y)) return std::nullopt;
      Rat b = B[i].evaluate(y);
      if (b == 0) return std::nullopt;
      return A[i].evaluate(y) / b;
    }
    IntVec x = y;
    x[i] -= 1;
    if (spec.exceptions.covers(x)) return std::nullopt;
    Rat a = A[i].evaluate(x);
    if (a == 0) return std::nullopt;
    return B[i].evaluate(x) / a;
  }
};

IntVec apply_step(IntVec y, int step) {
  y[static_cast<std::size_t>(std::abs(step)) - 1] += step > 0 ? 1 : -1;
  return y;
}

}  // namespace

PropagationField::PropagationField(const TermSpec& spec, const Seed& seed, Window window,
                                   std::optional<std::uint64_t> shuffle_seed)
    : window_(std::move(window)) {
  spec.validate();
  const std::size_t k = spec.k;
  if (window_.arity() != k || seed.point.size() != k) {
    throw DimensionError("propagation window or seed arity mismatch");
  }
  stride_.assign(k, 1);
  std::size_t total = 1;
  for (std::size_t i = k; i-- > 0;) {
    stride_[i] = total;
    total *= static_cast<std::size_t>(std::max<std::int64_t>(window_.hi[i] - window_.lo[i] + 1, 0));
  }
  values_.assign(total, std::nullopt);
  parent_step_.assign(total, 0);
  step_factor_.assign(total, Rat(0));
  if (!window_.contains(seed.point)) return;

  StepRule rule(spec);
  std::vector<int> order;
  for (std::size_t i = 0; i < k; ++i) order.push_back(static_cast<int>(i) + 1);
  for (std::size_t i = 0; i < k; ++i) order.push_back(-static_cast<int>(i) - 1);
  std::mt19937_64 rng(shuffle_seed.value_or(0));

  std::deque<IntVec> queue{seed.point};
  values_[index(seed.point)] = seed.value;
  while (!queue.empty()) {
    IntVec y = std::move(queue.front());
    queue.pop_front();
    const Rat fy = *values_[index(y)];
    if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
    for (int step : order) {
      IntVec x = apply_step(y, step);
      if (!window_.contains(x)) continue;
      const std::size_t id = index(x);
      if (values_[id]) continue;
      auto f = rule.factor(y, step);
      if (!f) continue;
      values_[id] = fy * *f;
      parent_step_[id] = step;
      step_factor_[id] = *f;
      queue.push_back(std::move(x));
    }
  }
}

std::size_t PropagationField::index(std::span<const std::int64_t> z) const {
  std::size_t id = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    id += static_cast<std::size_t>(z[i] - window_.lo[i]) * stride_[i];
  }
  return id;
}

std::optional<Rat> PropagationField::value(std::span<const std::int64_t> z) const {
  if (!window_.contains(z)) return std::nullopt;
  return values_[index(z)];
}

PropagationResult PropagationField::result(std::span<const std::int64_t> z) const {
  PropagationResult r;
  if (!window_.contains(z)) {
    r.failure = PropagationFailure::out_of_window;
    return r;
  }
  const std::size_t id = index(z);
  if (!values_[id]) {
    r.failure = PropagationFailure::blocked;
    return r;
  }
  r.value = values_[id];
  IntVec x(z.begin(), z.end());
  std::vector<std::pair<IntVec, int>> back;
  while (int step = parent_step_[index(x)]) {
    IntVec from = apply_step(x, -step);
    back.emplace_back(from, step);
    x = std::move(from);
  }
  std::reverse(back.begin(), back.end());
  for (auto& [from, step] : back) {
    r.certificate.push_back({from, step, step_factor_[index(apply_step(from, step))]});
  }
  return r;
}

PropagationResult propagate(const TermSpec& spec, const Seed& from, const IntVec& to,
                            const PropagationOptions& options) {
  if (to.size() != spec.k) throw DimensionError("propagation target arity mismatch");
  Window w = options.window.value_or(
      Window::around({from.point, to}, 2 * static_cast<std::int64_t>(spec.k + 1)));
  PropagationResult r;
  if (!w.contains(from.point) || !w.contains(to)) {
    r.failure = PropagationFailure::out_of_window;
    return r;
  }
  PropagationField field(spec, from, w, options.shuffle_seed);
  return field.result(to);
}

std::optional<Rat> replay(const TermSpec& spec, const Seed& from,
                          const std::vector<PropagationStep>& certificate) {
  StepRule rule(spec);
  IntVec at = from.point;
  Rat value = from.value;
  for (const auto& s : certificate) {
    if (s.from != at || s.step == 0 || static_cast<std::size_t>(std::abs(s.step)) > spec.k) {
      return std::nullopt;
    }
    auto f = rule.factor(at, s.step);
    if (!f) return std::nullopt;
    value *= *f;
    at = apply_step(at, s.step);
  }
  return value;
}

CompareReport grid_compare(const PiecewiseStructure& ps, const TermSpec& spec,
                           const Window& window) {
  if (!spec.seed) throw PreconditionError("grid comparison needs a seed value");
  if (window.arity() != spec.k || ps.k != spec.k) throw DimensionError("compare arity mismatch");
  PropagationField field(spec, *spec.seed,
                         Window::around({window.lo, window.hi, spec.seed->point},
                                        2 * static_cast<std::int64_t>(spec.k + 1)));
  CompareReport report;
  window.for_each([&](const IntVec& z) {
    ++report.checked;
    ClosedFormValue c = closed_form_eval(ps, z);
    switch (c.reason) {
      case Undefined::measure_zero:
      case Undefined::uncovered:
        ++report.on_H;
        return true;
      case Undefined::d_zero:
        ++report.d_zero;
        return true;
      case Undefined::value_unknown:
        ++report.blocked;
        return true;
      case Undefined::none:
        break;
    }
    auto o = field.value(z);
    if (!o) {
      ++report.blocked;
    } else if (*o == *c.value) {
      ++report.equal;
    } else {
      report.mismatches.push_back({z, *c.value, *o});
    }
    return true;
  });
  return report;
}

std::optional<LatticeBox> nonzero_box_search(const TermSpec& spec, std::int64_t n,
                                             const Window& window) {
  if (!spec.seed) throw PreconditionError("box search needs a seed value");
  if (n < 0) throw PreconditionError("box size must be nonnegative");
  PropagationField field(spec, *spec.seed,
                         Window::around({window.lo, window.hi, spec.seed->point},
                                        2 * static_cast<std::int64_t>(spec.k + 1)));
  Window corners = window;
  for (auto& x : corners.hi) x -= n;
  std::optional<LatticeBox> found;
  corners.for_each([&](const IntVec& c) {
    LatticeBox box{c, n};
    bool good = true;
    box.for_each([&](const IntVec& z) {
      auto v = field.value(z);
      good = v && *v != 0;
      return good;
    });
    if (good) found = box;
    return !good;
  });
  return found;
}

}  // namespace hgterm
