// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hgterm/errors.hpp"
#include "hgterm/log.hpp"

using namespace hgterm;
using fixtures::cube;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Accumulates the first few failure messages of a criterion.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: " + first_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<TermSpec> random_compatible(std::size_t n) {
  std::mt19937_64 rng(1001);
  std::vector<TermSpec> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(fixtures::spec_from_form(fixtures::random_form(rng, 2 + i % 2)));
  }
  return out;
}

Outcome cocycle_suite() {
  Tally t;
  for (const auto& [name, spec] : fixtures::bundled()) t.expect(check_compatibility(spec), name);
  const auto good = random_compatible(20);
  std::mt19937_64 rng(1002);
  for (std::size_t i = 0; i < good.size(); ++i) {
    t.expect(check_compatibility(good[i]), "random spec " + std::to_string(i));
    t.expect(!check_compatibility(fixtures::perturb(good[i], rng)), "perturbed spec " + std::to_string(i));
  }
  return t.outcome("3 bundled + 20 compatible + 20 perturbed");
}

Outcome round_trip() {
  Tally t;
  std::vector<std::pair<std::string, TermSpec>> specs = fixtures::bundled();
  const auto rnd = random_compatible(20);
  for (std::size_t i = 0; i < rnd.size(); ++i) specs.emplace_back("random " + std::to_string(i), rnd[i]);
  std::mt19937_64 rng(1003);
  for (const auto& [name, spec] : specs) {
    const auto form = decompose(spec);
    for (std::size_t i = 0; i < spec.k; ++i) {
      t.expect(ratio_from_form(form, unit_vector(spec.k, i)) == spec.generators[i], name + " generator");
    }
    for (int n = 0; n < 50; ++n) {
      const IntVec w = fixtures::random_vec(rng, spec.k, -3, 3);
      t.expect(ratio_from_form(form, w) == compose_direction(spec, w), name + " w=" + format_vec(w));
    }
  }
  return t.outcome(std::to_string(specs.size()) + " specs, 50 directions each");
}

Outcome end_to_end() {
  Tally t;
  std::size_t equal = 0;
  for (const auto& [name, spec] : fixtures::bundled()) {
    const auto ps = build_structure(spec);
    const auto report = grid_compare(ps, spec, Window{IntVec(spec.k, -8), IntVec(spec.k, 8)});
    t.expect(report.mismatches.empty(), name + ": " + std::to_string(report.mismatches.size()) + " mismatches");
    t.expect(report.equal > 0, name + ": nothing compared");
    equal += report.equal;
  }
  const auto odd = build_structure(fixtures::odd_product());
  t.expect(closed_form_eval(odd, IntVec{-2}).value == Rat(1, 3), "odd product f(-2) != 1/3");
  t.expect(closed_form_eval(odd, IntVec{3}).value == Rat(15), "odd product f(3) != 15");
  return t.outcome(std::to_string(equal) + " points equal, f(-2) = 1/3");
}

Outcome factorial_split() {
  Tally t;
  std::size_t compared = 0;
  for (const auto& [name, spec] : fixtures::bundled()) {
    const auto ps = build_structure(spec);
    for (const auto& ff : split_factorial(ps)) {
      for (const auto& z : cube(spec.k, -8, 8)) {
        if (!ff.region.contains(z)) continue;
        const auto closed = closed_form_eval(ps, z);
        if (!closed.value) continue;
        t.expect(factorial_eval(ff, z) == closed.value, name + " at " + format_vec(z));
        ++compared;
      }
    }
  }
  const auto ffs = split_factorial(build_structure(fixtures::odd_product()));
  t.expect(ffs.size() == 2, "odd product gave " + std::to_string(ffs.size()) + " subregions");
  if (ffs.size() == 2) {
    for (std::int64_t z = -8; z <= 8; ++z) {
      const bool a = ffs[0].region.contains(IntVec{z});
      const bool b = ffs[1].region.contains(IntVec{z});
      t.expect(a != b, "subregions overlap or miss z1 = " + std::to_string(z));
      const bool nonneg = a ? ffs[0].region.contains(IntVec{0}) : ffs[1].region.contains(IntVec{0});
      t.expect(nonneg == (z >= 0), "subregions are not {z1 >= 0}, {z1 < 0}");
    }
  }
  return t.outcome(std::to_string(compared) + " in-region points, odd product split in two");
}

Outcome pochhammer_forms() {
  Tally t;
  // prod_{j=1}^{z1} (2j+1) = 2^z1 (3/2)_z1
  FactorialForm shifted;
  shifted.k = 1;
  shifted.region = PolyhedralRegion(1, {{{1}, -1}});
  shifted.chains.push_back({{1}, {1}, fixtures::u("2*t+1"), UniPoly::constant(1), 0});
  shifted.C = fixtures::p("1", 1);
  shifted.D = fixtures::p("1", 1);
  shifted.gamma = {1};
  shifted.scalar = 1;
  const auto direct = to_pochhammer(shifted);
  t.expect(direct.gamma == std::vector<Rat>{2}, "gamma != (2)");
  t.expect(direct.numerator == std::vector<PochhammerSymbol>{{Rat(3, 2), {1}, 0}}, "symbol != (3/2)_z1");
  t.expect(direct.denominator.empty(), "unexpected denominator symbols");

  // the odd product itself is the same data shifted by one index
  const auto ps = build_structure(fixtures::odd_product());
  for (const auto& ff : split_factorial(ps)) {
    const auto pf = to_pochhammer(ff);
    for (std::int64_t z = -8; z <= 8; ++z) {
      if (!ff.region.contains(IntVec{z})) continue;
      t.expect(pochhammer_eval(pf, IntVec{z}) == factorial_eval(ff, IntVec{z}), "odd at " + std::to_string(z));
      // f(z1 + 1) = 2^z1 (3/2)_z1
      if (z >= 1) {
        t.expect(pochhammer_eval(pf, IntVec{z}) == pow_rat(2, z - 1) * pochhammer(Rat(3, 2), z - 1),
                 "odd product differs from 2^z1 (3/2)_z1 at " + std::to_string(z - 1));
      }
    }
  }

  for (const auto& [name, spec] : fixtures::bundled()) {
    for (const auto& ff : split_factorial(build_structure(spec))) {
      const auto pf = to_pochhammer(ff);
      for (const auto& z : cube(spec.k, -8, 8)) {
        if (!ff.region.contains(z)) continue;
        t.expect(pochhammer_eval(pf, z) == factorial_eval(ff, z), name + " at " + format_vec(z));
      }
    }
  }

  FactorialForm irreducible = shifted;
  irreducible.chains[0].a = fixtures::u("t^2+1");
  bool raised = false;
  try {
    (void)to_pochhammer(irreducible);
  } catch (const SplittingError&) {
    raised = true;
  }
  t.expect(raised, "t^2+1 did not raise a splitting error");
  return t.outcome("2^z1 (3/2)_z1 recovered, splitting error raised");
}

bool box_inside(const LatticeBox& b, const PolyhedralRegion& r) {
  bool ok = true;
  b.for_each([&](const IntVec& z) {
    ok = r.contains(z);
    return ok;
  });
  return ok;
}

PolyhedralRegion random_region(std::mt19937_64& rng, std::size_t k) {
  std::vector<HalfSpace> hs;
  const auto n = 1 + rng() % 3;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec v = fixtures::random_vec(rng, k, -2, 2);
    if (!is_zero_vector(v)) hs.push_back({v, -static_cast<std::int64_t>(rng() % 6)});
  }
  return {k, hs};
}

Outcome geometry_suite() {
  Tally t;
  std::mt19937_64 rng(1006);

  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const auto r = random_region(rng, k);
    const std::int64_t n = 1 + trial % 3;
    const auto e = erode(r, n);
    for (const auto& z : cube(k, -5, 5)) {
      if (e.region.contains(z)) {
        t.expect(box_inside({z, n}, r), "eroded point without a box");
      } else if (r.contains(z)) {
        t.expect(e.cover.covers(z), "erosion cover misses " + format_vec(z));
      }
    }
  }

  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 1 + trial % 3;
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < 1 + rng() % 4; ++i) {
      IntVec v = fixtures::random_vec(rng, k, -2, 2);
      if (!is_zero_vector(v)) hs.emplace_back(v, static_cast<std::int64_t>(rng() % 7) - 3);
    }
    const auto cells = arrangement(hs, k);
    for (const auto& z : cube(k, -5, 5)) {
      bool on = false;
      for (const auto& h : hs) on = on || h.contains(z);
      int n = 0;
      for (const auto& c : cells) n += c.contains(z) ? 1 : 0;
      t.expect(n == (on ? 0 : 1), "arrangement partition fails at " + format_vec(z));
    }
  }

  for (int trial = 0; trial < 60; ++trial) {
    const auto r = random_region(rng, 2);
    std::vector<IntVec> inside;
    for (const auto& z : cube(2, -4, 4)) {
      if (r.contains(z)) inside.push_back(z);
    }
    if (inside.size() < 2) continue;
    const IntVec from = inside[rng() % inside.size()];
    const IntVec to = inside[rng() % inside.size()];
    const auto steps = lattice_steps(2);
    const auto path = s_path(from, to, r, steps);
    if (!path) continue;
    t.expect(path->front() == from && path->back() == to, "path endpoints");
    for (std::size_t i = 0; i < path->size(); ++i) {
      t.expect(r.contains((*path)[i]), "path leaves the region");
      if (i > 0) {
        const IntVec d = sub((*path)[i], (*path)[i - 1]);
        t.expect(std::find(steps.begin(), steps.end(), d) != steps.end(), "illegal path step");
      }
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const LatticeBox b0{fixtures::random_vec(rng, k, -6, 5), 1};
    const LatticeBox b1{fixtures::random_vec(rng, k, -6, 5), 1};
    const HullPoints hp(b0, b1);
    std::set<IntVec> members;
    Window::from_box(hp.bounding_box()).for_each([&](const IntVec& z) {
      if (hp(z)) members.insert(z);
      return true;
    });
    std::set<IntVec> seen{b0.corner};
    std::deque<IntVec> queue{b0.corner};
    while (!queue.empty()) {
      const IntVec z = queue.front();
      queue.pop_front();
      for (const auto& s : lattice_steps(k)) {
        IntVec y = add(z, s);
        if (members.count(y) && seen.insert(y).second) queue.push_back(y);
      }
    }
    t.expect(members.count(b1.corner) && seen.size() == members.size(), "hull not connected");
  }

  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const MultiPoly q = fixtures::random_poly(rng, k, 3, 4);
    if (q.is_zero()) continue;
    const LatticeBox box{fixtures::random_vec(rng, k, -6, 6), std::max(q.total_degree(), 0)};
    const auto z = find_nonzero_in_box(q, box);
    t.expect(z && box.contains(*z) && q.evaluate(*z) != 0, "no nonzero in box for " + q.to_string());
  }

  for (const char* text : {"(z1-z2)*(z1-z2-3)", "(z1+2*z2)^2-4", "(z1+z2+1)*((z1+z2)^2+1)", "z2*(z2+5)"}) {
    const MultiPoly q = fixtures::p(text, 2);
    const auto s = detect_simple(q);
    t.expect(s.has_value(), std::string(text) + " not simple");
    if (!s) continue;
    const auto roots = integer_roots(s->pbar).roots;
    for (const auto& z : cube(2, -10, 10)) {
      if (q.evaluate(z) != 0) continue;
      bool on = false;
      for (auto r : roots) on = on || dot(s->direction, z) == r;
      t.expect(on, std::string(text) + " zero off the root hyperplanes");
    }
  }
  return t.outcome("erosion, arrangement, paths, 100 hulls, box zeros, simple zeros");
}

Outcome oracle_suite() {
  Tally t;
  std::mt19937_64 rng(1007);
  for (const auto& [name, spec] : fixtures::bundled()) {
    const Seed& seed = *spec.seed;
    const Window w{IntVec(spec.k, -10), IntVec(spec.k, 10)};
    const PropagationField a(spec, seed, w, 1);
    const PropagationField b(spec, seed, w, 2);
    int agreed = 0;
    for (int n = 0; n < 100; ++n) {
      const IntVec z = fixtures::random_vec(rng, spec.k, -8, 8);
      const auto va = a.value(z);
      const auto vb = b.value(z);
      t.expect(va.has_value() == vb.has_value() && (!va || *va == *vb), name + " paths differ at " + format_vec(z));
      const auto r = propagate(spec, seed, z);
      const auto ratio = compose_direction(spec, sub(z, seed.point)).evaluate(seed.point);
      if (r.ok() && ratio) {
        t.expect(*r.value == seed.value * *ratio, name + " ratio disagrees at " + format_vec(z));
        ++agreed;
      }
    }
    t.expect(agreed > 0, name + ": no comparable targets");
  }
  return t.outcome("100 targets per spec");
}

}  // namespace

int main() {
  set_log_level(LogLevel::quiet);
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_s;  // 0 means no runtime limit
  };
  const std::vector<Criterion> criteria = {
      {1, "cocycle suite", cocycle_suite, 10},
      {2, "decomposition round trip", round_trip, 30},
      {3, "structure end to end", end_to_end, 60},
      {4, "factorial split", factorial_split, 0},
      {5, "Pochhammer forms", pochhammer_forms, 0},
      {6, "geometry suite", geometry_suite, 30},
      {7, "oracle path independence", oracle_suite, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
         << secs << " s]";
    std::cout << line.str() << std::endl;
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
