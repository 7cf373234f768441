#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "hgterm/errors.hpp"

using namespace hgterm;
using fixtures::p;
using fixtures::q;
using fixtures::u;

namespace {

std::vector<std::pair<std::string, TermSpec>> specs() {
  auto out = fixtures::bundled();
  for (auto& s : fixtures::extra_specs()) out.push_back(s);
  return out;
}

PiecewiseStructure binomial_positive_cone() {
  PiecewiseStructure ps;
  ps.k = 2;
  ps.form = decompose(fixtures::binomial());
  ps.pieces.push_back({PolyhedralRegion(2, {{{1, 0}, -1}, {{0, 1}, -1}, {{1, -1}, -1}}), {0, 0}, Rat(1)});
  return ps;
}

FactorialForm single_chain(UniPoly a) {
  FactorialForm ff;
  ff.k = 1;
  ff.region = PolyhedralRegion(1, {{{1}, -1}});
  ff.chains.push_back({{1}, {1}, std::move(a), UniPoly::constant(1), 0});
  ff.C = p("1", 1);
  ff.D = p("1", 1);
  ff.gamma = {1};
  ff.scalar = 1;
  return ff;
}

}  // namespace

TEST_CASE("odd product has a single piece") {
  const auto ps = build_structure(fixtures::odd_product());
  REQUIRE(ps.pieces.size() == 1);
  CHECK(ps.pieces[0].region.constraints().empty());
  CHECK(ps.pieces[0].z0 == IntVec{0});
  CHECK(ps.pieces[0].f0 == Rat(1));
  CHECK(ps.H.empty());
  CHECK(ps.arrangement_size == 0);
}

TEST_CASE("odd product closed form") {
  const auto ps = build_structure(fixtures::odd_product());
  CHECK(closed_form_eval(ps, IntVec{3}).value == Rat(15));
  CHECK(closed_form_eval(ps, IntVec{-2}).value == Rat(1, 3));
  for (std::int64_t z = -8; z <= 8; ++z) {
    CHECK(closed_form_eval(ps, IntVec{z}).value == fixtures::odd_product_value(z));
  }
}

TEST_CASE("points on H are undefined") {
  const auto ps = build_structure(fixtures::binomial());
  REQUIRE_FALSE(ps.H.empty());
  const Hyperplane& h = ps.H.hyperplanes().front();
  IntVec z;
  for (const auto& c : fixtures::cube(2, -8, 8)) {
    if (h.contains(c)) {
      z = c;
      break;
    }
  }
  REQUIRE_FALSE(z.empty());
  const auto v = closed_form_eval(ps, z);
  CHECK_FALSE(v.value);
  CHECK(v.reason == Undefined::measure_zero);
  CHECK_THROWS_AS(closed_form_eval(ps, IntVec{1}), DimensionError);
}

TEST_CASE("zero divisor structure") {
  auto spec = TermSpec::from_generators({q("z1+z2", "z1+z2+1", 2), q("z1+z2", "z1+z2+1", 2)});
  spec.zero_divisor_witness = p("z1+z2", 2);
  const auto ps = build_structure(spec);
  CHECK(ps.zero_divisor);
  CHECK(ps.form.C == p("1", 2));
  CHECK(ps.form.D == p("z1+z2", 2));
  CHECK(ps.form.chains.empty());
  REQUIRE(ps.pieces.size() == 1);
  CHECK(ps.pieces[0].region.constraints().empty());
  CHECK(ps.pieces[0].f0 == Rat(0));
  for (const auto& z : fixtures::cube(2, -4, 4)) {
    const auto v = closed_form_eval(ps, z);
    if (z[0] + z[1] == 0) {
      CHECK(v.reason == Undefined::d_zero);
    } else {
      CHECK(v.value == Rat(0));
    }
  }
}

TEST_CASE("binomial closed form matches Pascal's triangle") {
  const auto spec = fixtures::binomial();
  const auto ps = build_structure(spec);
  CHECK(ps.pieces.size() >= 4);
  std::size_t compared = 0;
  for (const auto& z : fixtures::cube(2, -6, 6)) {
    const auto v = closed_form_eval(ps, z);
    if (!v.value || z[0] < 0) continue;
    CHECK_MESSAGE(*v.value == fixtures::pascal(z[0], z[1]), format_vec(z));
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("factorial split of the odd product") {
  const auto ps = build_structure(fixtures::odd_product());
  const auto ffs = split_factorial(ps);
  REQUIRE(ffs.size() == 2);
  const FactorialForm* pos = nullptr;
  const FactorialForm* neg = nullptr;
  for (const auto& ff : ffs) (ff.region.contains(IntVec{0}) ? pos : neg) = &ff;
  REQUIRE(pos);
  REQUIRE(neg);
  for (std::int64_t z = -8; z <= 8; ++z) {
    CHECK(pos->region.contains(IntVec{z}) == (z >= 0));
    CHECK(neg->region.contains(IntVec{z}) == (z < 0));
  }
  REQUIRE(pos->chains.size() == 1);
  CHECK(pos->chains[0].a == u("2*t-1"));
  CHECK(pos->chains[0].b == UniPoly::constant(1));
  CHECK(pos->chains[0].n == 0);
  REQUIRE(neg->chains.size() == 1);
  CHECK(neg->chains[0].a == UniPoly::constant(1));
  CHECK(neg->chains[0].b == u("1-2*t"));
  CHECK(neg->chains[0].w == IntVec{-1});
  CHECK(factorial_eval(*neg, IntVec{-2}) == Rat(1, 3));
  CHECK(factorial_eval(*pos, IntVec{3}) == Rat(15));
}

TEST_CASE("a piece without chains splits into itself") {
  const auto ps = build_structure(fixtures::constant_term());
  const auto ffs = split_factorial(ps);
  REQUIRE(ffs.size() == 1);
  CHECK(ffs[0].chains.empty());
  CHECK(ffs[0].region == ps.pieces[0].region);
  CHECK(factorial_eval(ffs[0], IntVec{5, -3}) == Rat(1));
}

TEST_CASE("binomial in the positive cone") {
  const auto ps = binomial_positive_cone();
  const auto ffs = split_factorial(ps);
  const FactorialForm* cone = nullptr;
  for (const auto& ff : ffs) {
    if (ff.region.contains(IntVec{3, 1})) cone = &ff;
  }
  REQUIRE(cone);
  CHECK(cone->chains.size() == 3);
  for (const auto& ch : cone->chains) {
    CHECK(ch.n == 0);
    CHECK(ch.w == ch.v);
  }
  std::mt19937_64 rng(51);
  int sampled = 0;
  while (sampled < 30) {
    const IntVec z = fixtures::random_vec(rng, 2, 0, 12);
    if (!cone->region.contains(z)) continue;
    CHECK(factorial_eval(*cone, z) == fixtures::pascal(z[0], z[1]));
    CHECK(closed_form_eval(ps, z).value == fixtures::pascal(z[0], z[1]));
    ++sampled;
  }
}

TEST_CASE("Pochhammer symbols") {
  CHECK(pochhammer(Rat(3, 2), 2) * 4 == 15);
  CHECK(pochhammer(Rat(-7, 3), 0) == 1);
  CHECK(pochhammer(Rat(1), 5) == 120);
  CHECK_THROWS_AS(pochhammer(Rat(1), -1), IntegrityError);

  PochhammerForm pf;
  pf.k = 1;
  pf.region = PolyhedralRegion::whole(1);
  pf.gamma = {2};
  pf.scalar = 1;
  pf.C = p("1", 1);
  pf.D = p("1", 1);
  CHECK(pochhammer_eval(pf, IntVec{3}) == Rat(8));
}

TEST_CASE("to_pochhammer") {
  const auto pf = to_pochhammer(single_chain(u("2*t+1")));
  CHECK(pf.gamma == std::vector<Rat>{2});
  CHECK(pf.scalar == 1);
  REQUIRE(pf.numerator.size() == 1);
  CHECK(pf.numerator[0] == PochhammerSymbol{Rat(3, 2), {1}, 0});
  CHECK(pf.denominator.empty());
  CHECK(pochhammer_eval(pf, IntVec{2}) == Rat(15));

  FactorialForm empty;
  empty.k = 3;
  empty.region = PolyhedralRegion::whole(3);
  empty.C = p("1", 3);
  empty.D = p("1", 3);
  empty.gamma = {1, 1, 1};
  empty.scalar = 1;
  const auto trivial = to_pochhammer(empty);
  CHECK(trivial.gamma == std::vector<Rat>{1, 1, 1});
  CHECK(trivial.scalar == 1);
  CHECK(trivial.numerator.empty());
  CHECK(trivial.denominator.empty());

  CHECK_THROWS_AS(to_pochhammer(single_chain(u("t^2+1"))), SplittingError);
}

TEST_CASE("odd product in Pochhammer form") {
  const auto ps = build_structure(fixtures::odd_product());
  for (const auto& ff : split_factorial(ps)) {
    const auto pf = to_pochhammer(ff);
    for (std::int64_t z = -8; z <= 8; ++z) {
      if (!ff.region.contains(IntVec{z})) continue;
      CHECK(pochhammer_eval(pf, IntVec{z}) == fixtures::odd_product_value(z));
    }
  }
}

// ---- properties over all test specs ----

TEST_CASE("closed form equals propagation") {
  for (const auto& [name, spec] : specs()) {
    const auto ps = build_structure(spec);
    const auto report = grid_compare(ps, spec, Window{IntVec(spec.k, -8), IntVec(spec.k, 8)});
    CHECK_MESSAGE(report.mismatches.empty(), name);
    CHECK_MESSAGE(report.equal > 0, name);
    CHECK(report.equal + report.on_H + report.d_zero + report.blocked == report.checked);
  }
}

TEST_CASE("pieces and H partition the window") {
  for (const auto& [name, spec] : specs()) {
    const auto ps = build_structure(spec);
    for (const auto& z : fixtures::cube(spec.k, -8, 8)) {
      int n = 0;
      for (const auto& piece : ps.pieces) n += piece.region.contains(z) ? 1 : 0;
      CHECK_MESSAGE((n == 1 || (n == 0 && ps.H.covers(z))), name << " at " << format_vec(z));
      CHECK(n <= 1);
    }
  }
}

TEST_CASE("base points are valid") {
  for (const auto& [name, spec] : specs()) {
    const auto ps = build_structure(spec);
    for (const auto& piece : ps.pieces) {
      CHECK(piece.region.contains(piece.z0));
      CHECK_MESSAGE(ps.form.C.evaluate(piece.z0) != 0, name);
      CHECK_MESSAGE(ps.form.D.evaluate(piece.z0) != 0, name);
    }
  }
}

TEST_CASE("factorial and Pochhammer forms preserve values") {
  std::mt19937_64 rng(52);
  for (const auto& [name, spec] : specs()) {
    const auto ps = build_structure(spec);
    for (const auto& ff : split_factorial(ps)) {
      std::optional<PochhammerForm> pf;
      try {
        pf = to_pochhammer(ff);
      } catch (const SplittingError&) {
      }
      for (const auto& z : fixtures::cube(spec.k, -8, 8)) {
        if (!ff.region.contains(z)) continue;
        const auto closed = closed_form_eval(ps, z);
        if (closed.value) CHECK_MESSAGE(factorial_eval(ff, z) == closed.value, name << " " << format_vec(z));
        if (pf && closed.value) CHECK_MESSAGE(pochhammer_eval(*pf, z) == closed.value, name);
      }
      // chain lengths are nonnegative over the region
      int sampled = 0;
      for (int attempt = 0; attempt < 4000 && sampled < 100; ++attempt) {
        const IntVec z = fixtures::random_vec(rng, spec.k, -30, 30);
        if (!ff.region.contains(z)) continue;
        ++sampled;
        for (const auto& ch : ff.chains) CHECK(dot(ch.w, z) + ch.n >= 0);
        if (pf) {
          for (const auto& s : pf->numerator) CHECK(dot(s.v, z) + s.r >= 0);
          for (const auto& s : pf->denominator) {
            CHECK(dot(s.v, z) + s.r >= 0);
            CHECK(pochhammer(s.m, dot(s.v, z) + s.r) != 0);
          }
        }
      }
    }
  }
}
