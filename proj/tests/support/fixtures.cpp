#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hgterm/json_io.hpp"

#ifndef HGTERM_TEST_DATA
#error "HGTERM_TEST_DATA must point at tests/data"
#endif

namespace fixtures {

FactoredRational q(const std::string& num, const std::string& den, std::size_t k) {
  std::vector<FactoredRational::Factor> fs;
  for (const auto& [base, e] : parse_product(num, k)) fs.push_back({base, static_cast<std::int64_t>(e)});
  for (const auto& [base, e] : parse_product(den, k)) fs.push_back({base, -static_cast<std::int64_t>(e)});
  return FactoredRational(k, 1, std::move(fs));
}

MultiPoly p(const std::string& text, std::size_t k) { return parse_poly(text, k); }

UniPoly u(const std::string& text) { return parse_unipoly(text); }

TermSpec load_spec(const std::string& name) {
  std::ifstream in(std::string(HGTERM_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

TermSpec binomial() { return load_spec("binomial.json"); }
TermSpec odd_product() { return load_spec("odd_product.json"); }
TermSpec constant_term() { return load_spec("constant.json"); }

std::vector<std::pair<std::string, TermSpec>> bundled() {
  return {{"constant", constant_term()}, {"odd_product", odd_product()}, {"binomial", binomial()}};
}

std::vector<std::pair<std::string, TermSpec>> extra_specs() {
  std::vector<std::pair<std::string, TermSpec>> out;
  auto add = [&](std::string name, std::vector<FactoredRational> gens, IntVec seed, Rat value) {
    TermSpec s = TermSpec::from_generators(std::move(gens));
    s.seed = Seed{std::move(seed), value};
    out.emplace_back(std::move(name), std::move(s));
  };
  // 3^z1 z1 z2
  add("telescoping", {q("3*(z1+1)", "z1", 2), q("z2+1", "z2", 2)}, {1, 1}, 3);
  // z1^2 + z2
  add("non_simple", {q("(z1+1)^2+z2", "z1^2+z2", 2), q("z1^2+z2+1", "z1^2+z2", 2)}, {0, 1}, 1);
  // (z1+z2)!/z1! 2^z2
  add("mixed", {q("z1+z2+1", "z1+1", 2), q("2*(z1+z2+1)", "1", 2)}, {0, 0}, 1);
  // 2^z1 / z1!
  add("exponential", {q("2", "z1+1", 1)}, {0}, 1);
  // (z1^2 + z2) z1!
  add("quadratic_times_factorial",
      {q("((z1+1)^2+z2)*(z1+1)", "z1^2+z2", 2), q("z1^2+z2+1", "z1^2+z2", 2)}, {0, 1}, 1);
  // (z1+z2+z3)! / (z1! z2! z3!)
  add("trinomial",
      {q("z1+z2+z3+1", "z1+1", 3), q("z1+z2+z3+1", "z2+1", 3), q("z1+z2+z3+1", "z3+1", 3)},
      {0, 0, 0}, 1);
  return out;
}

Rat pascal(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0 || m > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  return Rat(r);
}

Rat odd_product_value(std::int64_t n) {
  Rat r = 1;
  for (std::int64_t j = 0; j < n; ++j) r *= 2 * j + 1;
  for (std::int64_t j = 1; j <= -n; ++j) r /= 1 - 2 * j;
  return r;
}

namespace {

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

IntVec random_direction(std::mt19937_64& rng, std::size_t k) {
  while (true) {
    IntVec v = random_vec(rng, k, -1, 1);
    if (!is_zero_vector(v)) return primitive_direction(v);
  }
}

UniPoly random_chain_poly(std::mt19937_64& rng) {
  UniPoly out = UniPoly::constant(1);
  const auto n = pick(rng, 0, 2);
  for (std::int64_t i = 0; i < n; ++i) {
    out = out * UniPoly({Rat(pick(rng, -3, 3)), Rat(pick(rng, 1, 2))});
  }
  return out;
}

}  // namespace

IntVec random_vec(std::mt19937_64& rng, std::size_t k, std::int64_t lo, std::int64_t hi) {
  IntVec v(k);
  for (auto& x : v) x = pick(rng, lo, hi);
  return v;
}

MultiPoly random_poly(std::mt19937_64& rng, std::size_t k, int degree, std::int64_t coeff) {
  MultiPoly out(k);
  const auto terms = pick(rng, 1, 4);
  for (std::int64_t t = 0; t < terms; ++t) {
    Monomial m(k, 0);
    auto left = pick(rng, 0, degree);
    for (std::size_t i = 0; i < k && left > 0; ++i) {
      const auto e = i + 1 == k ? left : pick(rng, 0, left);
      m[i] = static_cast<std::uint32_t>(e);
      left -= e;
    }
    const auto c = pick(rng, -coeff, coeff);
    if (c != 0) out.add_term(m, c);
  }
  return out;
}

OreSatoForm random_form(std::mt19937_64& rng, std::size_t k) {
  static const Rat gammas[] = {Rat(1), Rat(2), Rat(-1), Rat(1, 2), Rat(3)};
  std::vector<Rat> gamma(k);
  for (auto& g : gamma) g = gammas[pick(rng, 0, 4)];

  std::vector<FactoredRational::Factor> cf;
  std::vector<FactoredRational::Factor> df;
  const auto nc = pick(rng, 0, 1);
  for (std::int64_t i = 0; i < nc; ++i) {
    cf.push_back({MultiPoly::linear_form(random_direction(rng, k), pick(rng, -2, 2)), 1});
  }
  const auto nd = pick(rng, 0, 1);
  for (std::int64_t i = 0; i < nd; ++i) {
    FactoredRational::Factor f{MultiPoly::linear_form(random_direction(rng, k), pick(rng, 3, 5)), 1};
    df.push_back(std::move(f));
  }

  std::vector<Chain> chains;
  const auto nchains = pick(rng, 1, 2);
  for (std::int64_t i = 0; i < nchains; ++i) {
    IntVec v = random_direction(rng, k);
    bool seen = false;
    for (const auto& c : chains) seen = seen || c.v == v;
    if (seen) continue;
    UniPoly a = random_chain_poly(rng);
    UniPoly b = random_chain_poly(rng);
    if (a.degree() == 0 && b.degree() == 0) a = UniPoly({Rat(1), Rat(1)});
    chains.push_back({std::move(v), std::move(a), std::move(b)});
  }
  return OreSatoForm::make(k, std::move(cf), std::move(df), std::move(gamma), std::move(chains));
}

TermSpec spec_from_form(const OreSatoForm& form) {
  std::vector<FactoredRational> gens;
  for (std::size_t i = 0; i < form.k; ++i) gens.push_back(ratio_from_form(form, unit_vector(form.k, i)));
  return TermSpec::from_generators(std::move(gens));
}

TermSpec perturb(const TermSpec& spec, std::mt19937_64& rng) {
  if (spec.k < 2) throw std::invalid_argument("perturb needs k >= 2");
  TermSpec out = TermSpec::from_generators(spec.generators);
  const auto other = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(spec.k) - 1));
  MultiPoly f = MultiPoly::variable(spec.k, other) + MultiPoly::constant(spec.k, pick(rng, -4, 4));
  out.generators[0] = out.generators[0] * FactoredRational::from_poly(f);
  return out;
}

std::vector<IntVec> cube(std::size_t k, std::int64_t lo, std::int64_t hi) {
  std::vector<IntVec> out;
  Window{IntVec(k, lo), IntVec(k, hi)}.for_each([&](const IntVec& z) {
    out.push_back(z);
    return true;
  });
  return out;
}

}  // namespace fixtures
