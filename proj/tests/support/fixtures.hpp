#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hgterm/oracle.hpp"
#include "hgterm/oresato.hpp"
#include "hgterm/parse.hpp"
#include "hgterm/structure.hpp"
#include "hgterm/termratio.hpp"

namespace fixtures {

using namespace hgterm;

FactoredRational q(const std::string& num, const std::string& den, std::size_t k);
MultiPoly p(const std::string& text, std::size_t k);
UniPoly u(const std::string& text);

/// Bundled specs from tests/data.
TermSpec load_spec(const std::string& name);
TermSpec binomial();
TermSpec odd_product();
TermSpec constant_term();

/// All three bundled specs, by name.
std::vector<std::pair<std::string, TermSpec>> bundled();

/// A few extra hand-written specs exercising telescoping, non-simple orbits
/// and mixed chains.
std::vector<std::pair<std::string, TermSpec>> extra_specs();

/// C(n, m) with the convention C(n, m) = 0 outside 0 <= m <= n, n >= 0.
Rat pascal(std::int64_t n, std::int64_t m);
/// prod_{j=0}^{n-1} (2j+1) for n >= 0, prod_{j=1}^{-n} 1/(1-2j) for n < 0.
Rat odd_product_value(std::int64_t n);

/// Random Ore-Sato form in k variables with small integer data.
OreSatoForm random_form(std::mt19937_64& rng, std::size_t k);
/// Spec whose generators are ratio_from_form(form, e_i).
TermSpec spec_from_form(const OreSatoForm& form);
/// Multiplies generator 0 by a factor depending on another variable, which
/// breaks compatibility; requires k >= 2.
TermSpec perturb(const TermSpec& spec, std::mt19937_64& rng);

IntVec random_vec(std::mt19937_64& rng, std::size_t k, std::int64_t lo, std::int64_t hi);
MultiPoly random_poly(std::mt19937_64& rng, std::size_t k, int degree, std::int64_t coeff);

/// Every point of [lo, hi]^k.
std::vector<IntVec> cube(std::size_t k, std::int64_t lo, std::int64_t hi);

}  // namespace fixtures
