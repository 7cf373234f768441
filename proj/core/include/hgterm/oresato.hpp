#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hgterm/termratio.hpp"

namespace hgterm {

/// gp(a, b): prod_{j=a}^{b-1} term(j) for b >= a, prod_{j=b}^{a-1} 1/term(j)
/// otherwise. Throws ZeroTermError on a vanishing term.
Rat gp_eval(std::int64_t a, std::int64_t b, const std::function<Rat(std::int64_t)>& term);

/// Factorial chain along a primitive direction v.
struct Chain {
  IntVec v;
  UniPoly a;
  UniPoly b;
  bool operator==(const Chain&) const = default;
};

/// R_w(z) = gamma^w C(z+w)/C(z) D(z)/D(z+w) prod_v gp_{j=0}^{v.w} a_v(v.z+j)/b_v(v.z+j)
struct OreSatoForm {
  std::size_t k = 0;
  MultiPoly C;
  MultiPoly D;
  std::vector<Rat> gamma;
  std::vector<Chain> chains;
  /// Factorizations of C and D when known; empty means C and D are used whole.
  std::vector<FactoredRational::Factor> c_factors;
  std::vector<FactoredRational::Factor> d_factors;

  /// Form with the given factors; C and D are their normalized products.
  static OreSatoForm make(std::size_t k, std::vector<FactoredRational::Factor> c_factors,
                          std::vector<FactoredRational::Factor> d_factors,
                          std::vector<Rat> gamma, std::vector<Chain> chains);
  /// Trivial form: C = D = 1, gamma = 1, no chains.
  static OreSatoForm identity(std::size_t k);

  const Chain* chain(std::span<const std::int64_t> v) const;

  /// Compares C, D, gamma and chains; the factor lists are not compared.
  bool operator==(const OreSatoForm& o) const {
    return k == o.k && C == o.C && D == o.D && gamma == o.gamma && chains == o.chains;
  }
};

OreSatoForm decompose(const TermSpec& spec);

FactoredRational ratio_from_form(const OreSatoForm& form, std::span<const std::int64_t> w);

}  // namespace hgterm
