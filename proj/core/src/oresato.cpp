#include "hgterm/oresato.hpp"

#include <algorithm>
#include <map>

#include "hgterm/errors.hpp"
#include "hgterm/log.hpp"

namespace hgterm {

Rat gp_eval(std::int64_t a, std::int64_t b, const std::function<Rat(std::int64_t)>& term) {
  Rat acc = 1;
  if (b >= a) {
    for (std::int64_t j = a; j < b; ++j) {
      Rat t = term(j);
      if (t == 0) throw ZeroTermError(j);
      acc *= t;
    }
  } else {
    for (std::int64_t j = b; j < a; ++j) {
      Rat t = term(j);
      if (t == 0) throw ZeroTermError(j);
      acc /= t;
    }
  }
  return acc;
}

OreSatoForm OreSatoForm::make(std::size_t k, std::vector<FactoredRational::Factor> c_factors,
                              std::vector<FactoredRational::Factor> d_factors,
                              std::vector<Rat> gamma, std::vector<Chain> chains) {
  OreSatoForm f;
  f.k = k;
  f.C = MultiPoly::constant(k, 1);
  f.D = MultiPoly::constant(k, 1);
  for (const auto& c : c_factors) f.C = f.C * c.base.pow(static_cast<unsigned>(c.exponent));
  for (const auto& d : d_factors) f.D = f.D * d.base.pow(static_cast<unsigned>(d.exponent));
  f.C = f.C.normalized();
  f.D = f.D.normalized();
  if (gamma.empty()) gamma.assign(k, Rat(1));
  if (gamma.size() != k) throw DimensionError("gamma length must equal k");
  f.gamma = std::move(gamma);
  std::sort(chains.begin(), chains.end(),
            [](const Chain& x, const Chain& y) { return x.v < y.v; });
  f.chains = std::move(chains);
  f.c_factors = std::move(c_factors);
  f.d_factors = std::move(d_factors);
  return f;
}

OreSatoForm OreSatoForm::identity(std::size_t k) { return make(k, {}, {}, {}, {}); }

const Chain* OreSatoForm::chain(std::span<const std::int64_t> v) const {
  for (const auto& c : chains) {
    if (std::equal(c.v.begin(), c.v.end(), v.begin(), v.end())) return &c;
  }
  return nullptr;
}

namespace {

std::vector<FactoredRational::Factor> factors_of(const MultiPoly& p,
                                                 const std::vector<FactoredRational::Factor>& fs) {
  if (!fs.empty() || p.is_constant()) return fs;
  return {{p, 1}};
}

}  // namespace

FactoredRational ratio_from_form(const OreSatoForm& form, std::span<const std::int64_t> w) {
  const std::size_t k = form.k;
  if (w.size() != k) throw DimensionError("direction arity mismatch");
  Rat scalar = 1;
  for (std::size_t i = 0; i < k && i < form.gamma.size(); ++i) scalar *= pow_rat(form.gamma[i], w[i]);
  std::vector<FactoredRational::Factor> fs;
  for (const auto& c : factors_of(form.C, form.c_factors)) {
    fs.push_back({c.base.shift(w), c.exponent});
    fs.push_back({c.base, -c.exponent});
  }
  for (const auto& d : factors_of(form.D, form.d_factors)) {
    fs.push_back({d.base, d.exponent});
    fs.push_back({d.base.shift(w), -d.exponent});
  }
  for (const auto& ch : form.chains) {
    const std::int64_t n = dot(ch.v, w);
    const std::int64_t sign = n >= 0 ? 1 : -1;
    for (std::int64_t j = std::min<std::int64_t>(0, n); j < std::max<std::int64_t>(0, n); ++j) {
      fs.push_back({ch.a.compose_linear(ch.v, j), sign});
      fs.push_back({ch.b.compose_linear(ch.v, j), -sign});
    }
  }
  return FactoredRational(k, scalar, std::move(fs));
}

namespace {

// ---- Laurent polynomials with integer coefficients ----

using Laurent = std::map<std::int64_t, std::int64_t>;

void bump(Laurent& p, std::int64_t e, std::int64_t c) {
  if (c == 0) return;
  auto& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

// (x^n - 1) / (x - 1)
Laurent phi(std::int64_t n) {
  Laurent out;
  if (n > 0) {
    for (std::int64_t j = 0; j < n; ++j) out[j] = 1;
  } else {
    for (std::int64_t j = n; j < 0; ++j) out[j] = -1;
  }
  return out;
}

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) bump(out, ea + eb, ca * cb);
  }
  return out;
}

// m / phi(n), when exact
std::optional<Laurent> divide_phi(const Laurent& m, std::int64_t n) {
  if (m.empty()) return Laurent{};
  const std::int64_t len = n > 0 ? n : -n;
  const std::int64_t lo = m.begin()->first;
  const std::int64_t deg = m.rbegin()->first - lo;
  if (deg < len - 1) return std::nullopt;
  std::vector<std::int64_t> rem(static_cast<std::size_t>(deg + 1), 0);
  for (const auto& [e, c] : m) rem[static_cast<std::size_t>(e - lo)] = c;
  std::vector<std::int64_t> q(static_cast<std::size_t>(deg - len + 2), 0);
  for (std::int64_t d = deg; d >= len - 1; --d) {
    const std::int64_t c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(d - len + 1)] = c;
    for (std::int64_t t = 0; t < len; ++t) rem[static_cast<std::size_t>(d - t)] -= c;
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t x) { return x != 0; })) {
    return std::nullopt;
  }
  Laurent out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    const auto e = static_cast<std::int64_t>(i) + lo;
    if (n > 0) {
      out[e] = q[i];
    } else {
      out[e - n] = -q[i];
    }
  }
  return out;
}

// ---- coprime bases ----

std::vector<MultiPoly> coprime_basis(const std::vector<MultiPoly>& inputs) {
  std::vector<MultiPoly> basis;
  std::vector<MultiPoly> work;
  for (const auto& p : inputs) {
    if (!p.is_constant()) work.push_back(p.normalized());
  }
  while (!work.empty()) {
    MultiPoly x = work.back();
    work.pop_back();
    if (x.is_constant()) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == x) {
        split = true;
        break;
      }
      MultiPoly g = gcd(x, basis[i]);
      if (g.is_constant()) continue;
      MultiPoly q = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      auto qx = divide_exact(x, g);
      auto qq = divide_exact(q, g);
      if (!qx || !qq) throw IntegrityError("gcd does not divide its arguments");
      work.push_back(g.normalized());
      work.push_back(qx->normalized());
      work.push_back(qq->normalized());
      split = true;
      break;
    }
    if (!split) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& inputs) {
  std::vector<UniPoly> basis;
  std::vector<UniPoly> work;
  for (const auto& p : inputs) {
    if (p.degree() > 0) work.push_back(p.monic());
  }
  while (!work.empty()) {
    UniPoly x = work.back();
    work.pop_back();
    if (x.degree() <= 0) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == x) {
        split = true;
        break;
      }
      UniPoly g = gcd(x, basis[i]);
      if (g.degree() <= 0) continue;
      UniPoly q = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(g);
      work.push_back(x.divmod(g).first.monic());
      work.push_back(q.divmod(g).first.monic());
      split = true;
      break;
    }
    if (!split) basis.push_back(x);
  }
  return basis;
}

std::int64_t root_bound(const UniPoly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeff(i) / p.leading())));
  return to_int64(ceil_rat(m)) + 1;
}

constexpr std::int64_t kMaxShiftSearch = 256;

// Refines monic polynomials until any two elements are either integer shifts
// of each other or share no root differing by an integer.
std::vector<UniPoly> shift_refine(const std::vector<UniPoly>& inputs) {
  std::vector<UniPoly> set = coprime_basis(inputs);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < set.size() && !changed; ++i) {
      for (std::size_t j = 0; j < set.size() && !changed; ++j) {
        std::int64_t bound = root_bound(set[i]) + root_bound(set[j]);
        if (bound > kMaxShiftSearch) {
          log_warning("shift search for " + set[i].to_string() + " truncated at " +
                      std::to_string(kMaxShiftSearch));
          bound = kMaxShiftSearch;
        }
        for (std::int64_t c = -bound; c <= bound && !changed; ++c) {
          if (i == j && c == 0) continue;
          UniPoly g = gcd(set[i], set[j].shift(Rat(static_cast<long>(c))));
          if (g.degree() <= 0 || g.degree() == set[i].degree()) continue;
          std::vector<UniPoly> next = set;
          next.push_back(g);
          next.push_back(set[i].divmod(g).first);
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
          set = coprime_basis(next);
          changed = true;
        }
      }
    }
  }
  return set;
}

int multiplicity(UniPoly& p, const UniPoly& u) {
  int m = 0;
  while (p.degree() >= u.degree()) {
    auto [q, r] = p.divmod(u);
    if (!r.is_zero()) break;
    p = q;
    ++m;
  }
  return m;
}

// ---- shift detection for non-simple factors ----

MultiPoly homogeneous_part(const MultiPoly& p, int d) {
  MultiPoly out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    int deg = 0;
    for (auto e : m) deg += static_cast<int>(e);
    if (deg == d) out.add_term(m, c);
  }
  return out;
}

struct LinearSystem {
  std::vector<std::vector<Rat>> rows;  // augmented [A | b]
};

// Row-reduces in place; returns rank, or -1 when inconsistent.
int row_reduce(LinearSystem& s, std::size_t cols) {
  int rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < s.rows.size() && s.rows[pivot][c] == 0) ++pivot;
    if (pivot == s.rows.size()) continue;
    std::swap(s.rows[pivot], s.rows[static_cast<std::size_t>(rank)]);
    auto& pr = s.rows[static_cast<std::size_t>(rank)];
    Rat inv = 1 / pr[c];
    for (auto& x : pr) x *= inv;
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || s.rows[r][c] == 0) continue;
      Rat f = s.rows[r][c];
      for (std::size_t t = 0; t <= cols; ++t) s.rows[r][t] -= f * pr[t];
    }
    ++rank;
  }
  for (std::size_t r = static_cast<std::size_t>(rank); r < s.rows.size(); ++r) {
    if (s.rows[r][cols] != 0) return -1;
  }
  return rank;
}

constexpr std::int64_t kShiftBox = 12;

// Candidate shifts u with h(z + u) == target, by the degree d-1 coefficients.
std::vector<IntVec> shifts_onto(const MultiPoly& h, const MultiPoly& target, bool nonzero_only,
                                bool first_only) {
  const std::size_t k = h.arity();
  const int d = h.total_degree();
  std::vector<IntVec> out;
  if (target.total_degree() != d) return out;
  MultiPoly top = homogeneous_part(h, d);
  if (!(top == homogeneous_part(target, d))) return out;
  MultiPoly rhs = homogeneous_part(target, d - 1) - homogeneous_part(h, d - 1);
  std::vector<MultiPoly> partials;
  for (std::size_t i = 0; i < k; ++i) partials.push_back(top.derivative(i));
  std::map<Monomial, std::vector<Rat>, GrlexLess> eqs;
  auto row = [&](const Monomial& m) -> std::vector<Rat>& {
    auto it = eqs.find(m);
    if (it == eqs.end()) it = eqs.emplace(m, std::vector<Rat>(k + 1, Rat(0))).first;
    return it->second;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [m, c] : partials[i].terms()) row(m)[i] = c;
  }
  for (const auto& [m, c] : rhs.terms()) row(m)[k] = c;
  LinearSystem sys;
  for (auto& [m, r] : eqs) sys.rows.push_back(r);
  const LinearSystem original = sys;
  int rank = row_reduce(sys, k);
  if (rank < 0) return out;
  auto accept = [&](const IntVec& u) {
    if (nonzero_only && is_zero_vector(u)) return false;
    return h.shift(u) == target;
  };
  if (rank == static_cast<int>(k)) {
    IntVec u(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Rat& x = sys.rows[i][k];
      if (!is_integer(x)) return out;
      u[i] = to_int64(x.get_num());
    }
    if (accept(u)) out.push_back(u);
    return out;
  }
  // underdetermined: bounded search over the solution set
  IntVec u(k, -kShiftBox);
  while (true) {
    bool solves = true;
    for (const auto& r : original.rows) {
      Rat acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += r[i] * u[i];
      if (acc != r[k]) {
        solves = false;
        break;
      }
    }
    if (solves && accept(u)) {
      out.push_back(u);
      if (first_only) return out;
    }
    std::size_t i = 0;
    while (i < k && u[i] == kShiftBox) u[i++] = -kShiftBox;
    if (i == k) break;
    ++u[i];
  }
  return out;
}

struct Accumulator {
  std::size_t k;
  std::vector<FactoredRational::Factor> c;
  std::vector<FactoredRational::Factor> d;
  std::map<IntVec, std::pair<UniPoly, UniPoly>> chains;

  void telescope(const MultiPoly& base, std::int64_t g) {
    if (g > 0) c.push_back({base, g});
    if (g < 0) d.push_back({base, -g});
  }
  std::pair<UniPoly, UniPoly>& chain(const IntVec& v) {
    auto it = chains.find(v);
    if (it == chains.end()) {
      it = chains.emplace(v, std::make_pair(UniPoly::constant(1), UniPoly::constant(1))).first;
    }
    return it->second;
  }
};

struct SimpleElement {
  UniPoly pbar;
  std::vector<std::int64_t> exps;
};

void classify_direction(const IntVec& v, const std::vector<SimpleElement>& elems,
                        Accumulator& acc) {
  const std::size_t k = v.size();
  struct Atom {
    UniPoly u;
    std::vector<std::int64_t> exps;
  };
  std::vector<Atom> atoms;
  auto add_atom = [&](const UniPoly& u, const std::vector<std::int64_t>& e, std::int64_t mult) {
    if (mult == 0) return;
    for (auto& a : atoms) {
      if (a.u == u) {
        for (std::size_t i = 0; i < k; ++i) a.exps[i] += e[i] * mult;
        return;
      }
    }
    Atom a{u, e};
    for (auto& x : a.exps) x *= mult;
    atoms.push_back(std::move(a));
  };

  std::vector<std::pair<UniPoly, std::vector<std::int64_t>>> cofactors;
  for (const auto& el : elems) {
    RootSplit rs = rational_roots(el.pbar);
    for (const auto& r : rs.roots) add_atom(UniPoly::linear_root(r), el.exps, 1);
    if (rs.cofactor.degree() > 0) cofactors.emplace_back(rs.cofactor.monic(), el.exps);
  }
  if (!cofactors.empty()) {
    std::vector<UniPoly> polys;
    for (const auto& cf : cofactors) polys.push_back(cf.first);
    std::vector<UniPoly> refined = shift_refine(polys);
    for (auto& [p, e] : cofactors) {
      UniPoly rest = p;
      for (const auto& g : refined) add_atom(g, e, multiplicity(rest, g));
      if (rest.degree() > 0) throw IntegrityError("shift refinement lost a factor");
    }
  }

  // group atoms into shift classes with canonical representatives
  struct ShiftClass {
    UniPoly rep;
    std::vector<Laurent> m;  // per generator
  };
  std::vector<ShiftClass> classes;
  for (const auto& a : atoms) {
    const int n = a.u.degree();
    const Int cn = -floor_rat(a.u.coeff(n - 1) / Rat(n));
    UniPoly rep = a.u.shift(Rat(cn));
    const std::int64_t offset = -to_int64(cn);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const ShiftClass& c) { return c.rep == rep; });
    if (it == classes.end()) {
      classes.push_back({rep, std::vector<Laurent>(k)});
      it = classes.end() - 1;
    }
    for (std::size_t i = 0; i < k; ++i) bump(it->m[i], offset, a.exps[i]);
  }

  for (const auto& cls : classes) {
    const std::string name = cls.rep.compose_linear(v).to_string();
    std::size_t pivot = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (v[i] != 0 && pivot == k) pivot = i;
      if (v[i] == 0 && !cls.m[i].empty()) {
        throw StructureError("simple factor family is not a telescoping chain", name);
      }
    }
    auto P = divide_phi(cls.m[pivot], v[pivot]);
    if (!P) throw StructureError("simple factor family is not a telescoping chain", name);
    for (std::size_t j = 0; j < k; ++j) {
      if (v[j] != 0 && mul(*P, phi(v[j])) != cls.m[j]) {
        throw StructureError("multiplicities of a simple factor family are inconsistent", name);
      }
    }
    if (P->empty()) continue;
    std::int64_t s = 0;
    for (const auto& [e, c] : *P) s += c;
    const std::int64_t c0 = P->begin()->first;
    if (s != 0) {
      UniPoly f = cls.rep.shift(Rat(static_cast<long>(c0))).pow(static_cast<unsigned>(s > 0 ? s : -s));
      auto& ch = acc.chain(v);
      if (s > 0) {
        ch.first = ch.first * f;
      } else {
        ch.second = ch.second * f;
      }
    }
    Laurent q = *P;
    bump(q, c0, -s);
    if (q.empty()) continue;
    std::int64_t g = 0;
    for (std::int64_t c = q.begin()->first; c <= q.rbegin()->first; ++c) {
      auto it = q.find(c);
      if (it != q.end()) g -= it->second;
      if (g != 0) acc.telescope(cls.rep.compose_linear(v, c), g);
    }
  }
}

void classify_orbits(const std::vector<MultiPoly>& elems,
                     const std::vector<std::vector<std::int64_t>>& exps, Accumulator& acc) {
  const std::size_t k = acc.k;
  std::vector<bool> used(elems.size(), false);
  for (std::size_t first = 0; first < elems.size(); ++first) {
    if (used[first]) continue;
    const MultiPoly& h0 = elems[first];
    const std::string name = h0.to_string();
    if (!shifts_onto(h0, h0, true, true).empty()) {
      throw StructureError("non-simple factor is invariant under a translation", name);
    }
    std::map<IntVec, std::vector<std::int64_t>> m;
    m[IntVec(k, 0)] = exps[first];
    used[first] = true;
    for (std::size_t r = first + 1; r < elems.size(); ++r) {
      if (used[r]) continue;
      auto us = shifts_onto(h0, elems[r], false, true);
      if (us.empty()) continue;
      used[r] = true;
      m[us.front()] = exps[r];
    }
    auto mult = [&](const IntVec& u, std::size_t j) -> std::int64_t {
      auto it = m.find(u);
      return it == m.end() ? 0 : it->second[j];
    };
    // Gamma(u) = -sum_{t >= 0} m_1(u - t e_1)
    std::map<IntVec, std::int64_t> gamma;
    std::map<IntVec, std::pair<std::int64_t, std::int64_t>> lines;
    for (const auto& [u, e] : m) {
      IntVec key = u;
      key[0] = 0;
      auto it = lines.find(key);
      if (it == lines.end()) {
        lines.emplace(key, std::make_pair(u[0], u[0]));
      } else {
        it->second.first = std::min(it->second.first, u[0]);
        it->second.second = std::max(it->second.second, u[0]);
      }
    }
    for (const auto& [key, range] : lines) {
      std::int64_t g = 0;
      IntVec u = key;
      for (std::int64_t t = range.first; t <= range.second; ++t) {
        u[0] = t;
        g -= mult(u, 0);
        if (g != 0) gamma[u] = g;
      }
      if (g != 0) throw StructureError("non-simple factor family does not telescope", name);
    }
    auto gam = [&](const IntVec& u) -> std::int64_t {
      auto it = gamma.find(u);
      return it == gamma.end() ? 0 : it->second;
    };
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<IntVec> pts;
      for (const auto& [u, e] : m) pts.push_back(u);
      for (const auto& [u, g] : gamma) {
        pts.push_back(u);
        pts.push_back(add(u, unit_vector(k, j)));
      }
      for (const auto& u : pts) {
        if (mult(u, j) != gam(sub(u, unit_vector(k, j))) - gam(u)) {
          throw StructureError("non-simple factor family does not telescope", name);
        }
      }
    }
    for (const auto& [u, g] : gamma) acc.telescope(h0.shift(u), g);
  }
}

}  // namespace

OreSatoForm decompose(const TermSpec& spec) {
  spec.validate();
  if (spec.zero_divisor_witness) {
    throw PreconditionError("decompose does not apply to a declared zero divisor");
  }
  if (!check_compatibility(spec)) throw CocycleError("generators are not compatible");
  const std::size_t k = spec.k;

  std::vector<MultiPoly> inputs;
  for (const auto& g : spec.generators) {
    for (const auto& f : g.factors()) inputs.push_back(f.base);
  }
  const std::vector<MultiPoly> basis = coprime_basis(inputs);
  std::vector<std::vector<std::int64_t>> exps(basis.size(), std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& f : spec.generators[i].factors()) {
      MultiPoly p = f.base;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        while (auto q = divide_exact(p, basis[b])) {
          p = *q;
          exps[b][i] += f.exponent;
        }
      }
      if (!p.is_constant()) throw IntegrityError("factor not covered by the coprime basis");
    }
  }

  Accumulator acc{k, {}, {}, {}};
  std::map<IntVec, std::vector<SimpleElement>> simple;
  std::vector<MultiPoly> others;
  std::vector<std::vector<std::int64_t>> other_exps;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (auto sf = detect_simple(basis[b])) {
      simple[sf->direction].push_back({sf->pbar, exps[b]});
    } else {
      others.push_back(basis[b]);
      other_exps.push_back(exps[b]);
    }
  }
  for (const auto& [v, elems] : simple) classify_direction(v, elems, acc);
  classify_orbits(others, other_exps, acc);

  // cancel common factors of C and D
  std::vector<FactoredRational::Factor> all = acc.c;
  for (const auto& d : acc.d) all.push_back({d.base, -d.exponent});
  FactoredRational cd(k, 1, std::move(all));
  std::vector<FactoredRational::Factor> cf, df;
  for (const auto& f : cd.factors()) {
    if (f.exponent > 0) {
      cf.push_back(f);
    } else {
      df.push_back({f.base, -f.exponent});
    }
  }

  std::vector<Chain> chains;
  for (const auto& [v, ab] : acc.chains) {
    UniPoly a = ab.first.primitive();
    UniPoly b = ab.second.primitive();
    if (a.degree() <= 0 && b.degree() <= 0) continue;
    chains.push_back({v, a, b});
  }

  OreSatoForm form = OreSatoForm::make(k, cf, df, {}, chains);
  for (std::size_t i = 0; i < k; ++i) {
    FactoredRational rest = spec.generators[i] / ratio_from_form(form, unit_vector(k, i));
    if (!rest.is_constant()) throw IntegrityError("decomposition left a nonconstant residue");
    form.gamma[i] = rest.scalar();
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!(ratio_from_form(form, unit_vector(k, i)) == spec.generators[i])) {
      throw IntegrityError("decomposition does not reproduce generator " + std::to_string(i + 1));
    }
  }
  return form;
}

}  // namespace hgterm
