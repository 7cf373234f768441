#include "hgterm/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hgterm/errors.hpp"

namespace hgterm {

namespace {

std::uint64_t mono_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = mono_degree(a);
  const auto db = mono_degree(b);
  if (da != db) return da < db;
  return a < b;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(std::size_t arity, const Rat& c) {
  MultiPoly p(arity);
  p.add_term(Monomial(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t i) {
  if (i >= arity) throw DimensionError("variable index out of range");
  Monomial m(arity, 0);
  m[i] = 1;
  return monomial(m, 1);
}

MultiPoly MultiPoly::linear_form(std::span<const std::int64_t> v, const Rat& c) {
  MultiPoly p = constant(v.size(), c);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Monomial m(v.size(), 0);
    m[i] = 1;
    p.add_term(m, Rat(static_cast<long>(v[i])));
  }
  return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rat& c) {
  MultiPoly p(m.size());
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rat MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial(arity_, 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(mono_degree(terms_.rbegin()->first));
}

int MultiPoly::degree_in(std::size_t i) const {
  if (i >= arity_) throw DimensionError("variable index out of range");
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return static_cast<int>(d);
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (m.size() != arity_) throw DimensionError("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (arity_ != o.arity_) {
    throw DimensionError("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                         std::to_string(o.arity_));
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r(a.arity_);
  Monomial m(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
  if (arity_ != o.arity_) return arity_ < o.arity_;
  auto it = terms_.rbegin();
  auto jt = o.terms_.rbegin();
  GrlexLess less;
  for (; it != terms_.rend() && jt != o.terms_.rend(); ++it, ++jt) {
    if (it->first != jt->first) return less(it->first, jt->first);
    if (it->second != jt->second) return it->second < jt->second;
  }
  return it == terms_.rend() && jt != o.terms_.rend();
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Rat MultiPoly::evaluate(std::span<const std::int64_t> z) const {
  if (z.size() != arity_) throw DimensionError("evaluation point arity mismatch");
  std::vector<Rat> zr;
  zr.reserve(z.size());
  for (auto x : z) zr.emplace_back(static_cast<long>(x));
  return evaluate(std::span<const Rat>(zr));
}

Rat MultiPoly::evaluate(std::span<const Rat> z) const {
  if (z.size() != arity_) throw DimensionError("evaluation point arity mismatch");
  // powers[i][e] = z_i^e, grown lazily
  std::vector<std::vector<Rat>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) powers[i].push_back(Rat(1));
  Rat sum = 0;
  Rat t;
  for (const auto& [m, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * z[i]);
      t *= pw[m[i]];
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::shift(std::span<const std::int64_t> v) const {
  if (v.size() != arity_) throw DimensionError("shift vector arity mismatch");
  if (is_zero_vector(v)) return *this;
  MultiPoly current = *this;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (v[i] == 0) continue;
    const Rat vi(static_cast<long>(v[i]));
    MultiPoly next(arity_);
    for (const auto& [m, c] : current.terms_) {
      const unsigned e = m[i];
      Monomial mm = m;
      Rat vpow = 1;
      // (z_i + v_i)^e = sum_j C(e, j) v_i^(e-j) z_i^j, accumulated from j = e downwards
      for (unsigned j = e + 1; j-- > 0;) {
        mm[i] = j;
        next.add_term(mm, c * Rat(binomial(e, j)) * vpow);
        vpow *= vi;
      }
    }
    current = std::move(next);
  }
  return current;
}

MultiPoly MultiPoly::derivative(std::size_t i) const {
  if (i >= arity_) throw DimensionError("variable index out of range");
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial mm = m;
    mm[i] -= 1;
    r.add_term(mm, c * Rat(static_cast<unsigned long>(m[i])));
  }
  return r;
}

Rat MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Int g = 0;
  Int l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat r(abs(g), l);
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  if (leading_coefficient() < 0) c = -c;
  MultiPoly r = *this;
  r *= Rat(1) / c;
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool is_const = mono_degree(m) == 0;
    bool wrote = false;
    if (is_const || mag != 1) {
      os << format_rat(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << 'z' << (i + 1);
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Multivariate gcd

namespace {

/// Coefficients of p viewed as a polynomial in z_x; z_x is removed from the keys.
std::map<std::uint32_t, MultiPoly> coeffs_in(const MultiPoly& p, std::size_t x) {
  std::map<std::uint32_t, MultiPoly> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    const auto e = mm[x];
    mm[x] = 0;
    auto [it, _] = out.try_emplace(e, MultiPoly(p.arity()));
    it->second.add_term(mm, c);
  }
  return out;
}

MultiPoly leading_coeff_in(const MultiPoly& p, std::size_t x) {
  auto cs = coeffs_in(p, x);
  return cs.rbegin()->second;
}

MultiPoly var_power(std::size_t arity, std::size_t x, unsigned e) {
  Monomial m(arity, 0);
  m[x] = e;
  return MultiPoly::monomial(m, 1);
}

MultiPoly content_in(const MultiPoly& p, std::size_t x) {
  MultiPoly g(p.arity());
  for (const auto& [e, c] : coeffs_in(p, x)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

MultiPoly exact(const MultiPoly& p, const MultiPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw IntegrityError("gcd: expected exact division failed");
  return *r;
}

MultiPoly primitive_in(const MultiPoly& p, std::size_t x) {
  if (p.is_zero()) return p;
  return exact(p, content_in(p, x)).normalized();
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t x) {
  const int db = b.degree_in(x);
  const MultiPoly lb = leading_coeff_in(b, x);
  while (!a.is_zero() && a.degree_in(x) >= db) {
    const int da = a.degree_in(x);
    const MultiPoly la = leading_coeff_in(a, x);
    a = lb * a - la * var_power(a.arity(), x, static_cast<unsigned>(da - db)) * b;
    if (!a.is_zero()) a = a.normalized();
  }
  return a;
}

}  // namespace

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (p.arity() != q.arity()) throw DimensionError("divide: arity mismatch");
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  MultiPoly quotient(p.arity());
  MultiPoly r = p;
  const Monomial& lq = q.leading_monomial();
  const Rat& cq = q.leading_coefficient();
  Monomial t(p.arity());
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (lr[i] < lq[i]) return std::nullopt;
      t[i] = lr[i] - lq[i];
    }
    const Rat c = r.leading_coefficient() / cq;
    const MultiPoly term = MultiPoly::monomial(t, c);
    quotient += term;
    r -= term * q;
  }
  return quotient;
}

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.arity() != q.arity()) throw DimensionError("gcd: arity mismatch");
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  const std::size_t k = p.arity();
  if (p.is_constant() || q.is_constant()) return MultiPoly::constant(k, 1);

  // main variable: appearing variable of lowest combined degree
  std::size_t x = k;
  int best = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const int dp = p.degree_in(i);
    const int dq = q.degree_in(i);
    if (dp == 0 && dq == 0) continue;
    if (x == k || dp + dq < best) {
      x = i;
      best = dp + dq;
    }
  }
  if (p.degree_in(x) == 0) return gcd(p, content_in(q, x));
  if (q.degree_in(x) == 0) return gcd(content_in(p, x), q);

  const MultiPoly cp = content_in(p, x);
  const MultiPoly cq = content_in(q, x);
  const MultiPoly c = gcd(cp, cq);
  MultiPoly a = exact(p, cp).normalized();
  MultiPoly b = exact(q, cq).normalized();
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  MultiPoly g(k);
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, x);
    if (r.is_zero()) {
      g = b;
      break;
    }
    if (r.degree_in(x) == 0) {
      g = MultiPoly::constant(k, 1);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, x);
  }
  return (c * primitive_in(g, x)).normalized();
}

// ---------------------------------------------------------------------------
// Simple polynomials, boxes

std::optional<SimpleForm> detect_simple(const MultiPoly& p) {
  if (p.is_zero()) throw PreconditionError("detect_simple: zero polynomial");
  const std::size_t k = p.arity();
  if (p.is_constant()) return SimpleForm{IntVec(k, 0), UniPoly::constant(p.constant_term())};

  std::size_t i0 = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (p.depends_on(i)) {
      i0 = i;
      break;
    }
  }
  const MultiPoly d0 = p.derivative(i0);
  std::vector<Rat> ratio(k, Rat(0));
  ratio[i0] = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (j == i0 || !p.depends_on(j)) continue;
    const MultiPoly dj = p.derivative(j);
    if (dj.leading_monomial() != d0.leading_monomial()) return std::nullopt;
    const Rat rho = dj.leading_coefficient() / d0.leading_coefficient();
    if (dj != d0 * rho) return std::nullopt;
    ratio[j] = rho;
  }
  Int l = 1;
  for (const auto& r : ratio) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  IntVec v(k);
  for (std::size_t j = 0; j < k; ++j) v[j] = to_int64(Int(ratio[j] * Rat(l)));
  v = primitive_direction(v);

  // pbar(s) = p(s * e_i0 / v_i0): only pure powers of z_i0 survive
  const Rat inv(1, static_cast<long>(v[i0]));
  Rat scale_inv = inv;
  scale_inv.canonicalize();
  std::vector<Rat> coeffs;
  for (const auto& [m, c] : p.terms()) {
    bool pure = true;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i0 && m[j] != 0) pure = false;
    if (!pure) continue;
    const unsigned e = m[i0];
    if (coeffs.size() <= e) coeffs.resize(e + 1, Rat(0));
    coeffs[e] += c * pow_rat(scale_inv, e);
  }
  UniPoly pbar(coeffs);
  if (pbar.compose_linear(v) != p) return std::nullopt;
  return SimpleForm{std::move(v), std::move(pbar)};
}

std::optional<IntVec> find_nonzero_in_box(const MultiPoly& p, const LatticeBox& box) {
  if (box.arity() != p.arity()) throw DimensionError("find_nonzero_in_box: arity mismatch");
  if (p.is_zero()) return std::nullopt;
  if (box.size < p.total_degree()) {
    throw PreconditionError("box of size " + std::to_string(box.size) +
                            " is smaller than the total degree " +
                            std::to_string(p.total_degree()));
  }
  std::optional<IntVec> found;
  box.for_each([&](const IntVec& z) {
    if (p.evaluate(z) != 0) {
      found = z;
      return false;
    }
    return true;
  });
  if (!found) throw IntegrityError("nonzero polynomial vanishes on a box of size >= its degree");
  return found;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& UniPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const Rat& s) {
  std::vector<Rat> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::vector<Rat> r = coeffs_;
  const int dd = d.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rat> q(static_cast<std::size_t>(degree() - dd + 1), Rat(0));
  for (int i = degree(); i >= dd; --i) {
    const Rat c = r[static_cast<std::size_t>(i)] / d.leading();
    q[static_cast<std::size_t>(i - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

Rat UniPoly::evaluate(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::shift(const Rat& c) const {
  // Horner: p(t + c) = (...(a_n (t+c) + a_{n-1})(t+c) + ...)
  const UniPoly tc({c, Rat(1)});
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * tc + constant(*it);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Int g = 0;
  Int l = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat s(l, g);
  s.canonicalize();
  if (leading() < 0) s = -s;
  return *this * s;
}

MultiPoly UniPoly::compose_linear(std::span<const std::int64_t> v, std::int64_t c) const {
  const MultiPoly lin = MultiPoly::linear_form(v, Rat(static_cast<long>(c)));
  MultiPoly acc(v.size());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin + MultiPoly::constant(v.size(), *it);
  }
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << format_rat(mag);
      if (i > 0) os << '*';
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    auto r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// Roots

namespace {

std::vector<Int> positive_divisors(Int n) {
  n = abs(n);
  std::vector<Int> small;
  std::vector<Int> large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RootSplit rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("rational_roots: zero polynomial");
  RootSplit out;
  UniPoly rest = p;
  while (rest.degree() >= 1 && rest.coeff(0) == 0) {
    out.roots.emplace_back(0);
    rest = rest.divmod(UniPoly::linear_root(0)).first;
  }
  if (rest.degree() >= 1) {
    const UniPoly prim = rest.primitive();
    const auto nums = positive_divisors(prim.coeff(0).get_num());
    const auto dens = positive_divisors(prim.leading().get_num());
    std::vector<Rat> candidates;
    for (const auto& q : dens) {
      for (const auto& n : nums) {
        Rat r(n, q);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      while (rest.degree() >= 1 && rest.evaluate(r) == 0) {
        out.roots.push_back(r);
        rest = rest.divmod(UniPoly::linear_root(r)).first;
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.cofactor = rest;
  return out;
}

IntegerRootSplit integer_roots(const UniPoly& p) {
  const RootSplit all = rational_roots(p);
  IntegerRootSplit out;
  out.cofactor = all.cofactor;
  for (const auto& r : all.roots) {
    if (is_integer(r)) {
      out.roots.push_back(to_int64(r.get_num()));
    } else {
      out.cofactor = out.cofactor * UniPoly::linear_root(r);
    }
  }
  return out;
}

}  // namespace hgterm
