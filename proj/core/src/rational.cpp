#include "hgterm/rational.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "hgterm/errors.hpp"

namespace hgterm {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw ParseError("invalid rational literal '" + s + "'", 1, 1);
  }
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 1, 1);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) throw IntegrityError("integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scaled(std::span<const std::int64_t> a, std::int64_t s) {
  IntVec r(a.begin(), a.end());
  for (auto& x : r) x *= s;
  return r;
}

IntVec unit_vector(std::size_t k, std::size_t i, std::int64_t s) {
  IntVec e(k, 0);
  e.at(i) = s;
  return e;
}

IntVec primitive_direction(std::span<const std::int64_t> v) {
  IntVec r(v.begin(), v.end());
  std::int64_t g = 0;
  for (auto x : r) g = std::gcd(g, x);
  if (g == 0) return r;
  for (auto& x : r) x /= g;
  for (auto x : r) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : r) y = -y;
    break;
  }
  return r;
}

bool is_zero_vector(std::span<const std::int64_t> v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

Rat pow_rat(const Rat& r, std::int64_t e) {
  if (e < 0) {
    if (r == 0) throw IntegrityError("negative power of zero");
    return pow_rat(Rat(1) / r, -e);
  }
  Rat result = 1;
  Rat base = r;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string format_vec(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace hgterm
