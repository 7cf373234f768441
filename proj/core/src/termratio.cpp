#include "hgterm/termratio.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hgterm/errors.hpp"

namespace hgterm {

namespace {

struct PolyLess {
  bool operator()(const MultiPoly& a, const MultiPoly& b) const { return a < b; }
};

}  // namespace

FactoredRational::FactoredRational(std::size_t arity) : arity_(arity) {}

FactoredRational::FactoredRational(std::size_t arity, Rat scalar, std::vector<Factor> factors)
    : arity_(arity), scalar_(std::move(scalar)), factors_(std::move(factors)) {
  if (scalar_ == 0) throw PreconditionError("factored rational with zero scalar");
  for (const auto& f : factors_) {
    if (f.base.arity() != arity_) throw DimensionError("factor arity mismatch");
    if (f.base.is_zero()) throw PreconditionError("factored rational with zero base");
  }
  refine();
}

FactoredRational FactoredRational::constant(std::size_t arity, const Rat& c) {
  return FactoredRational(arity, c, {});
}

FactoredRational FactoredRational::from_poly(const MultiPoly& p) {
  return FactoredRational(p.arity(), 1, {{p, 1}});
}

FactoredRational FactoredRational::quotient(const MultiPoly& num, const MultiPoly& den) {
  if (num.arity() != den.arity()) throw DimensionError("quotient arity mismatch");
  return FactoredRational(num.arity(), 1, {{num, 1}, {den, -1}});
}

void FactoredRational::refine() {
  // normalize, fold constants
  std::map<MultiPoly, std::int64_t, PolyLess> acc;
  auto put = [&](const MultiPoly& base, std::int64_t e) {
    if (e == 0) return;
    if (base.is_constant()) {
      scalar_ *= pow_rat(base.constant_term(), e);
      return;
    }
    MultiPoly n = base.normalized();
    Rat unit = base.leading_coefficient() / n.leading_coefficient();
    scalar_ *= pow_rat(unit, e);
    acc[n] += e;
  };
  for (const auto& f : factors_) put(f.base, f.exponent);

  // split until pairwise coprime
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<MultiPoly, std::int64_t>> list;
    for (auto& [b, e] : acc) {
      if (e != 0) list.emplace_back(b, e);
    }
    for (std::size_t i = 0; i < list.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < list.size() && !changed; ++j) {
        MultiPoly g = gcd(list[i].first, list[j].first);
        if (g.is_constant()) continue;
        auto qi = divide_exact(list[i].first, g);
        auto qj = divide_exact(list[j].first, g);
        if (!qi || !qj) throw IntegrityError("gcd does not divide its arguments");
        std::int64_t ei = list[i].second;
        std::int64_t ej = list[j].second;
        acc.erase(list[i].first);
        acc.erase(list[j].first);
        put(g, ei + ej);
        put(*qi, ei);
        put(*qj, ej);
        changed = true;
      }
    }
  }
  factors_.clear();
  for (auto& [b, e] : acc) {
    if (e != 0) factors_.push_back({b, e});
  }
}

MultiPoly FactoredRational::numerator() const {
  MultiPoly p = MultiPoly::constant(arity_, scalar_);
  for (const auto& f : factors_) {
    if (f.exponent > 0) p = p * f.base.pow(static_cast<unsigned>(f.exponent));
  }
  return p;
}

MultiPoly FactoredRational::denominator() const {
  MultiPoly p = MultiPoly::constant(arity_, 1);
  for (const auto& f : factors_) {
    if (f.exponent < 0) p = p * f.base.pow(static_cast<unsigned>(-f.exponent));
  }
  return p;
}

FactoredRational FactoredRational::inverse() const {
  FactoredRational out(arity_);
  out.scalar_ = 1 / scalar_;
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.exponent = -f.exponent;
  return out;
}

FactoredRational FactoredRational::pow(std::int64_t e) const {
  if (e == 0) return FactoredRational(arity_);
  FactoredRational out(arity_);
  out.scalar_ = pow_rat(scalar_, e);
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.exponent *= e;
  return out;
}

FactoredRational FactoredRational::shift(std::span<const std::int64_t> w) const {
  if (w.size() != arity_) throw DimensionError("shift arity mismatch");
  std::vector<Factor> fs;
  for (const auto& f : factors_) fs.push_back({f.base.shift(w), f.exponent});
  // shifts of coprime normalized bases stay coprime and normalized
  FactoredRational out(arity_);
  out.scalar_ = scalar_;
  out.factors_ = std::move(fs);
  std::sort(out.factors_.begin(), out.factors_.end(),
            [](const Factor& a, const Factor& b) { return a.base < b.base; });
  return out;
}

std::optional<Rat> FactoredRational::evaluate(std::span<const std::int64_t> z) const {
  if (z.size() != arity_) throw DimensionError("evaluate arity mismatch");
  Rat value = scalar_;
  bool zero = false;
  for (const auto& f : factors_) {
    Rat b = f.base.evaluate(z);
    if (b == 0) {
      if (f.exponent < 0) return std::nullopt;
      zero = true;
      continue;
    }
    value *= pow_rat(b, f.exponent);
  }
  if (zero) return Rat(0);
  return value;
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
  if (a.arity_ != b.arity_) throw DimensionError("product arity mismatch");
  std::vector<FactoredRational::Factor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return FactoredRational(a.arity_, a.scalar_ * b.scalar_, std::move(fs));
}

bool FactoredRational::operator==(const FactoredRational& o) const {
  if (arity_ != o.arity_) return false;
  if (scalar_ == o.scalar_ && factors_ == o.factors_) return true;
  return (*this / o).is_one();
}

std::string FactoredRational::to_string() const {
  std::ostringstream out;
  out << format_rat(scalar_);
  for (const auto& f : factors_) {
    out << " * (" << f.base.to_string() << ")";
    if (f.exponent != 1) out << "^" << f.exponent;
  }
  return out.str();
}

// ---- TermSpec ----

TermSpec TermSpec::from_generators(std::vector<FactoredRational> generators) {
  TermSpec s;
  s.k = generators.size();
  for (std::size_t i = 0; i < s.k; ++i) s.guards.push_back(MultiPoly::constant(s.k, 1));
  s.generators = std::move(generators);
  s.validate();
  return s;
}

const MultiPoly& TermSpec::guard(std::size_t i) const {
  if (i >= guards.size()) throw DimensionError("guard index out of range");
  return guards[i];
}

MultiPoly TermSpec::A(std::size_t i) const { return generators.at(i).numerator() * guard(i); }

MultiPoly TermSpec::B(std::size_t i) const { return generators.at(i).denominator() * guard(i); }

void TermSpec::validate() const {
  if (generators.size() != k) throw DimensionError("expected one generator per coordinate");
  if (guards.size() != k) throw DimensionError("expected one guard per coordinate");
  for (const auto& g : generators) {
    if (g.arity() != k) throw DimensionError("generator arity mismatch");
  }
  for (const auto& g : guards) {
    if (g.arity() != k || g.is_zero()) throw DimensionError("guard arity mismatch or zero guard");
  }
  for (const auto& h : exceptions.hyperplanes()) {
    if (h.arity() != k) throw DimensionError("exception arity mismatch");
  }
  if (seed && seed->point.size() != k) throw DimensionError("seed arity mismatch");
  if (zero_divisor_witness && zero_divisor_witness->arity() != k) {
    throw DimensionError("zero divisor witness arity mismatch");
  }
}

bool check_compatibility(const TermSpec& spec) {
  spec.validate();
  for (std::size_t i = 0; i < spec.k; ++i) {
    for (std::size_t j = i + 1; j < spec.k; ++j) {
      IntVec ei = unit_vector(spec.k, i);
      IntVec ej = unit_vector(spec.k, j);
      auto lhs = spec.generators[i] * spec.generators[j].shift(ei);
      auto rhs = spec.generators[j] * spec.generators[i].shift(ej);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

namespace {

FactoredRational compose_steps(const TermSpec& spec, const std::vector<int>& steps) {
  const std::size_t k = spec.k;
  FactoredRational r(k);
  IntVec u(k, 0);
  for (int s : steps) {
    if (s == 0 || static_cast<std::size_t>(std::abs(s)) > k) {
      throw DimensionError("step index out of range");
    }
    std::size_t i = static_cast<std::size_t>(std::abs(s)) - 1;
    if (s > 0) {
      r = r * spec.generators[i].shift(u);
      u[i] += 1;
    } else {
      u[i] -= 1;
      r = r * spec.generators[i].shift(u).inverse();
    }
  }
  return r;
}

}  // namespace

FactoredRational compose_along(const TermSpec& spec, const std::vector<int>& steps) {
  if (!check_compatibility(spec)) throw CocycleError("generators are not compatible");
  return compose_steps(spec, steps);
}

FactoredRational compose_direction(const TermSpec& spec, std::span<const std::int64_t> w) {
  if (w.size() != spec.k) throw DimensionError("direction arity mismatch");
  if (!check_compatibility(spec)) throw CocycleError("generators are not compatible");
  std::vector<int> steps;
  for (std::size_t i = 0; i < spec.k; ++i) {
    int s = static_cast<int>(i) + 1;
    for (std::int64_t n = 0; n < (w[i] < 0 ? -w[i] : w[i]); ++n) steps.push_back(w[i] < 0 ? -s : s);
  }
  return compose_steps(spec, steps);
}

TermSpec extend_by_zero(const TermSpec& spec, const PolyhedralRegion& support) {
  spec.validate();
  if (support.arity() != spec.k) throw DimensionError("support arity mismatch");
  TermSpec out = spec;
  auto certs = characteristic_certificates(support);
  for (std::size_t i = 0; i < spec.k; ++i) {
    out.guards[i] = (out.guards[i] * certs[i].product()).normalized();
    out.exceptions.add(certs[i].zero_set());
  }
  if (out.seed && !support.contains(out.seed->point)) out.seed->value = 0;
  return out;
}

}  // namespace hgterm
