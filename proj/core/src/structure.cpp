#include "hgterm/structure.hpp"

#include <algorithm>

#include "hgterm/errors.hpp"
#include "hgterm/log.hpp"
#include "hgterm/oracle.hpp"

namespace hgterm {

namespace {

std::int64_t l1(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return s;
}

constexpr std::int64_t kBaseSearchRadius = 64;

PiecewiseStructure zero_divisor_structure(const TermSpec& spec) {
  const MultiPoly& p = *spec.zero_divisor_witness;
  if (p.is_zero()) throw PreconditionError("zero divisor witness must be a nonzero polynomial");
  PiecewiseStructure ps;
  ps.k = spec.k;
  ps.zero_divisor = true;
  std::vector<FactoredRational::Factor> d;
  if (!p.is_constant()) d.push_back({p.normalized(), 1});
  ps.form = OreSatoForm::make(spec.k, {}, d, {}, {});
  LatticeBox box{IntVec(spec.k, 0), std::max(p.total_degree(), 0)};
  auto z0 = find_nonzero_in_box(p, box);
  if (!z0) throw IntegrityError("no nonzero point of the witness in its degree box");
  ps.pieces.push_back({PolyhedralRegion::whole(spec.k), *z0, Rat(0)});
  return ps;
}

MeasureZeroSet chain_hyperplanes(const OreSatoForm& form, std::int64_t d) {
  MeasureZeroSet out;
  for (const auto& ch : form.chains) {
    std::int64_t sum = 0;
    std::int64_t top = 0;
    for (auto x : ch.v) {
      sum += x < 0 ? -x : x;
      top = std::max(top, x < 0 ? -x : x);
    }
    // v.w over S = {u +- e_i : u in [-2d, 2d]^k}
    const std::int64_t lo = -2 * d * sum - top;
    const std::int64_t hi = -lo;
    std::vector<std::int64_t> roots = integer_roots(ch.a).roots;
    for (auto r : integer_roots(ch.b).roots) roots.push_back(r);
    for (auto rho : roots) {
      for (std::int64_t j = lo; j < hi; ++j) out.add(Hyperplane(ch.v, rho - j));
    }
  }
  return out;
}

}  // namespace

PiecewiseStructure build_structure(const TermSpec& spec) {
  spec.validate();
  if (spec.zero_divisor_witness) return zero_divisor_structure(spec);
  const std::size_t k = spec.k;

  PiecewiseStructure ps;
  ps.k = k;
  ps.form = decompose(spec);
  const MultiPoly CD = ps.form.C * ps.form.D;
  const std::int64_t d = std::max(CD.total_degree(), 0);

  MeasureZeroSet h2 = chain_hyperplanes(ps.form, d);
  h2.add(spec.exceptions);
  ps.arrangement_size = h2.size();
  log_info("arrangement of " + std::to_string(h2.size()) + " hyperplanes");
  ps.H.add(h2);

  std::vector<PolyhedralRegion> regions;
  for (const auto& cell : arrangement(h2.hyperplanes(), k)) {
    MeasureZeroVerdict mz = is_measure_zero(cell);
    if (mz.measure_zero) {
      ps.H.add(mz.cover);
      continue;
    }
    Erosion wide = erode(cell, d);
    Erosion unit = erode(wide.region, 1);
    ps.H.add(wide.cover);
    ps.H.add(unit.cover);
    regions.push_back(simplify(unit.region));
  }

  // candidate base points: reachable from the seed, C D nonzero, nearest first
  std::vector<std::pair<IntVec, Rat>> candidates;
  if (spec.seed) {
    std::vector<IntVec> anchors{spec.seed->point};
    for (const auto& r : regions) {
      auto p = find_lattice_point(r);
      if (p && l1(*p, spec.seed->point) <= kBaseSearchRadius) anchors.push_back(*p);
    }
    PropagationField field(spec, *spec.seed,
                           Window::around(anchors, 2 * static_cast<std::int64_t>(k + 1)));
    field.window().for_each([&](const IntVec& z) {
      auto v = field.value(z);
      if (v && CD.evaluate(z) != 0) candidates.emplace_back(z, *v);
      return true;
    });
    const IntVec& s = spec.seed->point;
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const auto& x, const auto& y) { return l1(x.first, s) < l1(y.first, s); });
  } else {
    log_warning("no seed value; every piece is value-unknown");
  }

  for (auto& r : regions) {
    Piece piece{r, {}, std::nullopt};
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](const auto& c) { return r.contains(c.first); });
    if (it != candidates.end()) {
      piece.z0 = it->first;
      piece.f0 = it->second;
    } else {
      auto box = box_in_region(r, d);
      if (!box) throw IntegrityError("no box of size " + std::to_string(d) + " in a piece");
      auto z0 = find_nonzero_in_box(CD, *box);
      if (!z0) throw IntegrityError("C D vanishes on a box of its degree");
      piece.z0 = *z0;
      if (spec.seed) log_warning("piece at " + format_vec(*z0) + " is not reachable from the seed");
    }
    ps.pieces.push_back(std::move(piece));
  }
  return ps;
}

ClosedFormValue closed_form_eval(const PiecewiseStructure& ps, std::span<const std::int64_t> z) {
  if (z.size() != ps.k) throw DimensionError("closed form: arity mismatch");
  ClosedFormValue out;
  if (ps.H.covers(z)) {
    out.reason = Undefined::measure_zero;
    return out;
  }
  for (std::size_t i = 0; i < ps.pieces.size(); ++i) {
    if (ps.pieces[i].region.contains(z)) {
      out.piece = i;
      break;
    }
  }
  if (!out.piece) {
    out.reason = Undefined::uncovered;
    return out;
  }
  const Piece& p = ps.pieces[*out.piece];
  const OreSatoForm& f = ps.form;
  const Rat dz = f.D.evaluate(z);
  if (dz == 0) {
    out.reason = Undefined::d_zero;
    return out;
  }
  if (!p.f0) {
    out.reason = Undefined::value_unknown;
    return out;
  }
  Rat v = *p.f0 * f.C.evaluate(z) / f.C.evaluate(p.z0) * f.D.evaluate(p.z0) / dz;
  for (std::size_t i = 0; i < ps.k; ++i) v *= pow_rat(f.gamma[i], z[i] - p.z0[i]);
  try {
    for (const auto& ch : f.chains) {
      v *= gp_eval(dot(ch.v, p.z0), dot(ch.v, z), [&](std::int64_t j) -> Rat {
        const Rat t(static_cast<long>(j));
        const Rat bj = ch.b.evaluate(t);
        if (bj == 0) throw ZeroTermError(j);
        return ch.a.evaluate(t) / bj;
      });
    }
  } catch (const ZeroTermError& e) {
    throw IntegrityError("closed form touched a zero chain term at j = " +
                         std::to_string(e.index()) + ", z = " + format_vec(z));
  }
  out.value = v;
  return out;
}

namespace {

// p(c - t)
UniPoly reflect(const UniPoly& p, std::int64_t c) {
  std::vector<Rat> coeffs = p.coeffs();
  for (std::size_t i = 1; i < coeffs.size(); i += 2) coeffs[i] = -coeffs[i];
  return UniPoly(coeffs).shift(Rat(static_cast<long>(-c)));
}

}  // namespace

std::vector<FactorialForm> split_factorial(const PiecewiseStructure& ps) {
  const OreSatoForm& f = ps.form;
  const std::size_t nv = f.chains.size();
  if (nv > 20) throw PreconditionError("too many chains for a sign split");
  std::vector<FactorialForm> out;
  for (std::size_t pi = 0; pi < ps.pieces.size(); ++pi) {
    const Piece& p = ps.pieces[pi];
    if (!p.f0) continue;
    Rat scalar = *p.f0 * f.D.evaluate(p.z0) / f.C.evaluate(p.z0);
    for (std::size_t i = 0; i < ps.k; ++i) scalar *= pow_rat(f.gamma[i], -p.z0[i]);
    for (std::size_t mask = 0; mask < (std::size_t{1} << nv); ++mask) {
      FactorialForm ff;
      ff.k = ps.k;
      ff.piece = pi;
      ff.region = p.region;
      ff.C = f.C;
      ff.D = f.D;
      ff.gamma = f.gamma;
      ff.scalar = scalar;
      for (std::size_t c = 0; c < nv; ++c) {
        const Chain& ch = f.chains[c];
        const std::int64_t s = dot(ch.v, p.z0);
        FactorialChain fc;
        fc.v = ch.v;
        if (!(mask >> c & 1)) {
          ff.region = ff.region.intersect(HalfSpace{ch.v, s - 1});
          fc.w = ch.v;
          fc.n = -s;
          fc.a = ch.a.shift(Rat(static_cast<long>(s - 1)));
          fc.b = ch.b.shift(Rat(static_cast<long>(s - 1)));
        } else {
          ff.region = ff.region.intersect(HalfSpace{scaled(ch.v, -1), -s});
          fc.w = scaled(ch.v, -1);
          fc.n = s;
          fc.a = reflect(ch.b, s);
          fc.b = reflect(ch.a, s);
        }
        ff.chains.push_back(std::move(fc));
      }
      if (!find_lattice_point(ff.region)) continue;
      ff.region = simplify(ff.region);
      out.push_back(std::move(ff));
    }
  }
  return out;
}

std::optional<Rat> factorial_eval(const FactorialForm& ff, std::span<const std::int64_t> z) {
  if (z.size() != ff.k) throw DimensionError("factorial form: arity mismatch");
  const Rat dz = ff.D.evaluate(z);
  if (dz == 0) return std::nullopt;
  Rat v = ff.scalar * ff.C.evaluate(z) / dz;
  for (std::size_t i = 0; i < ff.k; ++i) v *= pow_rat(ff.gamma[i], z[i]);
  for (const auto& ch : ff.chains) {
    const std::int64_t n = dot(ch.w, z) + ch.n;
    if (n < 0) throw IntegrityError("negative factorial length at " + format_vec(z));
    for (std::int64_t j = 1; j <= n; ++j) {
      const Rat t(static_cast<long>(j));
      const Rat bj = ch.b.evaluate(t);
      if (bj == 0) throw IntegrityError("zero denominator term in factorial form");
      v *= ch.a.evaluate(t) / bj;
    }
  }
  return v;
}

Rat pochhammer(const Rat& m, std::int64_t r) {
  if (r < 0) throw IntegrityError("negative Pochhammer length");
  Rat acc = 1;
  for (std::int64_t i = 0; i < r; ++i) acc *= m + Rat(static_cast<long>(i));
  return acc;
}

PochhammerForm to_pochhammer(const FactorialForm& ff) {
  PochhammerForm pf;
  pf.k = ff.k;
  pf.piece = ff.piece;
  pf.region = ff.region;
  pf.gamma = ff.gamma;
  pf.scalar = ff.scalar;
  pf.C = ff.C;
  pf.D = ff.D;
  for (const auto& ch : ff.chains) {
    for (int side = 0; side < 2; ++side) {
      const UniPoly& p = side == 0 ? ch.a : ch.b;
      RootSplit rs = rational_roots(p);
      if (rs.cofactor.degree() > 0) {
        throw SplittingError("chain polynomial does not split over the rationals",
                             rs.cofactor.to_string());
      }
      const Rat alpha = rs.cofactor.coeff(0);
      auto& list = side == 0 ? pf.numerator : pf.denominator;
      for (const auto& root : rs.roots) list.push_back({1 - root, ch.w, ch.n});
      const std::int64_t sign = side == 0 ? 1 : -1;
      for (std::size_t i = 0; i < ff.k; ++i) pf.gamma[i] *= pow_rat(alpha, sign * ch.w[i]);
      pf.scalar *= pow_rat(alpha, sign * ch.n);
    }
  }
  return pf;
}

std::optional<Rat> pochhammer_eval(const PochhammerForm& pf, std::span<const std::int64_t> z) {
  if (z.size() != pf.k) throw DimensionError("Pochhammer form: arity mismatch");
  const Rat dz = pf.D.evaluate(z);
  if (dz == 0) return std::nullopt;
  Rat v = pf.scalar * pf.C.evaluate(z) / dz;
  for (std::size_t i = 0; i < pf.k; ++i) v *= pow_rat(pf.gamma[i], z[i]);
  for (const auto& s : pf.numerator) v *= pochhammer(s.m, dot(s.v, z) + s.r);
  for (const auto& s : pf.denominator) {
    Rat q = pochhammer(s.m, dot(s.v, z) + s.r);
    if (q == 0) throw IntegrityError("zero Pochhammer symbol in a denominator");
    v /= q;
  }
  return v;
}

}  // namespace hgterm
