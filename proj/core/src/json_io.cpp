#include "hgterm/json_io.hpp"

#include "hgterm/errors.hpp"
#include "hgterm/log.hpp"
#include "hgterm/parse.hpp"

namespace hgterm {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw PreconditionError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::size_t arity_field(const Json& j) {
  const Json& k = field(j, "k");
  if (!k.is_number_integer() || k.get<std::int64_t>() < 1) {
    throw PreconditionError("\"k\" must be a positive integer");
  }
  return k.get<std::size_t>();
}

std::string poly_text(const Json& j, const char* what) {
  if (!j.is_string()) throw PreconditionError(std::string(what) + " must be a polynomial string");
  return j.get<std::string>();
}

Json chains_json(const std::vector<Chain>& chains) {
  Json out = Json::array();
  for (const auto& c : chains) {
    out.push_back({{"v", to_json(c.v)}, {"a", c.a.to_string()}, {"b", c.b.to_string()}});
  }
  return out;
}

std::vector<Rat> rats_from_json(const Json& j) {
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

Json rats_json(const std::vector<Rat>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

std::vector<FactoredRational::Factor> factors_from_text(const std::string& text, std::size_t k,
                                                        Rat& scalar) {
  std::vector<FactoredRational::Factor> out;
  for (auto& [p, e] : parse_product(text, k)) {
    if (p.is_zero()) {
      scalar = 0;
      return {};
    }
    if (p.is_constant()) {
      scalar *= pow_rat(p.constant_term(), e);
      continue;
    }
    out.push_back({p, static_cast<std::int64_t>(e)});
  }
  return out;
}

MultiPoly product_of(const Rat& scalar, const std::vector<FactoredRational::Factor>& fs,
                     std::size_t k) {
  MultiPoly p = MultiPoly::constant(k, scalar);
  for (const auto& f : fs) p = p * f.base.pow(static_cast<unsigned>(f.exponent));
  return p;
}

Json symbols_json(const std::vector<PochhammerSymbol>& ss) {
  Json out = Json::array();
  for (const auto& s : ss) out.push_back({{"m", to_json(s.m)}, {"v", to_json(s.v)}, {"r", s.r}});
  return out;
}

std::vector<PochhammerSymbol> symbols_from_json(const Json& j) {
  std::vector<PochhammerSymbol> out;
  for (const auto& s : j) {
    out.push_back({rat_from_json(field(s, "m")), vec_from_json(field(s, "v")),
                   field(s, "r").get<std::int64_t>()});
  }
  return out;
}

}  // namespace

std::string product_string(const Rat& scalar,
                           const std::vector<FactoredRational::Factor>& factors) {
  std::string out;
  if (scalar != 1 || factors.empty()) out = format_rat(scalar);
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += "(" + f.base.to_string() + ")";
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

// ---- writers ----

Json to_json(const Rat& r) { return format_rat(r); }

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json to_json(const Hyperplane& h) { return {{"v", to_json(h.normal())}, {"n", h.offset()}}; }

Json to_json(const MeasureZeroSet& s) {
  Json out = Json::array();
  for (const auto& h : s.hyperplanes()) out.push_back(to_json(h));
  return out;
}

Json to_json(const PolyhedralRegion& r) {
  Json cs = Json::array();
  for (const auto& h : r.constraints()) cs.push_back({{"v", to_json(h.v)}, {"gt", h.gt}});
  return {{"k", r.arity()}, {"constraints", cs}};
}

Json to_json(const FactoredRational& r) {
  std::vector<FactoredRational::Factor> num, den;
  for (const auto& f : r.factors()) {
    if (f.exponent > 0) {
      num.push_back(f);
    } else {
      den.push_back({f.base, -f.exponent});
    }
  }
  return {{"num", product_string(r.scalar(), num)}, {"den", product_string(1, den)}};
}

Json to_json(const TermSpec& spec) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < spec.k; ++i) {
    const FactoredRational& r = spec.generators[i];
    std::vector<FactoredRational::Factor> num, den;
    const MultiPoly& g = spec.guards[i];
    if (!g.is_constant()) {
      num.push_back({g, 1});
      den.push_back({g, 1});
    }
    Rat scalar = r.scalar() * (g.is_constant() ? g.constant_term() : Rat(1));
    for (const auto& f : r.factors()) {
      if (f.exponent > 0) {
        num.push_back(f);
      } else {
        den.push_back({f.base, -f.exponent});
      }
    }
    Rat den_scalar = g.is_constant() ? g.constant_term() : Rat(1);
    gens.push_back({{"num", product_string(scalar, num)}, {"den", product_string(den_scalar, den)}});
  }
  Json out = {{"k", spec.k}, {"generators", gens}, {"exceptions", to_json(spec.exceptions)}};
  if (spec.seed) {
    out["seed"] = {{"point", to_json(spec.seed->point)}, {"value", to_json(spec.seed->value)}};
  }
  if (spec.zero_divisor_witness) out["zero_divisor_witness"] = spec.zero_divisor_witness->to_string();
  if (!spec.honest) out["honest"] = false;
  return out;
}

Json to_json(const OreSatoForm& form) {
  auto cf = form.c_factors;
  auto df = form.d_factors;
  Json c = cf.empty() ? Json(form.C.to_string()) : Json(product_string(1, cf));
  Json d = df.empty() ? Json(form.D.to_string()) : Json(product_string(1, df));
  return {{"k", form.k},
          {"C", c},
          {"D", d},
          {"gamma", rats_json(form.gamma)},
          {"chains", chains_json(form.chains)}};
}

Json to_json(const PiecewiseStructure& ps) {
  Json pieces = Json::array();
  for (const auto& p : ps.pieces) {
    pieces.push_back({{"region", to_json(p.region)},
                      {"z0", to_json(p.z0)},
                      {"f0", p.f0 ? to_json(*p.f0) : Json(nullptr)}});
  }
  Json out = {{"k", ps.k}, {"form", to_json(ps.form)}, {"H", to_json(ps.H)}, {"pieces", pieces}};
  out["zero_divisor"] = ps.zero_divisor;
  out["arrangement_size"] = ps.arrangement_size;
  return out;
}

Json to_json(const FactorialForm& ff) {
  Json chains = Json::array();
  for (const auto& c : ff.chains) {
    chains.push_back({{"v", to_json(c.v)},
                      {"w", to_json(c.w)},
                      {"a", c.a.to_string()},
                      {"b", c.b.to_string()},
                      {"n", c.n}});
  }
  return {{"k", ff.k},
          {"piece", ff.piece},
          {"region", to_json(ff.region)},
          {"C", ff.C.to_string()},
          {"D", ff.D.to_string()},
          {"gamma", rats_json(ff.gamma)},
          {"scalar", to_json(ff.scalar)},
          {"chains", chains}};
}

Json to_json(const PochhammerForm& pf) {
  return {{"k", pf.k},
          {"piece", pf.piece},
          {"region", to_json(pf.region)},
          {"gamma", rats_json(pf.gamma)},
          {"scalar", to_json(pf.scalar)},
          {"C", pf.C.to_string()},
          {"D", pf.D.to_string()},
          {"numerator", symbols_json(pf.numerator)},
          {"denominator", symbols_json(pf.denominator)}};
}

Json to_json(const CompareReport& report) {
  Json mm = Json::array();
  for (const auto& m : report.mismatches) {
    mm.push_back({{"z", to_json(m.z)}, {"closed", to_json(m.closed)}, {"oracle", to_json(m.oracle)}});
  }
  return {{"checked", report.checked}, {"equal", report.equal},   {"on_H", report.on_H},
          {"d_zero", report.d_zero},   {"blocked", report.blocked}, {"mismatches", mm}};
}

Json to_json(const PropagationResult& result) {
  Json cert = Json::array();
  for (const auto& s : result.certificate) {
    cert.push_back({{"from", to_json(s.from)}, {"step", s.step}, {"factor", to_json(s.factor)}});
  }
  const char* failure = result.failure == PropagationFailure::blocked         ? "blocked"
                        : result.failure == PropagationFailure::out_of_window ? "out_of_window"
                                                                              : nullptr;
  return {{"value", result.value ? to_json(*result.value) : Json(nullptr)},
          {"failure", failure ? Json(failure) : Json(nullptr)},
          {"certificate", cert}};
}

// ---- readers ----

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw PreconditionError("expected a rational as \"p/q\" string or integer");
}

IntVec vec_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("expected an integer array");
  IntVec out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw PreconditionError("expected an integer array");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

Hyperplane hyperplane_from_json(const Json& j) {
  IntVec v = vec_from_json(field(j, "v"));
  if (is_zero_vector(v)) throw PreconditionError("hyperplane normal must be nonzero");
  return Hyperplane(std::move(v), field(j, "n").get<std::int64_t>());
}

MeasureZeroSet hyperplanes_from_json(const Json& j) {
  MeasureZeroSet out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw PreconditionError("expected a hyperplane list");
  for (const auto& h : j) out.add(hyperplane_from_json(h));
  return out;
}

PolyhedralRegion region_from_json(const Json& j) {
  const std::size_t k = arity_field(j);
  std::vector<HalfSpace> cs;
  for (const auto& c : field(j, "constraints")) {
    cs.push_back({vec_from_json(field(c, "v")), field(c, "gt").get<std::int64_t>()});
  }
  return PolyhedralRegion(k, std::move(cs));
}

FactoredRational factored_from_json(const Json& j, std::size_t k) {
  Rat ns = 1, ds = 1;
  auto num = factors_from_text(poly_text(field(j, "num"), "num"), k, ns);
  auto den = factors_from_text(poly_text(field(j, "den"), "den"), k, ds);
  if (ns == 0) throw PreconditionError("zero numerator");
  if (ds == 0) throw PreconditionError("zero denominator");
  for (auto& f : den) f.exponent = -f.exponent;
  num.insert(num.end(), den.begin(), den.end());
  return FactoredRational(k, ns / ds, std::move(num));
}

TermSpec spec_from_json(const Json& j) {
  TermSpec spec;
  spec.k = arity_field(j);
  const Json& gens = field(j, "generators");
  if (!gens.is_array() || gens.size() != spec.k) {
    throw DimensionError("expected " + std::to_string(spec.k) + " generators");
  }
  for (std::size_t i = 0; i < spec.k; ++i) {
    const std::string where = "generator " + std::to_string(i + 1);
    Rat ns = 1, ds = 1;
    std::vector<FactoredRational::Factor> num, den;
    try {
      num = factors_from_text(poly_text(field(gens[i], "num"), "num"), spec.k, ns);
      const std::string den_text = gens[i].contains("den") ? poly_text(gens[i].at("den"), "den") : "1";
      den = factors_from_text(den_text, spec.k, ds);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what(), e.line(), e.column());
    }
    if (ns == 0) throw PreconditionError(where + ": zero numerator");
    if (ds == 0) throw PreconditionError(where + ": zero denominator");
    MultiPoly g = gcd(product_of(1, num, spec.k), product_of(1, den, spec.k));
    if (!g.is_constant()) {
      log_warning(where + " is not reduced; common factor " + g.to_string() + " kept as a guard");
    }
    for (auto& f : den) f.exponent = -f.exponent;
    num.insert(num.end(), den.begin(), den.end());
    spec.generators.emplace_back(spec.k, ns / ds, std::move(num));
    spec.guards.push_back(g.is_constant() ? MultiPoly::constant(spec.k, 1) : g);
  }
  if (j.contains("exceptions")) spec.exceptions = hyperplanes_from_json(j.at("exceptions"));
  if (j.contains("seed") && !j.at("seed").is_null()) {
    const Json& s = j.at("seed");
    spec.seed = Seed{vec_from_json(field(s, "point")), rat_from_json(field(s, "value"))};
  }
  if (j.contains("zero_divisor_witness") && !j.at("zero_divisor_witness").is_null()) {
    MultiPoly p = parse_poly(poly_text(j.at("zero_divisor_witness"), "zero_divisor_witness"), spec.k);
    if (p.is_zero()) throw PreconditionError("zero divisor witness must be nonzero");
    spec.zero_divisor_witness = p;
  }
  if (j.contains("honest")) spec.honest = j.at("honest").get<bool>();
  spec.validate();
  return spec;
}

OreSatoForm form_from_json(const Json& j) {
  const std::size_t k = arity_field(j);
  Rat cs = 1, ds = 1;
  auto cf = factors_from_text(poly_text(field(j, "C"), "C"), k, cs);
  auto df = factors_from_text(poly_text(field(j, "D"), "D"), k, ds);
  if (cs == 0 || ds == 0) throw PreconditionError("C and D must be nonzero");
  for (auto* fs : {&cf, &df}) {
    for (auto& f : *fs) f.base = f.base.normalized();
  }
  std::vector<Chain> chains;
  for (const auto& c : field(j, "chains")) {
    chains.push_back({vec_from_json(field(c, "v")), parse_unipoly(poly_text(field(c, "a"), "a")),
                      parse_unipoly(poly_text(field(c, "b"), "b"))});
  }
  std::vector<Rat> gamma;
  if (j.contains("gamma")) gamma = rats_from_json(j.at("gamma"));
  return OreSatoForm::make(k, cf, df, gamma, chains);
}

PiecewiseStructure structure_from_json(const Json& j) {
  PiecewiseStructure ps;
  ps.k = arity_field(j);
  ps.form = form_from_json(field(j, "form"));
  ps.H = hyperplanes_from_json(field(j, "H"));
  for (const auto& p : field(j, "pieces")) {
    Piece piece{region_from_json(field(p, "region")), vec_from_json(field(p, "z0")), std::nullopt};
    if (p.contains("f0") && !p.at("f0").is_null()) piece.f0 = rat_from_json(p.at("f0"));
    ps.pieces.push_back(std::move(piece));
  }
  if (j.contains("zero_divisor")) ps.zero_divisor = j.at("zero_divisor").get<bool>();
  if (j.contains("arrangement_size")) ps.arrangement_size = j.at("arrangement_size").get<std::size_t>();
  return ps;
}

FactorialForm factorial_from_json(const Json& j) {
  FactorialForm ff;
  ff.k = arity_field(j);
  ff.piece = field(j, "piece").get<std::size_t>();
  ff.region = region_from_json(field(j, "region"));
  ff.C = parse_poly(poly_text(field(j, "C"), "C"), ff.k);
  ff.D = parse_poly(poly_text(field(j, "D"), "D"), ff.k);
  ff.gamma = rats_from_json(field(j, "gamma"));
  ff.scalar = rat_from_json(field(j, "scalar"));
  for (const auto& c : field(j, "chains")) {
    ff.chains.push_back({vec_from_json(field(c, "v")), vec_from_json(field(c, "w")),
                         parse_unipoly(poly_text(field(c, "a"), "a")),
                         parse_unipoly(poly_text(field(c, "b"), "b")),
                         field(c, "n").get<std::int64_t>()});
  }
  return ff;
}

PochhammerForm pochhammer_from_json(const Json& j) {
  PochhammerForm pf;
  pf.k = arity_field(j);
  pf.piece = field(j, "piece").get<std::size_t>();
  pf.region = region_from_json(field(j, "region"));
  pf.gamma = rats_from_json(field(j, "gamma"));
  pf.scalar = rat_from_json(field(j, "scalar"));
  pf.C = parse_poly(poly_text(field(j, "C"), "C"), pf.k);
  pf.D = parse_poly(poly_text(field(j, "D"), "D"), pf.k);
  pf.numerator = symbols_from_json(field(j, "numerator"));
  pf.denominator = symbols_from_json(field(j, "denominator"));
  return pf;
}

CompareReport report_from_json(const Json& j) {
  CompareReport r;
  r.checked = field(j, "checked").get<std::size_t>();
  r.equal = field(j, "equal").get<std::size_t>();
  r.on_H = field(j, "on_H").get<std::size_t>();
  r.d_zero = field(j, "d_zero").get<std::size_t>();
  r.blocked = field(j, "blocked").get<std::size_t>();
  for (const auto& m : field(j, "mismatches")) {
    r.mismatches.push_back({vec_from_json(field(m, "z")), rat_from_json(field(m, "closed")),
                            rat_from_json(field(m, "oracle"))});
  }
  return r;
}

TermSpec parse_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON", line, col);
  }
  return spec_from_json(j);
}

std::string emit_spec(const TermSpec& spec) { return to_json(spec).dump(2); }

}  // namespace hgterm
