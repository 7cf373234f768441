#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hgterm/oracle.hpp"
#include "hgterm/structure.hpp"

namespace hgterm {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const IntVec& v);
Json to_json(const Hyperplane& h);
Json to_json(const MeasureZeroSet& s);
Json to_json(const PolyhedralRegion& r);
Json to_json(const FactoredRational& r);
Json to_json(const TermSpec& spec);
Json to_json(const OreSatoForm& form);
Json to_json(const PiecewiseStructure& ps);
Json to_json(const FactorialForm& ff);
Json to_json(const PochhammerForm& pf);
Json to_json(const CompareReport& report);
Json to_json(const PropagationResult& result);

/// Readers; arity comes from the enclosing document where the JSON omits it.
Rat rat_from_json(const Json& j);
IntVec vec_from_json(const Json& j);
Hyperplane hyperplane_from_json(const Json& j);
MeasureZeroSet hyperplanes_from_json(const Json& j);
PolyhedralRegion region_from_json(const Json& j);
FactoredRational factored_from_json(const Json& j, std::size_t k);
TermSpec spec_from_json(const Json& j);
OreSatoForm form_from_json(const Json& j);
PiecewiseStructure structure_from_json(const Json& j);
FactorialForm factorial_from_json(const Json& j);
PochhammerForm pochhammer_from_json(const Json& j);
CompareReport report_from_json(const Json& j);

/// Parses a TermSpec document. JSON syntax errors carry line and column.
TermSpec parse_spec(std::string_view text);
std::string emit_spec(const TermSpec& spec);

/// Product string "c*(p1)^e1*(p2)" for the positive or negative part of r.
std::string product_string(const Rat& scalar, const std::vector<FactoredRational::Factor>& factors);

}  // namespace hgterm
