#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "jetalg/ideals.hpp"
#include "jetalg/jet_module.hpp"
#include "jetalg/poly_fit.hpp"

namespace jetalg {

using json = nlohmann::json;

/// Any element accepted by the element JSON format, tagged by its "algebra" field.
using AnyElement = std::variant<GElement, AElement, GAElement, LElement, BPlusElement>;

/// "G", "A", "GA", "L" or "Bplus".
std::string algebra_name(const AnyElement &x);

json rational_to_json(const Rational &q);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const json &j);

json element_to_json(const AnyElement &x);
AnyElement element_from_json(const json &j);

json matrix_to_json(const QMatrix &a);
QMatrix matrix_from_json(const json &j);

json sl2_to_json(const SL2Rep &rep);
SL2Rep sl2_from_json(const json &j);

/// "i,j" keys.
std::string index_key(MultiIndex i);
MultiIndex index_from_key(const std::string &key);

json bplus_rep_to_json(const BPlusRep &rep);
/// With validate = false the B_+ relations are not checked.
BPlusRep bplus_rep_from_json(const json &j, bool validate = true);

json spec_to_json(const JetModuleSpec &spec);
JetModuleSpec spec_from_json(const json &j, bool validate = true);

json vector_to_json(const ModuleVector &v);
ModuleVector vector_from_json(const json &j);

json reductive_to_json(const ReductiveElement &x);

json family_to_json(const PolyOperatorFamily &f);
PolyOperatorFamily family_from_json(const json &j);

json axiom_report_to_json(const std::vector<AxiomResult> &report);

} // namespace jetalg
