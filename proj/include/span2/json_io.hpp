#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "span2/coherence.hpp"
#include "span2/cospan.hpp"
#include "span2/diagram.hpp"
#include "span2/spans.hpp"

namespace span2::io {

using json = nlohmann::json;

// Encodings are bit-exact: element lists sorted, tables sorted by key,
// object keys in lexicographic order. JSON is the compatibility contract;
// the text renderings are human-oriented and unstable.

json to_json(const Elem& e);
Elem elem_from_json(const json& j);

json to_json(const FinObj& obj);
FinObj obj_from_json(const json& j);

// Morphism dom/cod may be written inline or as a label naming an object
// from the enclosing document (span feet/apex, diagram nodes).
using ObjContext = std::map<std::string, FinObj>;
json to_json(const FinMor& mor);
FinMor mor_from_json(const json& j, const ObjContext& context = {});

json to_json(const FinSpan& s);
FinSpan span_from_json(const json& j);

json to_json(const Cospan& c);
Cospan cospan_from_json(const json& j);

json to_json(const FinTwoCell& cell);
// Recomputes the signature from the witness and checks it against the
// stored one when present.
FinTwoCell two_cell_from_json(const json& j);

Diagram diagram_from_json(const json& j);
json to_json(const LimitResult& lim);

json to_json(const AxiomReport& report);
json reports_to_json(const std::vector<AxiomReport>& reports);

// A composable CLI value: span, cospan (detected by leg orientation, with
// an optional "kind" discriminator for the degenerate identity-like cases),
// or 2-cell.
using Value = std::variant<FinSpan, Cospan, FinTwoCell>;

Value value_from_json(const json& j);
json to_json(const Value& v);

// Spans compose by pullback, cospans by pushout, 2-cells vertically; the
// first argument is the earlier factor in the chain.
Value compose_values(const Value& a, const Value& b);

std::string value_to_text(const Value& v);
std::string limit_to_text(const LimitResult& lim);
std::string reports_to_text(const std::vector<AxiomReport>& reports);

}  // namespace span2::io
