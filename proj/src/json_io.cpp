#include "span2/json_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "span2/errors.hpp"

namespace span2::io {

namespace {

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidValue(std::string(what) + " is missing required key '" +
                       key + "'");
  }
  return j.at(key);
}

std::string mor_table_text(const FinMor& mor) {
  std::ostringstream out;
  if (mor.table().empty()) return "(empty)";
  bool sep = false;
  for (const auto& [x, y] : mor.table()) {
    if (sep) out << ", ";
    sep = true;
    out << x.str() << "->" << y.str();
  }
  return out.str();
}

}  // namespace

json to_json(const Elem& e) {
  switch (e.kind()) {
    case Elem::Kind::Atom:
      return e.atom_name();
    case Elem::Kind::Pair:
      return json{{"pair", json::array({to_json(e.first()), to_json(e.second())})}};
    case Elem::Kind::Tuple: {
      json slots = json::array();
      for (const auto& [label, value] : e.slots()) {
        slots.push_back(json::array({label, to_json(value)}));
      }
      return json{{"tuple", std::move(slots)}};
    }
    case Elem::Kind::Class:
      return json{{"class", to_json(e.representative())}};
  }
  throw InvalidValue("unknown element kind");
}

Elem elem_from_json(const json& j) {
  if (j.is_string()) return Elem::atom(j.get<std::string>());
  if (!j.is_object() || j.size() != 1) {
    throw InvalidValue("element must be a string or a one-key object");
  }
  if (j.contains("pair")) {
    const json& p = j.at("pair");
    if (!p.is_array() || p.size() != 2) {
      throw InvalidValue("pair element needs exactly two entries");
    }
    return Elem::pair(elem_from_json(p[0]), elem_from_json(p[1]));
  }
  if (j.contains("tuple")) {
    const json& t = j.at("tuple");
    if (!t.is_array()) throw InvalidValue("tuple element needs an array");
    std::vector<Elem::Slot> slots;
    slots.reserve(t.size());
    for (const json& slot : t) {
      if (!slot.is_array() || slot.size() != 2 || !slot[0].is_string()) {
        throw InvalidValue("tuple slot must be [label, element]");
      }
      slots.emplace_back(slot[0].get<std::string>(), elem_from_json(slot[1]));
    }
    return Elem::tuple(std::move(slots));
  }
  if (j.contains("class")) {
    return Elem::class_rep(elem_from_json(j.at("class")));
  }
  throw InvalidValue("element object must have key pair, tuple or class");
}

json to_json(const FinObj& obj) {
  json elems = json::array();
  for (const auto& e : obj.elements()) elems.push_back(to_json(e));
  json out{{"elements", std::move(elems)}};
  if (obj.label()) out["label"] = *obj.label();
  return out;
}

FinObj obj_from_json(const json& j) {
  const json& elems = require(j, "elements", "object");
  if (!elems.is_array()) throw InvalidValue("object elements must be an array");
  std::vector<Elem> out;
  out.reserve(elems.size());
  for (const json& e : elems) out.push_back(elem_from_json(e));
  std::optional<std::string> label;
  if (j.contains("label")) label = j.at("label").get<std::string>();
  return FinObj(std::move(out), std::move(label));
}

json to_json(const FinMor& mor) {
  json table = json::array();
  for (const auto& [x, y] : mor.table()) {
    table.push_back(json::array({to_json(x), to_json(y)}));
  }
  return json{{"dom", to_json(mor.dom())},
              {"cod", to_json(mor.cod())},
              {"table", std::move(table)}};
}

namespace {

FinObj obj_or_label(const json& j, const ObjContext& context,
                    const char* role) {
  if (j.is_string()) {
    auto it = context.find(j.get<std::string>());
    if (it == context.end()) {
      throw InvalidValue(std::string(role) + " names unknown object label '" +
                         j.get<std::string>() + "'");
    }
    return it->second;
  }
  return obj_from_json(j);
}

}  // namespace

FinMor mor_from_json(const json& j, const ObjContext& context) {
  FinObj dom = obj_or_label(require(j, "dom", "morphism"), context, "dom");
  FinObj cod = obj_or_label(require(j, "cod", "morphism"), context, "cod");
  const json& table = require(j, "table", "morphism");
  if (!table.is_array()) throw InvalidValue("morphism table must be an array");
  std::map<Elem, Elem> entries;
  for (const json& entry : table) {
    if (!entry.is_array() || entry.size() != 2) {
      throw InvalidValue("table entry must be [element, element]");
    }
    Elem key = elem_from_json(entry[0]);
    if (!entries.emplace(key, elem_from_json(entry[1])).second) {
      throw InvalidValue("table has two entries for " + key.str());
    }
  }
  return FinMor(std::move(dom), std::move(cod), std::move(entries));
}

namespace {

// Labels carried by a span's three objects, for leg dom/cod references.
ObjContext span_context(const FinObj& a, const FinObj& b, const FinObj& top) {
  ObjContext context;
  for (const FinObj* obj : {&a, &b, &top}) {
    if (obj->label()) context.emplace(*obj->label(), *obj);
  }
  return context;
}

struct RawSpan {
  FinObj left_foot;
  FinObj right_foot;
  FinObj apex;
  FinMor left_leg;
  FinMor right_leg;
};

RawSpan raw_span_from_json(const json& j) {
  FinObj a = obj_from_json(require(j, "left_foot", "span"));
  FinObj b = obj_from_json(require(j, "right_foot", "span"));
  FinObj top = obj_from_json(require(j, "apex", "span"));
  ObjContext context = span_context(a, b, top);
  FinMor left = mor_from_json(require(j, "left_leg", "span"), context);
  FinMor right = mor_from_json(require(j, "right_leg", "span"), context);
  return RawSpan{std::move(a), std::move(b), std::move(top), std::move(left),
                 std::move(right)};
}

json raw_span_to_json(const FinObj& a, const FinObj& b, const FinObj& top,
                      const FinMor& left, const FinMor& right) {
  return json{{"left_foot", to_json(a)},
              {"right_foot", to_json(b)},
              {"apex", to_json(top)},
              {"left_leg", to_json(left)},
              {"right_leg", to_json(right)}};
}

}  // namespace

json to_json(const FinSpan& s) {
  return raw_span_to_json(s.left_foot, s.right_foot, s.apex, s.left_leg,
                          s.right_leg);
}

FinSpan span_from_json(const json& j) {
  RawSpan raw = raw_span_from_json(j);
  return FinSpan::make(std::move(raw.left_foot), std::move(raw.right_foot),
                       std::move(raw.apex), std::move(raw.left_leg),
                       std::move(raw.right_leg));
}

json to_json(const Cospan& c) {
  json out = raw_span_to_json(c.left_foot, c.right_foot, c.apex, c.left_leg,
                              c.right_leg);
  out["kind"] = "cospan";
  return out;
}

Cospan cospan_from_json(const json& j) {
  RawSpan raw = raw_span_from_json(j);
  return Cospan::make(std::move(raw.left_foot), std::move(raw.right_foot),
                      std::move(raw.apex), std::move(raw.left_leg),
                      std::move(raw.right_leg));
}

json to_json(const FinTwoCell& cell) {
  json sig = json::array();
  for (const auto& [a, b] : cell.signature()) {
    sig.push_back(json::array({to_json(a), to_json(b)}));
  }
  return json{{"src", to_json(cell.src())},
              {"dst", to_json(cell.dst())},
              {"apex", to_json(cell.witness().apex)},
              {"to_src", to_json(cell.witness().to_src)},
              {"to_dst", to_json(cell.witness().to_dst)},
              {"signature", std::move(sig)}};
}

FinTwoCell two_cell_from_json(const json& j) {
  FinSpan src = span_from_json(require(j, "src", "2-cell"));
  FinSpan dst = span_from_json(require(j, "dst", "2-cell"));
  FinObj apex = obj_from_json(require(j, "apex", "2-cell"));
  FinMor to_src = mor_from_json(require(j, "to_src", "2-cell"));
  FinMor to_dst = mor_from_json(require(j, "to_dst", "2-cell"));
  FinTwoCell cell = FinTwoCell::from_witness(FinTwoCellWitness::make(
      std::move(src), std::move(dst), std::move(apex), std::move(to_src),
      std::move(to_dst)));
  if (j.contains("signature")) {
    Signature stored;
    for (const json& entry : j.at("signature")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw InvalidValue("signature entry must be [element, element]");
      }
      stored.emplace_back(elem_from_json(entry[0]), elem_from_json(entry[1]));
    }
    std::sort(stored.begin(), stored.end());
    if (stored != cell.signature()) {
      throw InvalidValue(
          "stored signature disagrees with the witness's recomputed one");
    }
  }
  return cell;
}

Diagram diagram_from_json(const json& j) {
  const json& nodes = require(j, "nodes", "diagram");
  if (!nodes.is_object()) throw InvalidValue("diagram nodes must be an object");
  std::map<std::string, FinObj> node_map;
  ObjContext context;
  for (const auto& [label, value] : nodes.items()) {
    FinObj obj = obj_from_json(value);
    context.emplace(label, obj);
    if (obj.label()) context.emplace(*obj.label(), obj);
    node_map.emplace(label, std::move(obj));
  }
  std::vector<DiagramEdge> edges;
  if (j.contains("edges")) {
    const json& edge_list = j.at("edges");
    if (!edge_list.is_array()) {
      throw InvalidValue("diagram edges must be an array");
    }
    for (const json& e : edge_list) {
      edges.push_back(DiagramEdge{
          require(e, "label", "edge").get<std::string>(),
          require(e, "src", "edge").get<std::string>(),
          require(e, "dst", "edge").get<std::string>(),
          mor_from_json(require(e, "mor", "edge"), context)});
    }
  }
  return Diagram(std::move(node_map), std::move(edges));
}

json to_json(const LimitResult& lim) {
  json projections = json::object();
  for (const auto& [label, mor] : lim.projections) {
    projections[label] = to_json(mor);
  }
  return json{{"apex", to_json(lim.apex)},
              {"projections", std::move(projections)}};
}

json to_json(const AxiomReport& report) {
  return json{{"law", std::string(law_name(report.law))},
              {"seed", report.instance_seed},
              {"trial", report.trial},
              {"passed", report.passed},
              {"evidence", report.evidence}};
}

json reports_to_json(const std::vector<AxiomReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

Value value_from_json(const json& j) {
  if (j.is_object() && j.contains("src") && j.contains("dst")) {
    return two_cell_from_json(j);
  }
  std::string kind;
  if (j.is_object() && j.contains("kind")) {
    kind = j.at("kind").get<std::string>();
    if (kind != "span" && kind != "cospan") {
      throw InvalidValue("kind must be 'span' or 'cospan'");
    }
  }
  RawSpan raw = raw_span_from_json(j);
  bool span_shaped = raw.left_leg.dom() == raw.apex &&
                     raw.right_leg.dom() == raw.apex &&
                     raw.left_leg.cod() == raw.left_foot &&
                     raw.right_leg.cod() == raw.right_foot;
  bool cospan_shaped = raw.left_leg.cod() == raw.apex &&
                       raw.right_leg.cod() == raw.apex &&
                       raw.left_leg.dom() == raw.left_foot &&
                       raw.right_leg.dom() == raw.right_foot;
  if (kind == "span" || (kind.empty() && span_shaped)) {
    return FinSpan::make(std::move(raw.left_foot), std::move(raw.right_foot),
                         std::move(raw.apex), std::move(raw.left_leg),
                         std::move(raw.right_leg));
  }
  if (kind == "cospan" || cospan_shaped) {
    return Cospan::make(std::move(raw.left_foot), std::move(raw.right_foot),
                        std::move(raw.apex), std::move(raw.left_leg),
                        std::move(raw.right_leg));
  }
  throw InvalidValue(
      "legs run neither out of the apex (span) nor into it (cospan)");
}

json to_json(const Value& v) {
  return std::visit([](const auto& inner) { return to_json(inner); }, v);
}

Value compose_values(const Value& a, const Value& b) {
  if (std::holds_alternative<FinSpan>(a) && std::holds_alternative<FinSpan>(b)) {
    return hcompose_spans(std::get<FinSpan>(a), std::get<FinSpan>(b));
  }
  if (std::holds_alternative<Cospan>(a) && std::holds_alternative<Cospan>(b)) {
    return cospan_compose(std::get<Cospan>(a), std::get<Cospan>(b));
  }
  if (std::holds_alternative<FinTwoCell>(a) &&
      std::holds_alternative<FinTwoCell>(b)) {
    return vcompose(std::get<FinTwoCell>(b), std::get<FinTwoCell>(a));
  }
  throw NotComposable("inputs must both be spans, cospans or 2-cells");
}

namespace {

void append_obj_line(std::ostringstream& out, const char* name,
                     const FinObj& obj) {
  out << "  " << name << ": " << obj.str() << "\n";
}

void append_span_text(std::ostringstream& out, const char* head,
                      const FinObj& a, const FinObj& b, const FinObj& top,
                      const FinMor& left, const FinMor& right) {
  out << head << "\n";
  append_obj_line(out, "left_foot ", a);
  append_obj_line(out, "right_foot", b);
  append_obj_line(out, "apex      ", top);
  out << "  left_leg  : " << mor_table_text(left) << "\n";
  out << "  right_leg : " << mor_table_text(right) << "\n";
}

}  // namespace

std::string value_to_text(const Value& v) {
  std::ostringstream out;
  if (const auto* s = std::get_if<FinSpan>(&v)) {
    append_span_text(out, "span", s->left_foot, s->right_foot, s->apex,
                     s->left_leg, s->right_leg);
  } else if (const auto* c = std::get_if<Cospan>(&v)) {
    append_span_text(out, "cospan", c->left_foot, c->right_foot, c->apex,
                     c->left_leg, c->right_leg);
  } else {
    const auto& cell = std::get<FinTwoCell>(v);
    append_span_text(out, "2-cell src", cell.src().left_foot,
                     cell.src().right_foot, cell.src().apex,
                     cell.src().left_leg, cell.src().right_leg);
    append_span_text(out, "2-cell dst", cell.dst().left_foot,
                     cell.dst().right_foot, cell.dst().apex,
                     cell.dst().left_leg, cell.dst().right_leg);
    out << "witness apex: " << cell.witness().apex.str() << "\n";
    out << "  to_src: " << mor_table_text(cell.witness().to_src) << "\n";
    out << "  to_dst: " << mor_table_text(cell.witness().to_dst) << "\n";
    out << "signature: " << signature_str(cell.signature()) << "\n";
  }
  return out.str();
}

std::string limit_to_text(const LimitResult& lim) {
  std::ostringstream out;
  out << "limit apex (" << lim.apex.size() << " elements): " << lim.apex.str()
      << "\n";
  for (const auto& [label, mor] : lim.projections) {
    out << "  projection " << label << ": " << mor_table_text(mor) << "\n";
  }
  return out.str();
}

std::string reports_to_text(const std::vector<AxiomReport>& reports) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    out << (r.passed ? "pass" : "FAIL") << " " << law_name(r.law) << "#"
        << r.trial << " seed=" << r.instance_seed << " " << r.evidence << "\n";
  }
  out << reports.size() << " checks, " << (reports.size() - failed)
      << " passed, " << failed << " failed\n";
  return out.str();
}

}  // namespace span2::io
