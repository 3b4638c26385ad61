#include "span2/diagram.hpp"

#include <algorithm>
#include <set>

#include "span2/errors.hpp"

namespace span2 {

Diagram::Diagram(std::map<std::string, FinObj> nodes,
                 std::vector<DiagramEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::set<std::string> edge_labels;
  for (const auto& e : edges_) {
    if (!edge_labels.insert(e.label).second) {
      throw MalformedDiagram("duplicate edge label '" + e.label + "'");
    }
    auto src = nodes_.find(e.src);
    auto dst = nodes_.find(e.dst);
    if (src == nodes_.end() || dst == nodes_.end()) {
      throw MalformedDiagram("edge '" + e.label +
                             "' has a dangling endpoint: " + e.src + " -> " +
                             e.dst);
    }
    if (!(e.mor.dom() == src->second) || !(e.mor.cod() == dst->second)) {
      throw MalformedDiagram("edge '" + e.label +
                             "' carries a morphism that does not match its "
                             "endpoint objects");
    }
  }
}

LimitResult limit(const Diagram& diagram,
                  std::optional<std::uint64_t> max_product) {
  // Node labels in sorted order fix the tuple layout.
  std::vector<std::string> labels;
  labels.reserve(diagram.nodes().size());
  for (const auto& [label, obj] : diagram.nodes()) labels.push_back(label);

  std::uint64_t product = 1;
  bool overflow = false;
  for (const auto& label : labels) {
    std::uint64_t n = diagram.nodes().at(label).size();
    if (n == 0) {
      product = 0;
      break;
    }
    if (product > UINT64_MAX / n) {
      overflow = true;
      break;
    }
    product *= n;
  }
  if (max_product && (overflow || product > *max_product)) {
    throw LimitTooLarge("limit would enumerate more than " +
                        std::to_string(*max_product) + " tuples");
  }

  std::vector<Elem> apex_elems;
  std::map<std::string, std::map<Elem, Elem>> proj_tables;

  // Odometer over the product of the node objects.
  std::vector<std::size_t> counter(labels.size(), 0);
  bool exhausted = product == 0;
  while (!exhausted) {
    std::map<std::string, Elem> assignment;
    std::vector<Elem::Slot> slots;
    slots.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Elem& value = diagram.nodes().at(labels[i]).elements()[counter[i]];
      assignment.emplace(labels[i], value);
      slots.emplace_back(labels[i], value);
    }

    bool consistent = true;
    for (const auto& e : diagram.edges()) {
      if (!(e.mor(assignment.at(e.src)) == assignment.at(e.dst))) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      Elem t = Elem::tuple(std::move(slots));
      for (const auto& [label, value] : assignment) {
        proj_tables[label].emplace(t, value);
      }
      apex_elems.push_back(std::move(t));
    }

    exhausted = true;
    for (std::size_t i = labels.size(); i-- > 0;) {
      if (++counter[i] < diagram.nodes().at(labels[i]).size()) {
        exhausted = false;
        break;
      }
      counter[i] = 0;
    }
    if (labels.empty()) break;  // single empty tuple already emitted
  }

  FinObj apex(std::move(apex_elems));
  std::map<std::string, FinMor> projections;
  for (const auto& label : labels) {
    projections.emplace(
        label, FinMor(apex, diagram.nodes().at(label),
                      std::move(proj_tables[label])));
  }
  return LimitResult{std::move(apex), std::move(projections)};
}

FinMor limit_mediate(const LimitResult& lim,
                     const std::map<std::string, FinMor>& cone) {
  if (cone.size() != lim.projections.size()) {
    throw NotACone("cone does not cover exactly the diagram's nodes");
  }
  const FinObj* domain = nullptr;
  for (const auto& [label, leg] : cone) {
    auto proj = lim.projections.find(label);
    if (proj == lim.projections.end()) {
      throw NotACone("cone has a leg for unknown node '" + label + "'");
    }
    if (!(leg.cod() == proj->second.cod())) {
      throw NotACone("cone leg for node '" + label +
                     "' lands in the wrong object");
    }
    if (domain == nullptr) {
      domain = &leg.dom();
    } else if (!(leg.dom() == *domain)) {
      throw NotACone("cone legs do not share a domain");
    }
  }

  std::map<Elem, Elem> table;
  if (domain != nullptr) {
    for (const auto& w : domain->elements()) {
      std::vector<Elem::Slot> slots;
      slots.reserve(cone.size());
      for (const auto& [label, leg] : cone) slots.emplace_back(label, leg(w));
      Elem t = Elem::tuple(std::move(slots));
      // Apex membership is exactly the cone condition: the apex holds all
      // tuples that satisfy every edge equation.
      if (!lim.apex.contains(t)) {
        throw NotACone("cone legs violate an edge equation at " + w.str());
      }
      table.emplace(w, std::move(t));
    }
  }
  FinObj dom_obj = domain ? *domain : FinObj();
  return FinMor(std::move(dom_obj), lim.apex, std::move(table));
}

}  // namespace span2
