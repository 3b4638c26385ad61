#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "span2/finset.hpp"

namespace span2 {

struct DiagramEdge {
  std::string label;
  std::string src;
  std::string dst;
  FinMor mor;
};

// A finite diagram of objects and arrows, with unique node and edge labels.
class Diagram {
 public:
  Diagram(std::map<std::string, FinObj> nodes, std::vector<DiagramEdge> edges);

  const std::map<std::string, FinObj>& nodes() const { return nodes_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }

 private:
  std::map<std::string, FinObj> nodes_;
  std::vector<DiagramEdge> edges_;
};

// Limit of a diagram. Apex elements are tuples keyed by node label, in
// sorted node-label order; projections pick out the coordinates.
struct LimitResult {
  FinObj apex;
  std::map<std::string, FinMor> projections;
};

// Computes the limit by enumerating the full product of the node objects
// and keeping the tuples that satisfy every edge equation. When max_product
// is given and the product would exceed it, throws LimitTooLarge before
// enumerating.
LimitResult limit(const Diagram& diagram,
                  std::optional<std::uint64_t> max_product = std::nullopt);

// The unique u : W → apex with projections[n] ∘ u = cone[n] for every node.
// The cone legs must share a domain and cover exactly the diagram's nodes.
// Throws NotACone when the legs violate an edge equation.
FinMor limit_mediate(const LimitResult& lim,
                     const std::map<std::string, FinMor>& cone);

}  // namespace span2
