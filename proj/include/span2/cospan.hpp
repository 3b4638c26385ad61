#pragma once

#include <cstdint>
#include <vector>

#include "span2/coherence.hpp"
#include "span2/spans.hpp"

namespace span2 {

// A cospan in FinSet: two legs into a common apex. With finite sets of
// labeled boundary components standing in for manifolds, a cospan is a toy
// cobordism from its left boundary to its right boundary, and a cospan is
// nothing but a span read in the opposite category — which is exactly how
// the engine handles it.
struct Cospan {
  FinObj left_foot;
  FinObj right_foot;
  FinObj apex;
  FinMor left_leg;   // left_foot → apex
  FinMor right_leg;  // right_foot → apex

  static Cospan make(FinObj a, FinObj b, FinObj top, FinMor left, FinMor right);

  bool operator==(const Cospan& other) const = default;
};

// A cospan of cospans: the dual 2-cell data, with legs out of the endpoint
// apexes into the 2-cell apex and the signature computed in the opposite
// category (paired fibers instead of paired images).
struct CoTwoCell {
  Cospan src;
  Cospan dst;
  FinObj apex;
  FinMor from_src;  // src.apex → apex
  FinMor from_dst;  // dst.apex → apex
  Signature signature;

  static CoTwoCell make(Cospan src, Cospan dst, FinObj apex, FinMor from_src,
                        FinMor from_dst);
};

Cospan identity_cospan(const FinObj& a);

// Composition by the chosen pushout over the shared foot: glue the two
// apexes along the images of the middle boundary.
Cospan cospan_compose(const Cospan& c1, const Cospan& c2);

// A cospan and a span over the opposite category carry the same five
// fields; dualize moves between the two readings without touching any
// table, and is a structural involution.
OpSpan dualize(const Cospan& c);
Cospan dualize(const OpSpan& s);
OpTwoCell dualize_cell(const CoTwoCell& c);
CoTwoCell dualize_cell(const OpTwoCell& c);

bool co_two_cells_equal(const CoTwoCell& a, const CoTwoCell& b);

// Builds deterministic random cobordism instances (boundary-component sets
// glued along shared boundaries, plus cobordisms of cobordisms) and runs
// the full coherence suite in the dual direction. The outer boundaries have
// exactly circles_in and circles_out components; everything in between is
// drawn uniformly below their maximum.
std::vector<AxiomReport> demo_cobordism(std::size_t circles_in,
                                        std::size_t circles_out,
                                        std::uint64_t seed);

}  // namespace span2
