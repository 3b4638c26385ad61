#pragma once

#include <utility>
#include <vector>

#include "span2/finset.hpp"

namespace span2 {

// Canonical 2-cell signature: the multiset invariant that decides whether
// two spans-of-spans witnesses are isomorphic over fixed endpoints. Stored
// sorted, with multiplicities.
using Signature = std::vector<std::pair<Elem, Elem>>;

// The span/coherence machinery is written against a category backend that
// supplies chosen pullbacks, their mediating arrows, and chosen limits of
// span chains. FinSetCat is the concrete reference category; OpFinSetCat
// reads the same morphisms backwards, turning every pullback into a pushout,
// which is how the cospan side reuses the engine unchanged.
struct FinSetCat {
  using Obj = FinObj;
  using Mor = FinMor;

  static constexpr const char* name = "FinSet";

  static const Obj& dom(const Mor& m) { return m.dom(); }
  static const Obj& cod(const Mor& m) { return m.cod(); }
  static Mor compose(const Mor& g, const Mor& f) { return span2::compose(g, f); }
  static Mor identity(const Obj& a) { return span2::identity(a); }
  static bool is_iso(const Mor& m) { return span2::is_iso(m); }
  static Mor inverse(const Mor& m) { return span2::inverse(m); }

  struct Pullback {
    Obj apex;
    Mor to_left;
    Mor to_right;
  };
  static Pullback pullback(const Mor& f, const Mor& g);
  static Mor mediate(const Mor& f, const Mor& g, const Mor& h, const Mor& k);

  // Chosen limit of the zig-zag underlying a chain of composable spans
  // S0 → B1 ← S1 → B2 ← ... Legs are given per span as (left_leg,
  // right_leg) in this category's orientation. Apex elements are tuples
  // keyed "0", "1", ... by chain position; the forced middle-foot
  // coordinates are omitted.
  struct ChainLimit {
    Obj apex;
    std::vector<Mor> legs;  // apex → i-th span apex
  };
  static ChainLimit chain_limit(const std::vector<std::pair<Mor, Mor>>& spans);

  // The multiset of (to_src(x), to_dst(x)) over the witness apex. Complete
  // for witness isomorphism: an isomorphism over fixed endpoints must
  // preserve each element's pair of leg images, and any multiplicity-
  // preserving matching is such an isomorphism.
  static Signature witness_signature(const Mor& to_src, const Mor& to_dst);

  // Whether a morphism dom → cod exists at all (false exactly when the
  // codomain is empty and the domain is not).
  static bool mor_exists(const Obj& dom_obj, const Obj& cod_obj) {
    return !cod_obj.empty() || dom_obj.empty();
  }
};

struct OpFinSetCat {
  using Obj = FinObj;
  using Mor = FinMor;

  static constexpr const char* name = "FinSet^op";

  static const Obj& dom(const Mor& m) { return m.cod(); }
  static const Obj& cod(const Mor& m) { return m.dom(); }
  static Mor compose(const Mor& g, const Mor& f) { return span2::compose(f, g); }
  static Mor identity(const Obj& a) { return span2::identity(a); }
  static bool is_iso(const Mor& m) { return span2::is_iso(m); }
  static Mor inverse(const Mor& m) { return span2::inverse(m); }

  struct Pullback {
    Obj apex;
    Mor to_left;
    Mor to_right;
  };
  // Pullback in the opposite category is the pushout of the underlying
  // functions; the injections already read as arrows out of the apex here.
  static Pullback pullback(const Mor& f, const Mor& g);
  static Mor mediate(const Mor& f, const Mor& g, const Mor& h, const Mor& k);

  struct ChainLimit {
    Obj apex;
    std::vector<Mor> legs;
  };
  // Limit of the reversed zig-zag = colimit of the underlying diagram:
  // the tagged disjoint union of the span apexes quotiented by the
  // middle-foot gluing relations, built with union-find.
  static ChainLimit chain_limit(const std::vector<std::pair<Mor, Mor>>& spans);

  // Here witness legs are functions into the 2-cell apex, so the complete
  // invariant pairs each apex element's fibers instead of its images. The
  // fibers are encoded as tuples to keep one Signature type for both
  // directions.
  static Signature witness_signature(const Mor& to_src, const Mor& to_dst);

  static bool mor_exists(const Obj& dom_obj, const Obj& cod_obj) {
    return !dom_obj.empty() || cod_obj.empty();
  }
};

}  // namespace span2
