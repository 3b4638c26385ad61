#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "span2/elem.hpp"

namespace span2 {

// A finite set with a canonical element order and an optional printable
// label. Equality compares element lists only; labels are cosmetic.
class FinObj {
 public:
  FinObj() = default;
  explicit FinObj(std::vector<Elem> elements,
                  std::optional<std::string> label = std::nullopt);

  const std::vector<Elem>& elements() const { return elements_; }
  const std::optional<std::string>& label() const { return label_; }

  bool contains(const Elem& e) const;
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool operator==(const FinObj& other) const {
    return elements_ == other.elements_;
  }

  std::string str() const;

 private:
  std::vector<Elem> elements_;  // sorted, duplicate-free
  std::optional<std::string> label_;
};

// A total function between finite sets, tabulated element by element.
class FinMor {
 public:
  FinMor(FinObj dom, FinObj cod, std::map<Elem, Elem> table);

  const FinObj& dom() const { return dom_; }
  const FinObj& cod() const { return cod_; }
  const std::map<Elem, Elem>& table() const { return table_; }

  const Elem& operator()(const Elem& x) const;

  bool operator==(const FinMor& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && table_ == other.table_;
  }

 private:
  FinObj dom_;
  FinObj cod_;
  std::map<Elem, Elem> table_;
};

// g after f. Throws CompositionMismatch unless f.cod = g.dom.
FinMor compose(const FinMor& g, const FinMor& f);

FinMor identity(const FinObj& a);

// The fixed one-element object {★}.
FinObj terminal();

bool is_iso(const FinMor& f);

// Throws NotInvertible unless f is a bijection.
FinMor inverse(const FinMor& f);

// The chosen pullback of a cospan f : X → T ← Y : g. The apex is the sorted
// set of pairs (x, y) with f(x) = g(y); the legs are the coordinate
// projections. Any other pullback of the same cospan is canonically
// isomorphic to this one, and fixing the representative makes composites
// of equal inputs equal on the nose.
struct PullbackResult {
  FinObj apex;
  FinMor to_left;   // apex → dom(f)
  FinMor to_right;  // apex → dom(g)
};
PullbackResult pullback(const FinMor& f, const FinMor& g);

// The unique u : W → apex with to_left ∘ u = h and to_right ∘ u = k, for a
// cone h : W → dom(f), k : W → dom(g) over the cospan (f, g). Concretely
// u(w) = (h(w), k(w)). Throws NotACone when f ∘ h ≠ g ∘ k.
FinMor pullback_mediate(const FinMor& f, const FinMor& g, const FinMor& h,
                        const FinMor& k);

// The chosen pushout of a span X ← B → Y: the disjoint union of cod(f) and
// cod(g), tagged by injection side, quotiented by f(b) ~ g(b) via
// union-find. Each merge class is named by its least tagged member.
struct PushoutResult {
  FinObj apex;
  FinMor from_left;   // cod(f) → apex
  FinMor from_right;  // cod(g) → apex
};
PushoutResult pushout(const FinMor& f, const FinMor& g);

// The unique u : apex → W with u ∘ from_left = h and u ∘ from_right = k,
// for a cocone h : cod(f) → W, k : cod(g) → W under the span (f, g).
// Throws NotACone when h ∘ f ≠ k ∘ g.
FinMor pushout_mediate(const FinMor& f, const FinMor& g, const FinMor& h,
                       const FinMor& k);

}  // namespace span2
