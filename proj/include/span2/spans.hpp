#pragma once

#include <string>
#include <utility>
#include <vector>

#include "span2/backend.hpp"
#include "span2/errors.hpp"

namespace span2 {

// A span from left_foot to right_foot: two legs out of a common apex, read
// in the backend category's orientation. The 1-cells of the bicategory.
//
// Equality is on the nose (equal feet, apex and legs). Chosen pullbacks in
// the backend make composites of equal inputs equal, which is what lets the
// hom-categories carry definite objects.
template <typename Cat>
struct Span {
  typename Cat::Obj left_foot;
  typename Cat::Obj right_foot;
  typename Cat::Obj apex;
  typename Cat::Mor left_leg;   // apex → left_foot
  typename Cat::Mor right_leg;  // apex → right_foot

  static Span make(typename Cat::Obj a, typename Cat::Obj b,
                   typename Cat::Obj top, typename Cat::Mor left,
                   typename Cat::Mor right) {
    if (!(Cat::dom(left) == top) || !(Cat::dom(right) == top)) {
      throw InvalidValue("span legs do not share the apex as their source");
    }
    if (!(Cat::cod(left) == a) || !(Cat::cod(right) == b)) {
      throw InvalidValue("span legs do not land on the feet");
    }
    return Span{std::move(a), std::move(b), std::move(top), std::move(left),
                std::move(right)};
  }

  bool operator==(const Span& other) const = default;
};

template <typename Cat>
Span<Cat> identity_span(const typename Cat::Obj& a) {
  return Span<Cat>{a, a, a, Cat::identity(a), Cat::identity(a)};
}

// Horizontal composition of 1-cells: the chosen pullback over the shared
// foot, with legs the composites through the projections.
template <typename Cat>
Span<Cat> hcompose_spans(const Span<Cat>& s, const Span<Cat>& t) {
  if (!(s.right_foot == t.left_foot)) {
    throw NotComposable("span feet do not match");
  }
  auto pb = Cat::pullback(s.right_leg, t.left_leg);
  return Span<Cat>{s.left_foot, t.right_foot, pb.apex,
                   Cat::compose(s.left_leg, pb.to_left),
                   Cat::compose(t.right_leg, pb.to_right)};
}

// A commuting span between parallel spans: the raw data underneath a
// 2-cell, before passing to its isomorphism class.
template <typename Cat>
struct TwoCellWitness {
  Span<Cat> src;
  Span<Cat> dst;
  typename Cat::Obj apex;
  typename Cat::Mor to_src;  // apex → src.apex
  typename Cat::Mor to_dst;  // apex → dst.apex

  static TwoCellWitness make(Span<Cat> src, Span<Cat> dst,
                             typename Cat::Obj apex, typename Cat::Mor to_src,
                             typename Cat::Mor to_dst) {
    if (!(src.left_foot == dst.left_foot) ||
        !(src.right_foot == dst.right_foot)) {
      throw InvalidValue("witness endpoints are not parallel spans");
    }
    if (!(Cat::dom(to_src) == apex) || !(Cat::dom(to_dst) == apex) ||
        !(Cat::cod(to_src) == src.apex) || !(Cat::cod(to_dst) == dst.apex)) {
      throw InvalidValue("witness legs do not connect its apex to the spans");
    }
    if (!(Cat::compose(src.left_leg, to_src) ==
          Cat::compose(dst.left_leg, to_dst))) {
      throw NotCommuting("left square of the witness does not commute");
    }
    if (!(Cat::compose(src.right_leg, to_src) ==
          Cat::compose(dst.right_leg, to_dst))) {
      throw NotCommuting("right square of the witness does not commute");
    }
    return TwoCellWitness{std::move(src), std::move(dst), std::move(apex),
                          std::move(to_src), std::move(to_dst)};
  }
};

// A 2-cell: the isomorphism class of a span of spans, represented by its
// canonical signature plus one retained witness. Composites return the
// chosen-pullback witness; compare 2-cells with two_cells_equal, never
// structurally.
template <typename Cat>
class TwoCell {
 public:
  static TwoCell from_witness(TwoCellWitness<Cat> w) {
    Signature sig = Cat::witness_signature(w.to_src, w.to_dst);
    return TwoCell(std::move(w), std::move(sig));
  }

  const Span<Cat>& src() const { return witness_.src; }
  const Span<Cat>& dst() const { return witness_.dst; }
  const Signature& signature() const { return signature_; }
  const TwoCellWitness<Cat>& witness() const { return witness_; }

 private:
  TwoCell(TwoCellWitness<Cat> w, Signature sig)
      : witness_(std::move(w)), signature_(std::move(sig)) {}

  TwoCellWitness<Cat> witness_;
  Signature signature_;
};

template <typename Cat>
TwoCell<Cat> make_two_cell(TwoCellWitness<Cat> w) {
  return TwoCell<Cat>::from_witness(std::move(w));
}

template <typename Cat>
TwoCell<Cat> id_two_cell(const Span<Cat>& s) {
  return TwoCell<Cat>::from_witness(TwoCellWitness<Cat>::make(
      s, s, s.apex, Cat::identity(s.apex), Cat::identity(s.apex)));
}

// Two 2-cells are equal exactly when their endpoints agree on the nose and
// their signatures agree as multisets; the signature is a complete
// invariant of witness isomorphism over fixed endpoints.
template <typename Cat>
bool two_cells_equal(const TwoCell<Cat>& a, const TwoCell<Cat>& b) {
  return a.src() == b.src() && a.dst() == b.dst() &&
         a.signature() == b.signature();
}

// Vertical composition within a hom-category: pull the two witnesses back
// over the shared span's apex.
template <typename Cat>
TwoCell<Cat> vcompose(const TwoCell<Cat>& later, const TwoCell<Cat>& earlier) {
  if (!(earlier.dst() == later.src())) {
    throw NotComposable("2-cells do not share the middle span");
  }
  auto pb = Cat::pullback(earlier.witness().to_dst, later.witness().to_src);
  return TwoCell<Cat>::from_witness(TwoCellWitness<Cat>::make(
      earlier.src(), later.dst(), pb.apex,
      Cat::compose(earlier.witness().to_src, pb.to_left),
      Cat::compose(later.witness().to_dst, pb.to_right)));
}

// Horizontal composition of 2-cells: pull the witnesses back over the
// shared foot, then mediate into the composite spans' apexes. The two
// mediating legs commute by construction; the witness constructor checks
// the squares anyway.
template <typename Cat>
TwoCell<Cat> hcompose_cells(const TwoCell<Cat>& x, const TwoCell<Cat>& y) {
  if (!(x.src().right_foot == y.src().left_foot)) {
    throw NotComposable("2-cell feet do not match");
  }
  Span<Cat> src_comp = hcompose_spans(x.src(), y.src());
  Span<Cat> dst_comp = hcompose_spans(x.dst(), y.dst());

  auto pb = Cat::pullback(
      Cat::compose(x.src().right_leg, x.witness().to_src),
      Cat::compose(y.src().left_leg, y.witness().to_src));

  typename Cat::Mor p = Cat::mediate(
      x.src().right_leg, y.src().left_leg,
      Cat::compose(x.witness().to_src, pb.to_left),
      Cat::compose(y.witness().to_src, pb.to_right));
  typename Cat::Mor q = Cat::mediate(
      x.dst().right_leg, y.dst().left_leg,
      Cat::compose(x.witness().to_dst, pb.to_left),
      Cat::compose(y.witness().to_dst, pb.to_right));

  return TwoCell<Cat>::from_witness(TwoCellWitness<Cat>::make(
      std::move(src_comp), std::move(dst_comp), pb.apex, std::move(p),
      std::move(q)));
}

// Vertical inverse of a 2-cell whose witness legs are both isomorphisms
// (all the invertible 2-cells built here — associators, unitors — have this
// form): swap the endpoints and the legs.
template <typename Cat>
TwoCell<Cat> invert(const TwoCell<Cat>& c) {
  if (!Cat::is_iso(c.witness().to_src) || !Cat::is_iso(c.witness().to_dst)) {
    throw NotInvertible("2-cell witness legs are not both isomorphisms");
  }
  return TwoCell<Cat>::from_witness(
      TwoCellWitness<Cat>::make(c.dst(), c.src(), c.witness().apex,
                                c.witness().to_dst, c.witness().to_src));
}

using FinSpan = Span<FinSetCat>;
using FinTwoCellWitness = TwoCellWitness<FinSetCat>;
using FinTwoCell = TwoCell<FinSetCat>;
using OpSpan = Span<OpFinSetCat>;
using OpTwoCellWitness = TwoCellWitness<OpFinSetCat>;
using OpTwoCell = TwoCell<OpFinSetCat>;

}  // namespace span2
