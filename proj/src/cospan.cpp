#include "span2/cospan.hpp"

#include <string>

#include "span2/errors.hpp"

namespace span2 {

Cospan Cospan::make(FinObj a, FinObj b, FinObj top, FinMor left,
                    FinMor right) {
  if (!(left.cod() == top) || !(right.cod() == top)) {
    throw InvalidValue("cospan legs do not land in the apex");
  }
  if (!(left.dom() == a) || !(right.dom() == b)) {
    throw InvalidValue("cospan legs do not start at the feet");
  }
  return Cospan{std::move(a), std::move(b), std::move(top), std::move(left),
                std::move(right)};
}

CoTwoCell CoTwoCell::make(Cospan src, Cospan dst, FinObj apex, FinMor from_src,
                          FinMor from_dst) {
  OpTwoCellWitness witness = OpTwoCellWitness::make(
      dualize(src), dualize(dst), apex, from_src, from_dst);
  Signature sig =
      OpFinSetCat::witness_signature(witness.to_src, witness.to_dst);
  return CoTwoCell{std::move(src),      std::move(dst),
                   std::move(apex),     std::move(from_src),
                   std::move(from_dst), std::move(sig)};
}

Cospan identity_cospan(const FinObj& a) {
  return Cospan{a, a, a, identity(a), identity(a)};
}

Cospan cospan_compose(const Cospan& c1, const Cospan& c2) {
  if (!(c1.right_foot == c2.left_foot)) {
    throw NotComposable("cospan feet do not match");
  }
  PushoutResult po = pushout(c1.right_leg, c2.left_leg);
  return Cospan{c1.left_foot, c2.right_foot, po.apex,
                compose(po.from_left, c1.left_leg),
                compose(po.from_right, c2.right_leg)};
}

OpSpan dualize(const Cospan& c) {
  return OpSpan::make(c.left_foot, c.right_foot, c.apex, c.left_leg,
                      c.right_leg);
}

Cospan dualize(const OpSpan& s) {
  return Cospan::make(s.left_foot, s.right_foot, s.apex, s.left_leg,
                      s.right_leg);
}

OpTwoCell dualize_cell(const CoTwoCell& c) {
  return OpTwoCell::from_witness(OpTwoCellWitness::make(
      dualize(c.src), dualize(c.dst), c.apex, c.from_src, c.from_dst));
}

CoTwoCell dualize_cell(const OpTwoCell& c) {
  return CoTwoCell::make(dualize(c.src()), dualize(c.dst()),
                         c.witness().apex, c.witness().to_src,
                         c.witness().to_dst);
}

bool co_two_cells_equal(const CoTwoCell& a, const CoTwoCell& b) {
  return a.src == b.src && a.dst == b.dst && a.signature == b.signature;
}

std::vector<AxiomReport> demo_cobordism(std::size_t circles_in,
                                        std::size_t circles_out,
                                        std::uint64_t seed) {
  const std::size_t bound = std::max(circles_in, circles_out);
  auto circles = [](std::size_t count, std::size_t pos) {
    std::vector<Elem> elems;
    elems.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      elems.push_back(
          Elem::atom("c" + std::to_string(pos) + "_" + std::to_string(i)));
    }
    return FinObj(std::move(elems));
  };
  detail::FootFn foot = [=](Rng& rng, std::size_t pos, std::size_t len) {
    if (pos == 0) return circles(circles_in, pos);
    if (pos + 1 == len) return circles(circles_out, pos);
    return circles(rng.pick_size(bound), pos);
  };
  constexpr std::size_t kDemoTrials = 10;
  return detail::verify_in<OpFinSetCat>(seed, bound, kDemoTrials, foot);
}

}  // namespace span2
