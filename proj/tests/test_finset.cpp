#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "span2/errors.hpp"
#include "span2/finset.hpp"
#include "span2/generate.hpp"
#include "span2/rng.hpp"

using namespace helpers;
using span2::Elem;
using span2::FinMor;
using span2::FinObj;
using span2::Rng;

TEST_CASE("object construction sorts and rejects duplicates") {
  FinObj unsorted({Elem::atom("b"), Elem::atom("a")});
  CHECK(unsorted.elements()[0] == Elem::atom("a"));
  CHECK_THROWS_AS(FinObj({Elem::atom("a"), Elem::atom("a")}),
                  span2::InvalidValue);
  CHECK(FinObj().empty());
  CHECK(obj({"x"}) == obj({"x"}));
  CHECK(labeled({"x"}, "A") == obj({"x"}));  // labels are cosmetic
}

TEST_CASE("morphism construction enforces totality and codomain") {
  FinObj ab = obj({"a", "b"});
  FinObj z = obj({"z"});
  CHECK_THROWS_AS(fn(ab, z, {{"a", "z"}}), span2::InvalidValue);
  CHECK_THROWS_AS(fn(ab, z, {{"a", "z"}, {"b", "w"}}), span2::InvalidValue);
  CHECK_THROWS_AS(fn(ab, z, {{"a", "z"}, {"b", "z"}, {"c", "z"}}),
                  span2::InvalidValue);
  CHECK_NOTHROW(fn(ab, z, {{"a", "z"}, {"b", "z"}}));
}

TEST_CASE("compose: identity, singleton forcing, hand-enumerated table") {
  FinObj ab = obj({"a", "b"});
  CHECK(compose(identity(ab), identity(ab)) == identity(ab));

  FinObj one = obj({"1"});
  FinObj a = obj({"a"});
  FinObj z = obj({"z"});
  FinMor f = fn(one, a, {{"1", "a"}});
  FinMor g = fn(a, z, {{"a", "z"}});
  CHECK(compose(g, f) == fn(one, z, {{"1", "z"}}));

  // Enumerating the table by hand: 1 -> a -> u, 2 -> b -> u.
  FinObj onetwo = obj({"1", "2"});
  FinObj u = obj({"u"});
  FinMor f2 = fn(onetwo, ab, {{"1", "a"}, {"2", "b"}});
  FinMor g2 = fn(ab, u, {{"a", "u"}, {"b", "u"}});
  CHECK(compose(g2, f2) == fn(onetwo, u, {{"1", "u"}, {"2", "u"}}));

  CHECK_THROWS_AS(compose(f2, g2), span2::CompositionMismatch);
}

TEST_CASE("identity on empty and singleton objects; unit law") {
  CHECK(identity(FinObj()).table().empty());
  FinObj a = obj({"a"});
  CHECK(identity(a) == fn(a, a, {{"a", "a"}}));

  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    FinObj dom = span2::random_object(rng, 4, "x");
    FinObj cod = span2::random_object(rng, 3, "y");
    if (cod.empty() && !dom.empty()) continue;
    FinMor f = span2::random_fn(rng, dom, cod);
    CHECK(compose(identity(cod), f) == f);
    CHECK(compose(f, identity(dom)) == f);
  }
}

TEST_CASE("compose is associative on random triples") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    FinObj a = span2::random_object(rng, 4, "a");
    FinObj b = span2::random_object(rng, 4, "b");
    FinObj c = span2::random_object(rng, 4, "c");
    FinObj d = span2::random_object(rng, 4, "d");
    if ((b.empty() && !a.empty()) || (c.empty() && !b.empty()) ||
        (d.empty() && !c.empty())) {
      continue;
    }
    FinMor f = span2::random_fn(rng, a, b);
    FinMor g = span2::random_fn(rng, b, c);
    FinMor h = span2::random_fn(rng, c, d);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
  }
}

TEST_CASE("terminal object admits exactly one map from anything") {
  FinObj t = span2::terminal();
  CHECK(t.size() == 1);
  for (const FinObj& a : {FinObj(), obj({"a"}), obj({"a", "b", "c"})}) {
    CHECK(oracle::all_maps(a, t).size() == 1);
  }
}

TEST_CASE("pullback: the frozen product-filter example") {
  // f: {1,2,3} -> {a,b} as 1,2 -> a, 3 -> b; g: {4,5} -> {a,b} as 4 -> b,
  // 5 -> a. Of the 6 product pairs, exactly (1,5), (2,5), (3,4) survive.
  FinObj dom_f = obj({"1", "2", "3"});
  FinObj dom_g = obj({"4", "5"});
  FinObj ab = obj({"a", "b"});
  FinMor f = fn(dom_f, ab, {{"1", "a"}, {"2", "a"}, {"3", "b"}});
  FinMor g = fn(dom_g, ab, {{"4", "b"}, {"5", "a"}});

  auto expected = oracle::product_filter(f, g);
  REQUIRE(expected.size() == 3);

  auto pb = span2::pullback(f, g);
  REQUIRE(pb.apex.size() == 3);
  std::vector<Elem> expected_elems = {
      Elem::pair(Elem::atom("1"), Elem::atom("5")),
      Elem::pair(Elem::atom("2"), Elem::atom("5")),
      Elem::pair(Elem::atom("3"), Elem::atom("4")),
  };
  CHECK(pb.apex.elements() == expected_elems);
  // Square commutes, legs are the projections.
  CHECK(compose(f, pb.to_left) == compose(g, pb.to_right));
  for (const auto& p : pb.apex.elements()) {
    CHECK(pb.to_left(p) == p.first());
    CHECK(pb.to_right(p) == p.second());
  }
}

TEST_CASE("pullback of identities is the diagonal") {
  FinObj a = obj({"a", "b", "c"});
  auto pb = span2::pullback(identity(a), identity(a));
  CHECK(pb.apex.size() == a.size());
  CHECK(span2::is_iso(pb.to_left));
  CHECK(span2::is_iso(pb.to_right));
  for (const auto& p : pb.apex.elements()) CHECK(p.first() == p.second());
}

TEST_CASE("pullback along an identity leg is a bijection onto the tail") {
  Rng rng(19);
  for (int i = 0; i < 25; ++i) {
    FinObj s = span2::random_object(rng, 4, "s");
    FinObj x = span2::random_object(rng, 4, "x");
    if (s.empty() && !x.empty()) continue;
    FinMor f = span2::random_fn(rng, x, s);
    auto pb = span2::pullback(f, identity(s));
    CHECK(pb.apex.size() == x.size());
    CHECK(span2::is_iso(pb.to_left));
    CHECK(compose(f, pb.to_left) == pb.to_right);
  }
}

TEST_CASE("pullback with both legs iso collapses to either side") {
  FinObj a = obj({"a", "b"});
  FinObj b = obj({"p", "q"});
  FinObj t = obj({"x", "y"});
  FinMor f = fn(a, t, {{"a", "y"}, {"b", "x"}});
  FinMor g = fn(b, t, {{"p", "x"}, {"q", "y"}});
  auto pb = span2::pullback(f, g);
  CHECK(span2::is_iso(pb.to_left));
  CHECK(span2::is_iso(pb.to_right));
  CHECK(pb.apex.size() == 2);
}

TEST_CASE("pullback_mediate: universal arrow examples") {
  FinObj dom_f = obj({"1", "2", "3"});
  FinObj dom_g = obj({"4", "5"});
  FinObj ab = obj({"a", "b"});
  FinMor f = fn(dom_f, ab, {{"1", "a"}, {"2", "a"}, {"3", "b"}});
  FinMor g = fn(dom_g, ab, {{"4", "b"}, {"5", "a"}});
  auto pb = span2::pullback(f, g);

  SUBCASE("the apex itself with the projections mediates as the identity") {
    FinMor u = span2::pullback_mediate(f, g, pb.to_left, pb.to_right);
    CHECK(u == identity(pb.apex));
  }

  SUBCASE("a singleton cone picks out its pair") {
    FinObj w = obj({"w"});
    FinMor h = fn(w, dom_f, {{"w", "1"}});
    FinMor k = fn(w, dom_g, {{"w", "5"}});
    FinMor u = span2::pullback_mediate(f, g, h, k);
    CHECK(u(Elem::atom("w")) == Elem::pair(Elem::atom("1"), Elem::atom("5")));
    CHECK(compose(pb.to_left, u) == h);
    CHECK(compose(pb.to_right, u) == k);
  }

  SUBCASE("a non-commuting pair of legs is rejected") {
    FinObj w = obj({"w"});
    FinMor h = fn(w, dom_f, {{"w", "1"}});
    FinMor k = fn(w, dom_g, {{"w", "4"}});  // f(1)=a but g(4)=b
    CHECK_THROWS_AS(span2::pullback_mediate(f, g, h, k), span2::NotACone);
  }
}

TEST_CASE("pullback universal property against exhaustive enumeration") {
  Rng rng(23);
  int exercised = 0;
  for (int i = 0; i < 60; ++i) {
    FinObj t = span2::random_object(rng, 4, "t");
    FinObj x = span2::random_object(rng, 4, "x");
    FinObj y = span2::random_object(rng, 4, "y");
    if (t.empty() && (!x.empty() || !y.empty())) continue;
    FinMor f = span2::random_fn(rng, x, t);
    FinMor g = span2::random_fn(rng, y, t);
    auto pb = span2::pullback(f, g);

    FinObj w = span2::random_object(rng, 3, "w");
    // Build a random commuting cone by picking apex elements.
    if (pb.apex.empty() && !w.empty()) continue;
    std::map<Elem, Elem> h_table;
    std::map<Elem, Elem> k_table;
    for (const auto& e : w.elements()) {
      const Elem& p = pb.apex.elements()[rng.below(pb.apex.size())];
      h_table.emplace(e, p.first());
      k_table.emplace(e, p.second());
    }
    FinMor h(w, x, std::move(h_table));
    FinMor k(w, y, std::move(k_table));

    FinMor u = span2::pullback_mediate(f, g, h, k);
    auto all = oracle::commuting_maps(w, pb.apex, pb.to_left, pb.to_right, h, k);
    REQUIRE(all.size() == 1);
    CHECK(all.front() == u);
    ++exercised;
  }
  CHECK(exercised > 10);
}

TEST_CASE("pushout: the frozen union-find example") {
  // f: {x} -> {1,2} with x -> 1; g: {x} -> {a,b} with x -> a. Union-find on
  // the 4 tagged nodes with one merge leaves 3 classes.
  FinObj x = obj({"x"});
  FinObj left = obj({"1", "2"});
  FinObj right = obj({"a", "b"});
  FinMor f = fn(x, left, {{"x", "1"}});
  FinMor g = fn(x, right, {{"x", "a"}});
  CHECK(oracle::pushout_size(f, g) == 3);

  auto po = span2::pushout(f, g);
  CHECK(po.apex.size() == 3);
  CHECK(compose(po.from_left, f) == compose(po.from_right, g));
  CHECK(po.from_left(Elem::atom("1")) == po.from_right(Elem::atom("a")));
  CHECK_FALSE(po.from_left(Elem::atom("2")) == po.from_right(Elem::atom("b")));
  for (const auto& e : po.apex.elements()) {
    CHECK(e.kind() == Elem::Kind::Class);
  }
}

TEST_CASE("pushout along identities collapses to the object") {
  FinObj a = obj({"a", "b", "c"});
  auto po = span2::pushout(identity(a), identity(a));
  CHECK(po.apex.size() == a.size());
  CHECK(po.from_left == po.from_right);
  CHECK(span2::is_iso(po.from_left));
}

TEST_CASE("pushout over the empty object is the disjoint union") {
  FinObj empty;
  FinObj left = obj({"1", "2"});
  FinObj right = obj({"1", "3"});  // overlapping names must stay distinct
  FinMor f(empty, left, {});
  FinMor g(empty, right, {});
  auto po = span2::pushout(f, g);
  CHECK(po.apex.size() == 4);
}

TEST_CASE("pushout apex size matches |C| + |D| minus the merges") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    FinObj b = span2::random_object(rng, 4, "b");
    FinObj c = span2::random_object(rng, 4, "c");
    FinObj d = span2::random_object(rng, 4, "d");
    if ((c.empty() || d.empty()) && !b.empty()) continue;
    FinMor f = span2::random_fn(rng, b, c);
    FinMor g = span2::random_fn(rng, b, d);
    auto po = span2::pushout(f, g);
    CHECK(po.apex.size() == oracle::pushout_size(f, g));
  }
}

TEST_CASE("pushout has the dual universal property, exhaustively") {
  Rng rng(37);
  int exercised = 0;
  for (int i = 0; i < 50; ++i) {
    FinObj b = span2::random_object(rng, 3, "b");
    FinObj c = span2::random_object(rng, 3, "c");
    FinObj d = span2::random_object(rng, 3, "d");
    if ((c.empty() || d.empty()) && !b.empty()) continue;
    FinMor f = span2::random_fn(rng, b, c);
    FinMor g = span2::random_fn(rng, b, d);
    auto po = span2::pushout(f, g);

    FinObj w = span2::random_object(rng, 3, "w");
    if (w.empty() && !po.apex.empty()) continue;
    // Random cocone: factor a random map through the apex.
    if (po.apex.empty() || w.empty()) {
      if (!c.empty() || !d.empty()) continue;
    }
    std::map<Elem, Elem> pick;
    for (const auto& cls : po.apex.elements()) {
      pick.emplace(cls, w.elements()[rng.below(w.size())]);
    }
    FinMor through(po.apex, w, std::move(pick));
    FinMor h = compose(through, po.from_left);
    FinMor k = compose(through, po.from_right);

    FinMor u = span2::pushout_mediate(f, g, h, k);
    auto all = oracle::co_commuting_maps(po.apex, w, po.from_left,
                                         po.from_right, h, k);
    REQUIRE(all.size() == 1);
    CHECK(all.front() == u);
    CHECK(u == through);
    ++exercised;
  }
  CHECK(exercised > 10);
}

TEST_CASE("is_iso and inverse") {
  FinObj a = obj({"a", "b"});
  CHECK(span2::is_iso(identity(a)));
  CHECK(span2::inverse(identity(a)) == identity(a));

  FinObj one = obj({"z"});
  FinMor constant = fn(a, one, {{"a", "z"}, {"b", "z"}});
  CHECK_FALSE(span2::is_iso(constant));
  CHECK_THROWS_AS(span2::inverse(constant), span2::NotInvertible);

  FinMor swap = fn(a, a, {{"a", "b"}, {"b", "a"}});
  CHECK(span2::is_iso(swap));
  CHECK(span2::inverse(swap) == swap);
  CHECK(compose(swap, swap) == identity(a));
}

TEST_CASE("operations are deterministic for equal inputs") {
  FinObj dom_f = obj({"1", "2", "3"});
  FinObj dom_g = obj({"4", "5"});
  FinObj ab = obj({"a", "b"});
  FinMor f = fn(dom_f, ab, {{"1", "a"}, {"2", "a"}, {"3", "b"}});
  FinMor g = fn(dom_g, ab, {{"4", "b"}, {"5", "a"}});
  auto pb1 = span2::pullback(f, g);
  auto pb2 = span2::pullback(f, g);
  CHECK(pb1.apex == pb2.apex);
  CHECK(pb1.to_left == pb2.to_left);
  auto po1 = span2::pushout(fn(obj({"x"}), dom_f, {{"x", "1"}}),
                            fn(obj({"x"}), dom_g, {{"x", "4"}}));
  auto po2 = span2::pushout(fn(obj({"x"}), dom_f, {{"x", "1"}}),
                            fn(obj({"x"}), dom_g, {{"x", "4"}}));
  CHECK(po1.apex == po2.apex);
  CHECK(po1.from_right == po2.from_right);
}
