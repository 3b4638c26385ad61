#include "doctest.h"
#include "helpers.hpp"
#include "span2/generate.hpp"
#include "span2/json_io.hpp"

using namespace helpers;
namespace io = span2::io;
using span2::Cospan;
using span2::Elem;
using span2::FinMor;
using span2::FinObj;
using span2::FinSetCat;
using span2::FinSpan;
using span2::FinTwoCell;
using span2::Rng;

TEST_CASE("element encodings round-trip") {
  std::vector<Elem> pool = {
      Elem::atom("a"),
      Elem::pair(Elem::atom("a"), Elem::atom("b")),
      Elem::tuple({{"0", Elem::atom("x")},
                   {"1", Elem::pair(Elem::atom("y"), Elem::atom("z"))}}),
      Elem::class_rep(Elem::tuple({{"inl", Elem::atom("1")}})),
  };
  for (const auto& e : pool) {
    CHECK(io::elem_from_json(io::to_json(e)) == e);
  }
  CHECK(io::to_json(Elem::atom("a")) == io::json("a"));
  CHECK_THROWS_AS(io::elem_from_json(io::json::object()), span2::InvalidValue);
  CHECK_THROWS_AS(io::elem_from_json(io::json{{"pair", {"a"}}}),
                  span2::InvalidValue);
}

TEST_CASE("object encoding is sorted and keeps labels") {
  FinObj labeled_obj = labeled({"b", "a"}, "A");
  io::json j = io::to_json(labeled_obj);
  CHECK(j.at("elements") == io::json::array({"a", "b"}));
  CHECK(j.at("label") == "A");
  FinObj back = io::obj_from_json(j);
  CHECK(back == labeled_obj);
  CHECK(back.label() == std::optional<std::string>("A"));

  io::json unlabeled = io::to_json(obj({"x"}));
  CHECK_FALSE(unlabeled.contains("label"));
}

TEST_CASE("morphism encoding: sorted table, label resolution, totality") {
  FinObj a = labeled({"1", "2"}, "A");
  FinObj b = labeled({"x"}, "B");
  FinMor m = fn(a, b, {{"2", "x"}, {"1", "x"}});
  io::json j = io::to_json(m);
  CHECK(j.at("table") ==
        io::json::array({io::json::array({"1", "x"}),
                         io::json::array({"2", "x"})}));
  CHECK(io::mor_from_json(j) == m);

  io::json with_labels = {
      {"dom", "A"}, {"cod", "B"},
      {"table", io::json::array({io::json::array({"1", "x"}),
                                 io::json::array({"2", "x"})})}};
  CHECK(io::mor_from_json(with_labels, {{"A", a}, {"B", b}}) == m);
  CHECK_THROWS_AS(io::mor_from_json(with_labels, {{"A", a}}),
                  span2::InvalidValue);

  io::json partial = j;
  partial["table"].erase(0);
  CHECK_THROWS_WITH_AS(io::mor_from_json(partial),
                       doctest::Contains("not total"), span2::InvalidValue);
}

TEST_CASE("span round-trip, including leg references by label") {
  io::json j = {
      {"left_foot", {{"elements", {"l"}}, {"label", "A"}}},
      {"right_foot", {{"elements", {"r"}}, {"label", "B"}}},
      {"apex", {{"elements", {"s0", "s1"}}, {"label", "S"}}},
      {"left_leg",
       {{"dom", "S"},
        {"cod", "A"},
        {"table", io::json::array({io::json::array({"s0", "l"}),
                                   io::json::array({"s1", "l"})})}}},
      {"right_leg",
       {{"dom", "S"},
        {"cod", "B"},
        {"table", io::json::array({io::json::array({"s0", "r"}),
                                   io::json::array({"s1", "r"})})}}},
  };
  FinSpan s = io::span_from_json(j);
  CHECK(s.apex.size() == 2);
  FinSpan back = io::span_from_json(io::to_json(s));
  CHECK(back == s);
}

TEST_CASE("two-cell round-trip recomputes and checks the signature") {
  Rng rng(3);
  FinObj a = obj({"a0", "a1"});
  FinObj b = obj({"b0"});
  FinSpan s = span2::random_span<FinSetCat>(rng, a, b, 3, "s");
  FinSpan t = span2::random_span<FinSetCat>(rng, a, b, 3, "t");
  FinTwoCell cell = span2::random_two_cell<FinSetCat>(rng, s, t, 3, "x");

  io::json j = io::to_json(cell);
  FinTwoCell back = io::two_cell_from_json(j);
  CHECK(span2::two_cells_equal(back, cell));

  if (!cell.signature().empty()) {
    io::json corrupted = j;
    corrupted["signature"][0] =
        io::json::array({"nonsense", "entry"});
    CHECK_THROWS_WITH_AS(io::two_cell_from_json(corrupted),
                         doctest::Contains("signature"), span2::InvalidValue);
  }
}

TEST_CASE("value detection: spans, cospans, the ambiguous identity") {
  FinObj a = labeled({"p"}, "A");
  FinObj w = labeled({"e"}, "W");
  io::json cospan_doc = {
      {"left_foot", io::to_json(a)},
      {"right_foot", io::to_json(a)},
      {"apex", io::to_json(w)},
      {"left_leg",
       {{"dom", "A"},
        {"cod", "W"},
        {"table", io::json::array({io::json::array({"p", "e"})})}}},
      {"right_leg",
       {{"dom", "A"},
        {"cod", "W"},
        {"table", io::json::array({io::json::array({"p", "e"})})}}},
  };
  io::Value v = io::value_from_json(cospan_doc);
  CHECK(std::holds_alternative<Cospan>(v));

  // Identity data parses as a span unless tagged otherwise.
  FinSpan id_span = span2::identity_span<FinSetCat>(a);
  io::Value ambiguous = io::value_from_json(io::to_json(id_span));
  CHECK(std::holds_alternative<FinSpan>(ambiguous));
  io::json tagged = io::to_json(id_span);
  tagged["kind"] = "cospan";
  CHECK(std::holds_alternative<Cospan>(io::value_from_json(tagged)));

  // Emitted cospans carry the tag, so they round-trip as cospans.
  io::Value back = io::value_from_json(io::to_json(v));
  CHECK(std::holds_alternative<Cospan>(back));
}

TEST_CASE("compose_values dispatches by kind and rejects mixtures") {
  FinObj a = obj({"a"});
  FinSpan id_span = span2::identity_span<FinSetCat>(a);
  Cospan id_cospan = span2::identity_cospan(a);
  io::Value s{id_span};
  io::Value c{id_cospan};
  CHECK(std::holds_alternative<FinSpan>(io::compose_values(s, s)));
  CHECK(std::holds_alternative<Cospan>(io::compose_values(c, c)));
  CHECK_THROWS_AS(io::compose_values(s, c), span2::NotComposable);

  FinTwoCell cell = span2::id_two_cell(id_span);
  io::Value x{cell};
  io::Value composed = io::compose_values(x, x);
  CHECK(std::holds_alternative<FinTwoCell>(composed));
  CHECK(span2::two_cells_equal(std::get<FinTwoCell>(composed), cell));
}

TEST_CASE("diagram parsing and limit serialization") {
  io::json j = {
      {"nodes",
       {{"X", {{"elements", {"x0", "x1"}}}},
        {"T", {{"elements", {"t"}}}}}},
      {"edges",
       io::json::array(
           {{{"label", "f"},
             {"src", "X"},
             {"dst", "T"},
             {"mor",
              {{"dom", "X"},
               {"cod", "T"},
               {"table", io::json::array({io::json::array({"x0", "t"}),
                                          io::json::array({"x1", "t"})})}}}}})},
  };
  span2::Diagram d = io::diagram_from_json(j);
  span2::LimitResult lim = span2::limit(d);
  io::json out = io::to_json(lim);
  CHECK(out.at("apex").at("elements").size() == 2);
  CHECK(out.at("projections").contains("X"));
  CHECK(out.at("projections").contains("T"));

  io::json dangling = j;
  dangling["edges"][0]["dst"] = "missing";
  CHECK_THROWS_AS(io::diagram_from_json(dangling), span2::MalformedDiagram);
}

TEST_CASE("report serialization carries the full schema") {
  auto reports = span2::verify_bicategory(5, 1, 1);
  io::json j = io::reports_to_json(reports);
  REQUIRE(j.size() == 8);
  for (const auto& r : j) {
    CHECK(r.contains("law"));
    CHECK(r.contains("seed"));
    CHECK(r.contains("trial"));
    CHECK(r.contains("passed"));
    CHECK(r.contains("evidence"));
  }
}

TEST_CASE("serialization is byte-stable") {
  Rng rng(9);
  FinObj a = span2::random_object(rng, 4, "a");
  FinObj b = span2::random_object(rng, 4, "b");
  FinSpan s = span2::random_span<FinSetCat>(rng, a, b, 4, "s");
  std::string once = io::to_json(s).dump(2);
  std::string twice = io::to_json(io::span_from_json(io::to_json(s))).dump(2);
  CHECK(once == twice);
}
