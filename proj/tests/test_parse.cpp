#include <doctest.h>

#include "helpers.hpp"
#include "howe/enumerate.hpp"
#include "howe/parse.hpp"

using namespace howe;
using testutil::P;

TEST_CASE("grammar basics") {
  Multisegment m = P("{[0..1], [1/2]}");
  REQUIRE(m.count() == 2);
  CHECK(m.entries()[0] == make_segment(Rat(1, 2), Rat(1, 2)));
  CHECK(m.entries()[1] == make_segment(Rat(0), Rat(1)));

  Multisegment r = P("{[1/2..3/2]@rho}");
  REQUIRE(r.count() == 1);
  CHECK(r.entries()[0].cusp.name == "rho");
  CHECK(r.group_size() == 4);

  CHECK(P("{}") == Multisegment());
  CHECK(P("  {  [ -1 .. 0 ] }  ") == P("{[-1..0]}"));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(P("{[0..1/2]}"), parse_error);
  CHECK_THROWS_AS(P("{[0..1]"), parse_error);
  CHECK_THROWS_AS(P("{[a..1]}"), parse_error);
  CHECK_THROWS_AS(P("{[0..1]}x"), parse_error);
  CHECK_THROWS_WITH_AS(P("{[0..1]@sigma8}"), doctest::Contains("unknown label"),
                       parse_error);
  try {
    P("{[0..1/2]}");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.pos == 1);  // points at the offending segment
  }
}

TEST_CASE("render") {
  CHECK(render_text(P("{}")) == "{}");
  CHECK(render_text(P("{[-1..0]}")) == "{[-1..0]}");
  CHECK(render_text(P("{[1/2],[0..1]}")) == "{[1/2],[0..1]}");
  CHECK(render_text(P("{[0..0]@rho}")) == "{[0]@rho}");
}

TEST_CASE("parse after render is the identity") {
  auto pool = segment_pool(Rat(2), 3,
                           {unr_label(), *testutil::labels().find("rho")});
  for (const Multisegment& m : enumerate_multisegments(pool, 3))
    CHECK(P(render_text(m)) == m);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/2") == Rat(3, 2));
  CHECK(parse_rat("-3/2") == Rat(-3, 2));
  CHECK(parse_rat("4/2") == Rat(2));
  CHECK(parse_rat("0") == Rat(0));
  CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rat("x"), parse_error);
  CHECK_THROWS_AS(parse_rat("1.5"), parse_error);
}

TEST_CASE("label table") {
  LabelTable t;
  CHECK(t.find("1") != nullptr);
  t.declare("rho", 2, "rho*");
  REQUIRE(t.find("rho*") != nullptr);
  CHECK(t.find("rho*")->dual_name == "rho");
  CHECK(t.find("rho*")->deg == 2);
  CHECK_THROWS_AS(t.declare("rho", 3, "rho*"), domain_error);
  CHECK_THROWS_AS(t.declare("bad", 0, "bad"), domain_error);
}
