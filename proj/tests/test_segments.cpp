#include <doctest.h>

#include "helpers.hpp"
#include "howe/enumerate.hpp"
#include "howe/segments.hpp"

using namespace howe;
using testutil::P;
using testutil::pt;

TEST_CASE("rat arithmetic is exact and normalized") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK((Rat(1, 2) + Rat(1, 2)) == Rat(1));
  CHECK((Rat(1) - Rat(3, 2)) == Rat(-1, 2));
  CHECK(Rat(5).half() == Rat(5, 2));
  CHECK(Rat(-7, 2) < Rat(-3));
  CHECK(Rat(0, 5).str() == "0");
  CHECK(Rat(-3, 2).str() == "-3/2");
  CHECK_THROWS_AS(Rat(1, 0), domain_error);
}

TEST_CASE("dual_segment") {
  CHECK(dual_segment(make_segment(Rat(0), Rat(2))) ==
        make_segment(Rat(-2), Rat(0)));
  CHECK(dual_segment(make_segment(Rat(0), Rat(0))) ==
        make_segment(Rat(0), Rat(0)));
  const CuspLabel* rho = testutil::labels().find("rho");
  REQUIRE(rho != nullptr);
  Segment s = make_segment(*rho, Rat(1, 2), Rat(3, 2));
  Segment d = dual_segment(s);
  CHECK(d.cusp.name == "rho*");
  CHECK(d.begin == Rat(-3, 2));
  CHECK(d.end == Rat(-1, 2));
  CHECK(dual_segment(d) == s);
}

TEST_CASE("twist_segment") {
  CHECK(twist_segment(make_segment(Rat(0), Rat(1)), Rat(1, 2)) ==
        make_segment(Rat(1, 2), Rat(3, 2)));
  CHECK(twist_segment(make_segment(Rat(-1), Rat(-1)), Rat(-1, 2)) ==
        make_segment(Rat(-3, 2), Rat(-3, 2)));
}

TEST_CASE("segment length invariant") {
  CHECK_THROWS_AS(make_segment(Rat(0), Rat(1, 2)), domain_error);
  CHECK_THROWS_AS(make_segment(Rat(1), Rat(0)), domain_error);
  CHECK(seg_length(make_segment(Rat(-1), Rat(3))) == 5);
  const CuspLabel* rho = testutil::labels().find("rho");
  CHECK(seg_group_size(make_segment(*rho, Rat(1, 2), Rat(3, 2))) == 4);
}

TEST_CASE("ranged_sort") {
  auto seq = ranged_sort(P("{[0..1],[2..2],[-1..3]}"));
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == make_segment(Rat(2), Rat(2)));
  CHECK(seq[1] == make_segment(Rat(0), Rat(1)));
  CHECK(seq[2] == make_segment(Rat(-1), Rat(3)));

  auto tie = ranged_sort(P("{[0..1],[0..3]}"));
  CHECK(tie[0] == make_segment(Rat(0), Rat(3)));
  CHECK(tie[1] == make_segment(Rat(0), Rat(1)));

  auto single = ranged_sort(P("{[5..5]}"));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == make_segment(Rat(5), Rat(5)));
}

TEST_CASE("group_size") {
  CHECK(P("{}").group_size() == 0);
  CHECK(P("{[0..2]}").group_size() == 3);
  CHECK(P("{[1/2..1/2]@rho,[0..1]}").group_size() == 4);
}

TEST_CASE("jac_left_necessary") {
  Multisegment m = P("{[0..1],[-1..3]}");
  CHECK_FALSE(jac_left_necessary(m, pt(Rat(2))));
  CHECK(jac_left_necessary(m, pt(Rat(3))));
  CHECK(jac_left_necessary(P("{[0..0]}"), pt(Rat(0))));
  // absent cusp line
  const CuspLabel* rho = testutil::labels().find("rho");
  CHECK_FALSE(jac_left_necessary(m, cusp_point(*rho, Rat(3))));
}

TEST_CASE("jac_right_necessary") {
  Multisegment m = P("{[0..1],[-1..3]}");
  CHECK_FALSE(jac_right_necessary(m, pt(Rat(1))));
  CHECK(jac_right_necessary(m, pt(Rat(-1))));
  CHECK(jac_right_necessary(P("{[0..0]}"), pt(Rat(0))));
}

TEST_CASE("canonical order properties over an enumeration") {
  auto pool = segment_pool(Rat(1), 3, {unr_label()});
  for (const Multisegment& m : enumerate_multisegments(pool, 3)) {
    // begins non-increasing, resorting idempotent
    auto seq = ranged_sort(m);
    for (std::size_t i = 1; i < seq.size(); ++i)
      CHECK(seq[i].begin <= seq[i - 1].begin);
    CHECK(Multisegment(seq) == m);
    // dual involution and size conservation, twist equivariance
    CHECK(dual_multisegment(dual_multisegment(m)) == m);
    CHECK(dual_multisegment(m).group_size() == m.group_size());
    Multisegment t = twist_multisegment(m, Rat(3, 2));
    CHECK(t.group_size() == m.group_size());
    CHECK(twist_multisegment(t, Rat(-3, 2)) == m);
  }
}
