#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "howe/enumerate.hpp"
#include "howe/langlands.hpp"

using namespace howe;
using testutil::P;
using testutil::pt;

TEST_CASE("alpha_order") {
  auto seq = alpha_order(P("{[-1..-1],[0..0],[1..1]}"));
  REQUIRE(seq.size() == 3);
  CHECK(seq[0].begin == Rat(-1));
  CHECK(seq[1].begin == Rat(0));
  CHECK(seq[2].begin == Rat(1));

  CHECK(alpha_order(P("{[-1/2..1/2]}")).size() == 1);

  auto two = alpha_order(P("{[0..1],[-2..-1]}"));
  CHECK(two[0] == make_segment(Rat(-2), Rat(-1)));
  CHECK(two[1] == make_segment(Rat(0), Rat(1)));
}

TEST_CASE("left_soc") {
  CHECK(left_soc(pt(Rat(1)), P("{[0..0]}")) == P("{[0..1]}"));
  CHECK(left_soc(pt(Rat(1)), P("{[5..5]}")) == P("{[1..1],[5..5]}"));
  CHECK(left_soc(pt(Rat(0)), P("{[1..2]}")) == P("{[0..0],[1..2]}"));
}

TEST_CASE("right_soc") {
  CHECK(right_soc(P("{[0..0]}"), pt(Rat(-1))) == P("{[-1..0]}"));
  CHECK(right_soc(P("{[5..5]}"), pt(Rat(0))) == P("{[0..0],[5..5]}"));
  // all begins <= x forces the adjoin branch
  CHECK(right_soc(P("{[-3..-2],[-5..-4]}"), pt(Rat(-1))) ==
        P("{[-1..-1],[-3..-2],[-5..-4]}"));
}

TEST_CASE("left_strip") {
  auto [a1, r1] = left_strip(pt(Rat(1)), P("{[0..1]}"));
  CHECK(a1 == 1);
  CHECK(r1 == P("{[0..0]}"));

  auto [a2, r2] = left_strip(pt(Rat(1)), P("{[0..1],[-1..1]}"));
  CHECK(a2 == 2);
  CHECK(r2 == P("{[0..0],[-1..0]}"));

  auto [a3, r3] = left_strip(pt(Rat(7)), P("{[0..1]}"));
  CHECK(a3 == 0);
  CHECK(r3 == P("{[0..1]}"));
}

TEST_CASE("right_strip mirrors left_strip") {
  auto [a, r] = right_strip(P("{[-1..0]}"), pt(Rat(-1)));
  CHECK(a == 1);
  CHECK(r == P("{[0..0]}"));
}

TEST_CASE("linked singletons block the upper strip point") {
  // The data of a twisted trivial representation: only the low end strips.
  Multisegment m = P("{[0..0],[1..1]}");
  CHECK(left_strip_count(m, pt(Rat(1))) == 0);
  CHECK(left_strip_count(m, pt(Rat(0))) == 1);
  auto pts = left_strippable_points(m);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == pt(Rat(0)));
  // A spare copy frees the point again.
  CHECK(left_strip_count(P("{[0..0],[1..1],[1..1]}"), pt(Rat(1))) == 1);
  // Nesting does not block.
  CHECK(left_strip_count(P("{[1..1],[0..2]}"), pt(Rat(2))) == 1);
  CHECK(left_strip_count(P("{[1..1],[0..2]}"), pt(Rat(1))) == 1);
}

TEST_CASE("trivial_rep_data") {
  CHECK(trivial_rep_data(0) == P("{}"));
  CHECK(trivial_rep_data(1) == P("{[0..0]}"));
  CHECK(trivial_rep_data(3) == P("{[-1..-1],[0..0],[1..1]}"));
  for (long long k = 0; k <= 6; ++k) {
    CHECK(dual_multisegment(trivial_rep_data(k)) == trivial_rep_data(k));
    CHECK(trivial_rep_data(k).group_size() == k);
  }
}

TEST_CASE("soc and strip are inverse on the touched coordinate") {
  auto pool = segment_pool(Rat(2), 3, {unr_label()});
  for (const Multisegment& m : enumerate_multisegments(pool, 3)) {
    for (const Segment& chi : left_strippable_points(m)) {
      auto [a, rest] = left_strip(chi, m);
      REQUIRE(a >= 1);
      CHECK(left_strip_count(rest, chi) == 0);
      Multisegment rebuilt = rest;
      for (long long i = 0; i < a; ++i) rebuilt = left_soc(chi, rebuilt);
      CHECK(rebuilt == m);
    }
    // socle raises the strip count by exactly one, anywhere
    for (Rat x = Rat(-3); x <= Rat(3); x = x + Rat(1, 2)) {
      Segment chi = pt(x);
      Multisegment socd = left_soc(chi, m);
      CHECK(socd.group_size() == m.group_size() + 1);
      CHECK(left_strip_count(socd, chi) == left_strip_count(m, chi) + 1);
      Multisegment rsocd = right_soc(m, chi);
      CHECK(rsocd.group_size() == m.group_size() + 1);
      CHECK(right_strip_count(rsocd, chi) == right_strip_count(m, chi) + 1);
    }
  }
}

TEST_CASE("strippable points satisfy the ranged necessary conditions") {
  auto pool = segment_pool(Rat(2), 3, {unr_label()});
  for (const Multisegment& m : enumerate_multisegments(pool, 3)) {
    for (const Segment& chi : left_strippable_points(m))
      CHECK(jac_left_necessary(m, chi));
    for (const Segment& chi : right_strippable_points(m))
      CHECK(jac_right_necessary(m, chi));
  }
}

TEST_CASE("alpha order reverses ranged order on unramified singletons") {
  auto pool = segment_pool(Rat(2), 1, {unr_label()});
  std::vector<Segment> singles;
  for (const Segment& s : pool)
    if (seg_length(s) == 1) singles.push_back(s);
  for (const Multisegment& m : enumerate_multisegments(singles, 3)) {
    std::vector<Segment> rev = alpha_order(m);
    std::reverse(rev.begin(), rev.end());
    CHECK(rev == ranged_sort(m));
  }
}

TEST_CASE("soc adds one label degree to the group size") {
  const CuspLabel* rho = testutil::labels().find("rho");
  Multisegment m = P("{[1/2..1/2]@rho,[0..0]}");
  Segment chi = cusp_point(*rho, Rat(3, 2));
  CHECK(left_soc(chi, m).group_size() == m.group_size() + rho->deg);
  CHECK(left_soc(chi, m) == P("{[1/2..3/2]@rho,[0..0]}"));
}
