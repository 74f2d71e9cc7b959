#include <doctest.h>

#include "helpers.hpp"
#include "howe/kudla.hpp"

using namespace howe;
using testutil::pt;

namespace {

// exponent of the named block, requiring the block to be present
Rat exp_of(const std::vector<std::pair<BlockRole, Rat>>& blocks,
           BlockLabel label) {
  for (const auto& [role, e] : blocks)
    if (role.label == label) return e;
  FAIL("missing block");
  return Rat(0);
}

bool has_block(const std::vector<std::pair<BlockRole, Rat>>& blocks,
               BlockLabel label) {
  for (const auto& [role, e] : blocks)
    if (role.label == label) return true;
  return false;
}

}  // namespace

TEST_CASE("rank_factors") {
  auto fs12 = rank_factors(1, 2);
  REQUIRE(fs12.size() == 2);
  CHECK(fs12[0].left_parabolic == std::pair<long long, long long>{1, 0});
  CHECK(fs12[0].right_parabolic == std::pair<long long, long long>{2, 0});
  CHECK(fs12[1].left_parabolic == std::pair<long long, long long>{0, 1});
  CHECK(fs12[1].right_parabolic == std::pair<long long, long long>{1, 1});

  CHECK(rank_factors(0, 7).size() == 1);
  CHECK(rank_factors(2, 2).size() == 3);
}

TEST_CASE("jacquet_factors_left tables") {
  auto fs = jacquet_factors_left(2, 3, 1);
  REQUIRE(fs.size() == 2);

  // i = 0: nu^{5/2} on G_{t-i}=G_1, nu^{1/2} on G_{n-t}=G_1, nu^{-1} on G'_3
  const auto& f0 = fs[0];
  CHECK_FALSE(has_block(f0.blocks, BlockLabel::G_i));
  CHECK_FALSE(has_block(f0.blocks, BlockLabel::Gp_i));
  CHECK(exp_of(f0.blocks, BlockLabel::G_t_minus_i) == Rat(5, 2));
  CHECK(exp_of(f0.blocks, BlockLabel::G_n_minus_t) == Rat(1, 2));
  CHECK(exp_of(f0.blocks, BlockLabel::Gp_m_minus_i) == Rat(-1));
  CHECK(f0.inner_n == 1);
  CHECK(f0.inner_m == 3);
  CHECK_FALSE(f0.carries_rho);

  // i = 1: nu^{5/2} on G_1, nu^{1/2} on G_1, nu^{-2} on G'_1, nu^{-1/2} on G'_2
  const auto& f1 = fs[1];
  CHECK_FALSE(has_block(f1.blocks, BlockLabel::G_t_minus_i));
  CHECK(exp_of(f1.blocks, BlockLabel::G_i) == Rat(5, 2));
  CHECK(exp_of(f1.blocks, BlockLabel::G_n_minus_t) == Rat(1, 2));
  CHECK(exp_of(f1.blocks, BlockLabel::Gp_i) == Rat(-2));
  CHECK(exp_of(f1.blocks, BlockLabel::Gp_m_minus_i) == Rat(-1, 2));
  CHECK(f1.inner_n == 1);
  CHECK(f1.inner_m == 2);
  CHECK(f1.carries_rho);

  auto fs22 = jacquet_factors_left(2, 2, 1);
  CHECK(exp_of(fs22[1].blocks, BlockLabel::G_i) == Rat(3, 2));
  CHECK(exp_of(fs22[1].blocks, BlockLabel::G_n_minus_t) == Rat(1, 2));
  CHECK(exp_of(fs22[1].blocks, BlockLabel::Gp_i) == Rat(-3, 2));
  CHECK(exp_of(fs22[1].blocks, BlockLabel::Gp_m_minus_i) == Rat(-1, 2));

  CHECK_THROWS_AS(jacquet_factors_left(2, 3, 0), domain_error);
  CHECK_THROWS_AS(jacquet_factors_left(2, 3, 3), domain_error);
}

TEST_CASE("jacquet_factors_right tables") {
  auto fs = jacquet_factors_right(2, 3, 1);
  REQUIRE(fs.size() == 2);

  const auto& f0 = fs[0];
  CHECK(exp_of(f0.blocks, BlockLabel::G_n_minus_i) == Rat(1));
  CHECK(exp_of(f0.blocks, BlockLabel::Gp_t_minus_i) == Rat(-1));
  CHECK(exp_of(f0.blocks, BlockLabel::Gp_m_minus_t) == Rat(-1, 2));
  CHECK(f0.inner_n == 2);
  CHECK(f0.inner_m == 2);

  const auto& f1 = fs[1];
  CHECK(exp_of(f1.blocks, BlockLabel::G_n_minus_i) == Rat(1, 2));
  CHECK(exp_of(f1.blocks, BlockLabel::G_i) == Rat(3, 2));
  CHECK(exp_of(f1.blocks, BlockLabel::Gp_i) == Rat(-1));
  CHECK_FALSE(has_block(f1.blocks, BlockLabel::Gp_t_minus_i));
  CHECK(exp_of(f1.blocks, BlockLabel::Gp_m_minus_t) == Rat(-1, 2));
  CHECK(f1.inner_n == 1);
  CHECK(f1.inner_m == 2);

  auto fs11 = jacquet_factors_right(1, 1, 1);
  REQUIRE(fs11.size() == 2);
  const auto& g1 = fs11[1];
  CHECK_FALSE(has_block(g1.blocks, BlockLabel::G_n_minus_i));
  CHECK(exp_of(g1.blocks, BlockLabel::G_i) == Rat(1));
  CHECK(exp_of(g1.blocks, BlockLabel::Gp_i) == Rat(-1));
  CHECK_FALSE(has_block(g1.blocks, BlockLabel::Gp_m_minus_t));

  // factor counts: left min(t,m)+1, right min(t,n)+1
  CHECK(jacquet_factors_left(4, 2, 3).size() == 3);
  CHECK(jacquet_factors_right(2, 4, 3).size() == 3);
}

TEST_CASE("modulus_exponents") {
  CHECK(modulus_exponents({2, 1}) == std::vector<Rat>{Rat(1), Rat(-2)});
  CHECK(modulus_exponents({1, 1, 1}) ==
        std::vector<Rat>{Rat(2), Rat(0), Rat(-2)});
  CHECK(modulus_exponents({5}) == std::vector<Rat>{Rat(0)});
}

TEST_CASE("derive_xi reproduces the stored tables") {
  auto stored = jacquet_factors_left(2, 3, 1)[1].blocks;
  auto derived = derive_xi(2, 3, 1, 1, Side::left);
  REQUIRE(stored.size() == derived.size());
  for (std::size_t k = 0; k < stored.size(); ++k)
    CHECK(stored[k].second == derived[k].second);

  // G_{n-t} always carries t/2
  for (long long n = 1; n <= 4; ++n)
    for (long long m = n; m <= 5; ++m)
      for (long long t = 1; t < n; ++t)
        for (long long i = 0; i <= std::min(t, m); ++i)
          CHECK(exp_of(derive_xi(n, m, t, i, Side::left),
                       BlockLabel::G_n_minus_t) == Rat(t, 2));

  // i = 0 on the left: the full right block carries -t
  CHECK(exp_of(derive_xi(3, 4, 2, 0, Side::left), BlockLabel::Gp_m_minus_i) ==
        Rat(-2));
}

TEST_CASE("lima_classifier_left") {
  CHECK(lima_classifier_left(3, 3, 1, 1, pt(Rat(2))) ==
        std::set<long long>{1, 0});
  CHECK(lima_classifier_left(3, 3, 1, 1, pt(Rat(0))) ==
        std::set<long long>{1});
  const CuspLabel* rho = testutil::labels().find("rho");
  CHECK(lima_classifier_left(4, 4, 2, 1, cusp_point(*rho, Rat(5, 2))) ==
        std::set<long long>{2});
  CHECK_THROWS_AS(lima_classifier_left(3, 3, 2, 1, pt(Rat(0))), domain_error);
}

TEST_CASE("lima_classifier_right") {
  CHECK(lima_classifier_right(2, 4, 1, 1, 2, pt(Rat(3, 2))) ==
        std::set<long long>{1, 0});
  CHECK(lima_classifier_right(2, 4, 1, 1, 2, pt(Rat(0))) ==
        std::set<long long>{1});
  CHECK(lima_classifier_right(2, 4, 1, 1, 1, pt(Rat(0))) ==
        std::set<long long>{0});
}
