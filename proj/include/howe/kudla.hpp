#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "howe/segments.hpp"

namespace howe {

enum class Side { left, right };

// Named diagonal blocks of the inducing subgroups appearing in the two
// Jacquet filtrations. Sizes are determined by (n, m, t, i) and the role.
enum class BlockLabel {
  G_t_minus_i,   // left series, size t - i
  G_i,           // both series, size i
  G_n_minus_t,   // left series, size n - t
  G_n_minus_i,   // right series, size n - i
  Gp_i,          // both series, size i
  Gp_m_minus_i,  // left series, size m - i
  Gp_t_minus_i,  // right series, size t - i
  Gp_m_minus_t   // right series, size m - t
};

struct BlockRole {
  Side side;
  BlockLabel label;
  long long size;
};

std::string block_name(const BlockRole& b);

// Descriptor of one composition factor of a one-sided Jacquet module of
// sigma_{n,m}: the block exponent table, the smaller sigma sub-instance it
// induces from, and whether the regular G_i x G'_i factor is present.
struct FiltrationFactor {
  long long n = 0, m = 0, t = 0, i = 0;
  Side side = Side::left;
  std::vector<std::pair<BlockRole, Rat>> blocks;  // zero-size blocks omitted
  long long inner_n = 0, inner_m = 0;
  bool carries_rho = false;
};

// One piece of the rank filtration of sigma_{n,m}: induced from the
// lower-triangular (n-k, k) parabolic on the left and the upper-triangular
// (m-k, k) parabolic on the right, with the regular G_k x G'_k kernel.
struct RankFactor {
  long long n = 0, m = 0, k = 0;
  std::pair<long long, long long> left_parabolic;   // lower-triangular
  std::pair<long long, long long> right_parabolic;  // upper-triangular
};

std::vector<RankFactor> rank_factors(long long n, long long m);

// Factors tau_i (i = 0..min(t,m)) of the left Jacquet module along (t, n-t),
// and tau'-bar_i (i = 0..min(t,n)) of the right Jacquet module along
// (t, m-t). Throws domain_error on out-of-range t.
std::vector<FiltrationFactor> jacquet_factors_left(long long n, long long m,
                                                   long long t);
std::vector<FiltrationFactor> jacquet_factors_right(long long n, long long m,
                                                    long long t);

// Exponent of the modulus character of the standard block-upper-triangular
// parabolic on each diagonal block: sum of later block sizes minus sum of
// earlier ones.
std::vector<Rat> modulus_exponents(const std::vector<long long>& partition);

// Recomputes the exponent table of factor (n, m, t, i) from the base
// character and the three half-modulus corrections of the normalization
// steps. Contract: equals the table stored by jacquet_factors_left/right.
std::vector<std::pair<BlockRole, Rat>> derive_xi(long long n, long long m,
                                                 long long t, long long i,
                                                 Side side);

// Which factor indices i can carry a quotient whose stripped block is a
// product of copies of chi: always the top index; one lower only for the
// single exceptional unramified point.
std::set<long long> lima_classifier_left(long long n, long long m, long long r,
                                         long long a, const Segment& chi);
std::set<long long> lima_classifier_right(long long n, long long m,
                                          long long r, long long a,
                                          long long b, const Segment& chi);

}  // namespace howe
