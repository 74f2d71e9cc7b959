#include "howe/kudla.hpp"

#include <algorithm>

namespace howe {

std::string block_name(const BlockRole& b) {
  switch (b.label) {
    case BlockLabel::G_t_minus_i: return "G_{t-i}";
    case BlockLabel::G_i: return "G_i";
    case BlockLabel::G_n_minus_t: return "G_{n-t}";
    case BlockLabel::G_n_minus_i: return "G_{n-i}";
    case BlockLabel::Gp_i: return "G'_i";
    case BlockLabel::Gp_m_minus_i: return "G'_{m-i}";
    case BlockLabel::Gp_t_minus_i: return "G'_{t-i}";
    case BlockLabel::Gp_m_minus_t: return "G'_{m-t}";
  }
  return "?";
}

std::vector<RankFactor> rank_factors(long long n, long long m) {
  if (n < 0 || m < 0) throw domain_error("rank_factors: negative size");
  std::vector<RankFactor> fs;
  long long top = std::min(n, m);
  for (long long k = 0; k <= top; ++k)
    fs.push_back(RankFactor{n, m, k, {n - k, k}, {m - k, k}});
  return fs;
}

namespace {

void push_block(std::vector<std::pair<BlockRole, Rat>>& blocks, Side side,
                BlockLabel label, long long size, const Rat& exponent) {
  if (size <= 0) return;  // G_0 blocks carry no exponent entry
  blocks.push_back({BlockRole{side, label, size}, exponent});
}

FiltrationFactor factor_left(long long n, long long m, long long t,
                             long long i) {
  FiltrationFactor f;
  f.n = n; f.m = m; f.t = t; f.i = i;
  f.side = Side::left;
  push_block(f.blocks, Side::left, BlockLabel::G_t_minus_i, t - i,
             Rat(2 * m - n + t - i, 2));
  push_block(f.blocks, Side::left, BlockLabel::G_i, i,
             Rat(2 * m - n + 2 * t - i, 2));
  push_block(f.blocks, Side::left, BlockLabel::G_n_minus_t, n - t, Rat(t, 2));
  push_block(f.blocks, Side::right, BlockLabel::Gp_i, i,
             Rat(-m - 2 * t + i, 2));
  push_block(f.blocks, Side::right, BlockLabel::Gp_m_minus_i, m - i,
             Rat(-2 * t + i, 2));
  f.inner_n = n - t;
  f.inner_m = m - i;
  f.carries_rho = i > 0;
  return f;
}

FiltrationFactor factor_right(long long n, long long m, long long t,
                              long long i) {
  FiltrationFactor f;
  f.n = n; f.m = m; f.t = t; f.i = i;
  f.side = Side::right;
  push_block(f.blocks, Side::left, BlockLabel::G_n_minus_i, n - i,
             Rat(2 * t - i, 2));
  push_block(f.blocks, Side::left, BlockLabel::G_i, i, Rat(n + 2 * t - i, 2));
  push_block(f.blocks, Side::right, BlockLabel::Gp_i, i,
             Rat(-2 * n + m - 2 * t + i, 2));
  push_block(f.blocks, Side::right, BlockLabel::Gp_t_minus_i, t - i,
             Rat(m - 2 * n - t + i, 2));
  push_block(f.blocks, Side::right, BlockLabel::Gp_m_minus_t, m - t,
             Rat(-t, 2));
  f.inner_n = n - i;
  f.inner_m = m - t;
  f.carries_rho = i > 0;
  return f;
}

}  // namespace

std::vector<FiltrationFactor> jacquet_factors_left(long long n, long long m,
                                                   long long t) {
  if (n < 0 || m < 0 || t <= 0 || t > n)
    throw domain_error("jacquet_factors_left: requires 0 < t <= n");
  std::vector<FiltrationFactor> fs;
  for (long long i = 0; i <= std::min(t, m); ++i)
    fs.push_back(factor_left(n, m, t, i));
  return fs;
}

std::vector<FiltrationFactor> jacquet_factors_right(long long n, long long m,
                                                    long long t) {
  if (n < 0 || m < 0 || t <= 0 || t > m)
    throw domain_error("jacquet_factors_right: requires 0 < t <= m");
  std::vector<FiltrationFactor> fs;
  for (long long i = 0; i <= std::min(t, n); ++i)
    fs.push_back(factor_right(n, m, t, i));
  return fs;
}

std::vector<Rat> modulus_exponents(const std::vector<long long>& partition) {
  std::vector<Rat> es(partition.size(), Rat(0));
  long long total = 0;
  for (long long nk : partition) total += nk;
  long long before = 0;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    long long after = total - before - partition[j];
    es[j] = Rat(after - before);
    before += partition[j];
  }
  return es;
}

std::vector<std::pair<BlockRole, Rat>> derive_xi(long long n, long long m,
                                                 long long t, long long i,
                                                 Side side) {
  if (side == Side::left) {
    if (t <= 0 || t > n || i < 0 || i > std::min(t, m))
      throw domain_error("derive_xi: index out of range");
    std::vector<Rat> inner = modulus_exponents({t - i, i});       // inside G_t
    std::vector<Rat> outer = modulus_exponents({t, n - t});       // in G_n
    std::vector<Rat> prime = modulus_exponents({i, m - i});       // in G'_m
    Rat half(1, 2);
    // base nu(g_0)^m nu(g')^{-t}, then the three delta^{-1/2} corrections
    Rat e_tmi = Rat(m) - half * inner[0] - half * outer[0];
    Rat e_i = Rat(m) - half * inner[1] - half * outer[0];
    Rat e_nmt = Rat(0) - half * outer[1];
    Rat e_pi = Rat(-t) - half * prime[0];
    Rat e_pmi = Rat(-t) - half * prime[1];
    std::vector<std::pair<BlockRole, Rat>> blocks;
    push_block(blocks, Side::left, BlockLabel::G_t_minus_i, t - i, e_tmi);
    push_block(blocks, Side::left, BlockLabel::G_i, i, e_i);
    push_block(blocks, Side::left, BlockLabel::G_n_minus_t, n - t, e_nmt);
    push_block(blocks, Side::right, BlockLabel::Gp_i, i, e_pi);
    push_block(blocks, Side::right, BlockLabel::Gp_m_minus_i, m - i, e_pmi);
    return blocks;
  }
  if (t <= 0 || t > m || i < 0 || i > std::min(t, n))
    throw domain_error("derive_xi: index out of range");
  std::vector<Rat> inner = modulus_exponents({n - i, i});         // in G_n
  std::vector<Rat> outer = modulus_exponents({t, m - t});         // in G'_m
  std::vector<Rat> prime = modulus_exponents({i, t - i});         // inside G'_t
  Rat half(1, 2);
  // base nu(g)^t nu(g'_0)^{-n}; the outer correction enters with +1/2 since
  // the right Jacquet functor is taken along the lower-triangular parabolic
  Rat e_nmi = Rat(t) - half * inner[0];
  Rat e_i = Rat(t) - half * inner[1];
  Rat e_pi = Rat(-n) + half * outer[0] - half * prime[0];
  Rat e_pti = Rat(-n) + half * outer[0] - half * prime[1];
  Rat e_pmt = Rat(0) + half * outer[1];
  std::vector<std::pair<BlockRole, Rat>> blocks;
  push_block(blocks, Side::left, BlockLabel::G_n_minus_i, n - i, e_nmi);
  push_block(blocks, Side::left, BlockLabel::G_i, i, e_i);
  push_block(blocks, Side::right, BlockLabel::Gp_i, i, e_pi);
  push_block(blocks, Side::right, BlockLabel::Gp_t_minus_i, t - i, e_pti);
  push_block(blocks, Side::right, BlockLabel::Gp_m_minus_t, m - t, e_pmt);
  return blocks;
}

std::set<long long> lima_classifier_left(long long n, long long m, long long r,
                                         long long a, const Segment& chi) {
  if (r != chi.cusp.deg)
    throw domain_error("lima_classifier_left: r must equal deg(chi)");
  if (a < 0 || r * a > n)
    throw domain_error("lima_classifier_left: requires r*a <= n");
  std::set<long long> out;
  out.insert(r * a);
  if (r * a >= 1 && is_unr(chi.cusp) && chi.begin == Rat(2 * m - n + 1, 2))
    out.insert(r * a - 1);
  return out;
}

std::set<long long> lima_classifier_right(long long n, long long m,
                                          long long r, long long a,
                                          long long b, const Segment& chi) {
  if (r != chi.cusp.deg)
    throw domain_error("lima_classifier_right: r must equal deg(chi)");
  if (a < 0 || b < a || r * b > m)
    throw domain_error("lima_classifier_right: requires r*a <= r*b <= m");
  std::set<long long> out;
  out.insert(r * (b - a));
  if (r * (b - a) >= 1 && is_unr(chi.cusp) && chi.begin == Rat(n + 1, 2))
    out.insert(r * (b - a) - 1);
  return out;
}

}  // namespace howe
