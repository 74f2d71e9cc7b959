#include "howe/langlands.hpp"

#include <algorithm>
#include <optional>

namespace howe {

Rat alpha(const Segment& s) { return -(s.begin + s.end).half(); }

std::vector<Segment> alpha_order(const Multisegment& m) {
  std::vector<Segment> es = m.entries();
  std::stable_sort(es.begin(), es.end(), [](const Segment& a, const Segment& b) {
    Rat aa = alpha(a), ab = alpha(b);
    if (aa != ab) return ab < aa;
    return canonical_less(a, b);
  });
  return es;
}

namespace {

// Indices of entries on chi's line ending at x (the strip candidates, D) and
// at x-1 (the potential absorbers, Dp). Entries come back in canonical order,
// i.e. begins descending.
struct EndClasses {
  std::vector<std::size_t> enders;      // e == x
  std::vector<std::size_t> absorbers;   // e == x-1
};

EndClasses classify_ends(const Multisegment& m, const CuspLabel& cusp,
                         const Rat& x) {
  EndClasses c;
  const std::vector<Segment>& es = m.entries();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!(es[i].cusp == cusp)) continue;
    if (es[i].end == x) c.enders.push_back(i);
    else if (es[i].end == x - Rat(1)) c.absorbers.push_back(i);
  }
  return c;
}

// Maximum matching between enders and absorbers, edge iff
// begin(absorber) < begin(ender). Neighborhoods are nested in begin(ender),
// so a greedy pass over enders by begin ascending is maximal. Returns the
// matched flags for the enders (in the order of c.enders).
std::vector<bool> match_enders(const Multisegment& m, const EndClasses& c) {
  const std::vector<Segment>& es = m.entries();
  std::vector<std::size_t> byb = c.enders;  // enders, begin ascending
  std::sort(byb.begin(), byb.end(), [&](std::size_t i, std::size_t j) {
    return es[i].begin < es[j].begin;
  });
  std::vector<Rat> pool;  // absorber begins, ascending
  for (std::size_t i : c.absorbers) pool.push_back(es[i].begin);
  std::sort(pool.begin(), pool.end());
  std::vector<bool> used(pool.size(), false);
  std::vector<bool> matched_by_index(es.size(), false);
  for (std::size_t i : byb) {
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (!used[p] && pool[p] < es[i].begin) {
        used[p] = true;
        matched_by_index[i] = true;
        break;
      }
    }
  }
  std::vector<bool> matched;
  matched.reserve(c.enders.size());
  for (std::size_t i : c.enders) matched.push_back(matched_by_index[i]);
  return matched;
}

long long count_at(const Multisegment& m, const CuspLabel& cusp, const Rat& x) {
  EndClasses c = classify_ends(m, cusp, x);
  std::vector<bool> matched = match_enders(m, c);
  long long unmatched = 0;
  for (bool f : matched)
    if (!f) ++unmatched;
  return unmatched;
}

// Shortens the largest-begin unmatched ender by one step (deleting it when it
// was a singleton). Returns nothing when the count is zero.
std::optional<Multisegment> strip_once(const Multisegment& m,
                                       const CuspLabel& cusp, const Rat& x) {
  EndClasses c = classify_ends(m, cusp, x);
  std::vector<bool> matched = match_enders(m, c);
  // c.enders is in canonical order, so begins are descending.
  for (std::size_t k = 0; k < c.enders.size(); ++k) {
    if (matched[k]) continue;
    std::size_t idx = c.enders[k];
    const Segment& s = m.entries()[idx];
    if (s.begin == s.end) return m.without(idx);
    return m.replaced(idx, Segment{s.cusp, s.begin, s.end - Rat(1)});
  }
  return std::nullopt;
}

}  // namespace

long long left_strip_count(const Multisegment& m, const Segment& chi) {
  return count_at(m, chi.cusp, chi.begin);
}

long long right_strip_count(const Multisegment& m, const Segment& chi) {
  return left_strip_count(dual_multisegment(m), dual_segment(chi));
}

std::pair<long long, Multisegment> left_strip(const Segment& chi,
                                              const Multisegment& m) {
  long long a = 0;
  Multisegment rest = m;
  while (auto next = strip_once(rest, chi.cusp, chi.begin)) {
    rest = *next;
    ++a;
  }
  return {a, rest};
}

std::pair<long long, Multisegment> right_strip(const Multisegment& m,
                                               const Segment& chi) {
  auto [a, rest] = left_strip(dual_segment(chi), dual_multisegment(m));
  return {a, dual_multisegment(rest)};
}

std::vector<Segment> left_strippable_points(const Multisegment& m) {
  std::vector<Segment> pts;
  for (const Segment& s : m.entries()) {
    Segment pt = cusp_point(s.cusp, s.end);
    if (std::find(pts.begin(), pts.end(), pt) != pts.end()) continue;
    if (count_at(m, s.cusp, s.end) > 0) pts.push_back(pt);
  }
  std::sort(pts.begin(), pts.end(), canonical_less);
  return pts;
}

std::vector<Segment> right_strippable_points(const Multisegment& m) {
  std::vector<Segment> dual_pts = left_strippable_points(dual_multisegment(m));
  std::vector<Segment> pts;
  pts.reserve(dual_pts.size());
  for (const Segment& p : dual_pts) pts.push_back(dual_segment(p));
  std::sort(pts.begin(), pts.end(), canonical_less);
  return pts;
}

Multisegment left_soc(const Segment& chi, const Multisegment& m) {
  const Rat x = chi.begin;
  long long before = count_at(m, chi.cusp, x);

  // Extension candidates: entries on the line ending at x-1, begin ascending.
  std::vector<std::size_t> cands;
  const std::vector<Segment>& es = m.entries();
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i].cusp == chi.cusp && es[i].end == x - Rat(1)) cands.push_back(i);
  std::sort(cands.begin(), cands.end(), [&](std::size_t i, std::size_t j) {
    return es[i].begin < es[j].begin;
  });

  std::optional<Multisegment> fallback;
  for (std::size_t i : cands) {
    Multisegment ext = m.replaced(i, Segment{es[i].cusp, es[i].begin, x});
    if (!fallback) fallback = ext;
    if (count_at(ext, chi.cusp, x) == before + 1) return ext;
  }
  Multisegment adj = m.with(cusp_point(chi.cusp, x));
  if (count_at(adj, chi.cusp, x) == before + 1) return adj;
  // Unreachable for genuine Langlands data; keep a deterministic answer.
  return fallback ? *fallback : adj;
}

Multisegment right_soc(const Multisegment& m, const Segment& chi) {
  return dual_multisegment(
      left_soc(dual_segment(chi), dual_multisegment(m)));
}

Multisegment trivial_rep_data(long long k) {
  std::vector<Segment> es;
  for (long long j = 0; j < k; ++j)
    es.push_back(cusp_point(Rat(-(k - 1), 2) + Rat(j)));
  return Multisegment(std::move(es));
}

}  // namespace howe
