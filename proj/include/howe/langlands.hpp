#pragma once

#include <utility>
#include <vector>

#include "howe/segments.hpp"

namespace howe {

enum class DatumOrder { ranged, alpha };

// Langlands-quotient data. Semantics depend only on the multiset; the order
// tag selects a display arrangement of the standard-module factors.
struct LanglandsDatum {
  Multisegment data;
  DatumOrder convention = DatumOrder::ranged;
};

// Square-integrabilizing twist of one standard factor: -(begin + end)/2.
Rat alpha(const Segment& s);

// Factors sorted by alpha non-increasing, ties by the canonical order.
std::vector<Segment> alpha_order(const Multisegment& m);

// --- Jacquet support model ------------------------------------------------
//
// left_strip_count(m, chi) is the maximal a such that the representation with
// data m embeds in chi x ... x chi x rho (a copies). A point x on a cusp line
// supports a strip iff the segments ending at x outnumber a maximum matching
// against segments ending at x-1, where a segment ending at x-1 can absorb a
// segment ending at x only when its begin is strictly smaller (two such
// segments are linked and fuse in the quotient). Stripping once shortens the
// largest-begin unmatched x-ender; left_strip iterates until the count is
// exhausted. Right-hand versions are the exact mirrors (via contragredient).

long long left_strip_count(const Multisegment& m, const Segment& chi);
long long right_strip_count(const Multisegment& m, const Segment& chi);

std::pair<long long, Multisegment> left_strip(const Segment& chi,
                                              const Multisegment& m);
std::pair<long long, Multisegment> right_strip(const Multisegment& m,
                                               const Segment& chi);

// All cuspidal points (as length-1 segments) with nonzero strip count,
// coordinate descending, name ascending.
std::vector<Segment> left_strippable_points(const Multisegment& m);
std::vector<Segment> right_strippable_points(const Multisegment& m);

// Data of the unique irreducible submodule of chi x <m> (left_soc) and of
// <m> x chi (right_soc): either a candidate segment is extended by one step
// or chi is adjoined as a singleton; the branch is the one that raises the
// strip count at chi's coordinate by exactly one.
Multisegment left_soc(const Segment& chi, const Multisegment& m);
Multisegment right_soc(const Multisegment& m, const Segment& chi);

// Data of the trivial representation of G_k: k singletons centered at 0.
Multisegment trivial_rep_data(long long k);

}  // namespace howe
