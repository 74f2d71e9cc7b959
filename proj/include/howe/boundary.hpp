#pragma once

#include <vector>

#include "howe/segments.hpp"

namespace howe {

// The unramified point whose one-point Jacquet module must be nonzero for pi
// to be reached by the rank-k boundary piece: coordinate (-n + 2k + 1)/2.
Segment boundary_cuspidal(long long k, long long n);

struct BoundaryProbe {
  long long k = 0;
  Segment test_point;
  bool possible = false;  // test point lies in the strippable set
};

// excluded == true iff no rank-k test point (k < n) is strippable; then the
// partner of pi is pinned as the unique irreducible quotient of the module
// induced from 1_{m-n} tensor the contragredient of pi, with multiplicity one.
struct BoundaryReport {
  bool excluded = true;
  std::vector<BoundaryProbe> per_k;
};

BoundaryReport boundary_excluded(const Multisegment& pi, long long n,
                                 long long m);

enum class JH { generic, J, H };

// Classification by the strippable set against the two exceptional points
// (n+1)/2 and (2m-n+1)/2: H when only the latter occurs, J when nothing
// outside the pair occurs, generic otherwise. H implies the J condition.
struct JHClass {
  JH cls = JH::generic;
  std::vector<Segment> strippable;
};

JHClass jh_classify(const Multisegment& pi, long long n, long long m);

const char* jh_name(JH cls);

}  // namespace howe
