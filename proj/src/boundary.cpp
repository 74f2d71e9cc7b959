#include "howe/boundary.hpp"

#include <algorithm>

#include "howe/langlands.hpp"

namespace howe {

Segment boundary_cuspidal(long long k, long long n) {
  if (k < 0 || k > n) throw domain_error("boundary_cuspidal: requires 0 <= k <= n");
  return cusp_point(Rat(-n + 2 * k + 1, 2));
}

BoundaryReport boundary_excluded(const Multisegment& pi, long long n,
                                 long long m) {
  if (pi.group_size() != n)
    throw domain_error("boundary_excluded: group size mismatch");
  (void)m;  // the test points depend on n only
  std::vector<Segment> pts = left_strippable_points(pi);
  BoundaryReport report;
  for (long long k = 0; k < n; ++k) {
    Segment probe = boundary_cuspidal(k, n);
    bool hit = std::find(pts.begin(), pts.end(), probe) != pts.end();
    report.per_k.push_back(BoundaryProbe{k, probe, hit});
    if (hit) report.excluded = false;
  }
  return report;
}

JHClass jh_classify(const Multisegment& pi, long long n, long long m) {
  if (pi.group_size() != n)
    throw domain_error("jh_classify: group size mismatch");
  JHClass out;
  out.strippable = left_strippable_points(pi);
  Segment j_point = cusp_point(Rat(n + 1, 2));
  Segment h_point = cusp_point(Rat(2 * m - n + 1, 2));
  bool all_h = true, all_jh = true;
  for (const Segment& p : out.strippable) {
    if (p != h_point) all_h = false;
    if (p != h_point && p != j_point) all_jh = false;
  }
  out.cls = all_h ? JH::H : (all_jh ? JH::J : JH::generic);
  return out;
}

const char* jh_name(JH cls) {
  switch (cls) {
    case JH::generic: return "generic";
    case JH::J: return "J";
    case JH::H: return "H";
  }
  return "?";
}

}  // namespace howe
