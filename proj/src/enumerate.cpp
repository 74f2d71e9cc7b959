#include "howe/enumerate.hpp"

namespace howe {

std::vector<Segment> segment_pool(const Rat& window, long long max_size,
                                  const std::vector<CuspLabel>& labels) {
  std::vector<Segment> pool;
  for (const CuspLabel& label : labels) {
    // half-integer grid: -window, -window + 1/2, ..., window
    for (Rat b = -window; b <= window; b = b + Rat(1, 2)) {
      for (Rat e = b; e <= window; e = e + Rat(1)) {
        Segment s{label, b, e};
        if (seg_group_size(s) <= max_size) pool.push_back(s);
      }
    }
  }
  return pool;
}

namespace {

void extend(const std::vector<Segment>& pool, std::size_t from,
            long long budget, std::vector<Segment>& current,
            std::vector<Multisegment>& out) {
  out.push_back(Multisegment(current));
  for (std::size_t i = from; i < pool.size(); ++i) {
    long long sz = seg_group_size(pool[i]);
    if (sz > budget) continue;
    current.push_back(pool[i]);
    extend(pool, i, budget - sz, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Multisegment> enumerate_multisegments(
    const std::vector<Segment>& pool, long long max_size) {
  std::vector<Multisegment> out;
  std::vector<Segment> current;
  extend(pool, 0, max_size, current, out);
  return out;
}

}  // namespace howe
