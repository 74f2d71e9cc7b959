#pragma once

#include <vector>

#include "howe/segments.hpp"

namespace howe {

// All segments with both endpoints on the half-integer grid in
// [-window, window] and group size at most max_size, for each given label.
std::vector<Segment> segment_pool(const Rat& window, long long max_size,
                                  const std::vector<CuspLabel>& labels);

// All multisegments with entries drawn (with repetition) from the pool and
// total group size at most max_size. Includes the empty multisegment.
std::vector<Multisegment> enumerate_multisegments(
    const std::vector<Segment>& pool, long long max_size);

}  // namespace howe
