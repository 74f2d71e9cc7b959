#pragma once

#include <string>

#include "howe/parse.hpp"
#include "howe/segments.hpp"

namespace testutil {

// Shared label table: "rho" of degree 2 with dual "rho*" next to the
// predeclared unramified line.
inline const howe::LabelTable& labels() {
  static const howe::LabelTable table = [] {
    howe::LabelTable t;
    t.declare("rho", 2, "rho*");
    return t;
  }();
  return table;
}

inline howe::Multisegment P(const std::string& text) {
  return howe::parse_multisegment(text, labels());
}

inline howe::Segment pt(const howe::Rat& x) { return howe::cusp_point(x); }

}  // namespace testutil
