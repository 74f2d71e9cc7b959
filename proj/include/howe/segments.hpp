#pragma once

#include <string>
#include <vector>

#include "howe/rat.hpp"

namespace howe {

// An abstract unitary cuspidal representation: an opaque name, the size of
// the group it lives on, and the name of its contragredient. The
// distinguished label UNR ("1", degree 1, self-dual) models the unramified
// line, i.e. the characters nu^x of G_1.
struct CuspLabel {
  std::string name;
  long long deg = 1;
  std::string dual_name;

  friend bool operator==(const CuspLabel& a, const CuspLabel& b) {
    return a.name == b.name && a.deg == b.deg && a.dual_name == b.dual_name;
  }
  friend bool operator!=(const CuspLabel& a, const CuspLabel& b) {
    return !(a == b);
  }
};

CuspLabel unr_label();
bool is_unr(const CuspLabel& c);
CuspLabel dual_label(const CuspLabel& c);

// A segment: a cuspidal label and two coordinates on the nu-line with
// end - begin a non-negative integer. Length-1 segments double as cuspidal
// points (the chi arguments of the strip/soc operations).
struct Segment {
  CuspLabel cusp;
  Rat begin;
  Rat end;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.cusp == b.cusp && a.begin == b.begin && a.end == b.end;
  }
  friend bool operator!=(const Segment& a, const Segment& b) {
    return !(a == b);
  }
};

// Throws domain_error unless end - begin is a non-negative integer.
Segment make_segment(const CuspLabel& cusp, const Rat& begin, const Rat& end);
Segment make_segment(const Rat& begin, const Rat& end);  // UNR
Segment cusp_point(const CuspLabel& cusp, const Rat& coord);
Segment cusp_point(const Rat& coord);  // UNR

long long seg_length(const Segment& s);      // end - begin + 1
long long seg_group_size(const Segment& s);  // length * deg

Segment dual_segment(const Segment& s);
Segment twist_segment(const Segment& s, const Rat& k);

// Canonical total order: begin descending, end descending, name ascending.
// This is also the "ranged" order (begins non-increasing).
bool canonical_less(const Segment& a, const Segment& b);

// A finite multiset of segments, stored in canonical order. Two multisegments
// are equal iff their canonical sequences are equal. Immutable value type.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> entries);

  const std::vector<Segment>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t count() const { return entries_.size(); }
  long long group_size() const;

  Multisegment with(const Segment& s) const;     // insert one entry
  Multisegment without(std::size_t idx) const;   // erase one entry
  Multisegment replaced(std::size_t idx, const Segment& s) const;

  friend bool operator==(const Multisegment& a, const Multisegment& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Multisegment& a, const Multisegment& b) {
    return !(a == b);
  }

 private:
  std::vector<Segment> entries_;
};

std::vector<Segment> ranged_sort(const Multisegment& m);
long long group_size(const Multisegment& m);
Multisegment dual_multisegment(const Multisegment& m);
Multisegment twist_multisegment(const Multisegment& m, const Rat& k);

// Necessary conditions for nonvanishing of the one-point Jacquet modules of
// the representation with data m, read off the ranged presentation restricted
// to chi's cusp line: the left test compares chi against the end of the last
// ranged segment on the line, the right test against the begin of the first.
// False means the Jacquet module vanishes; true is not a sufficiency claim.
bool jac_left_necessary(const Multisegment& m, const Segment& chi);
bool jac_right_necessary(const Multisegment& m, const Segment& chi);

}  // namespace howe
