#include "howe/segments.hpp"

#include <algorithm>

namespace howe {

CuspLabel unr_label() { return CuspLabel{"1", 1, "1"}; }

bool is_unr(const CuspLabel& c) { return c.name == "1" && c.deg == 1; }

CuspLabel dual_label(const CuspLabel& c) {
  return CuspLabel{c.dual_name, c.deg, c.name};
}

Segment make_segment(const CuspLabel& cusp, const Rat& begin, const Rat& end) {
  Rat len = end - begin;
  if (!len.is_integer() || len.num() < 0)
    throw domain_error("segment length must be a non-negative integer: [" +
                       begin.str() + ".." + end.str() + "]");
  return Segment{cusp, begin, end};
}

Segment make_segment(const Rat& begin, const Rat& end) {
  return make_segment(unr_label(), begin, end);
}

Segment cusp_point(const CuspLabel& cusp, const Rat& coord) {
  return Segment{cusp, coord, coord};
}

Segment cusp_point(const Rat& coord) { return cusp_point(unr_label(), coord); }

long long seg_length(const Segment& s) { return (s.end - s.begin).num() + 1; }

long long seg_group_size(const Segment& s) {
  return seg_length(s) * s.cusp.deg;
}

Segment dual_segment(const Segment& s) {
  return Segment{dual_label(s.cusp), -s.end, -s.begin};
}

Segment twist_segment(const Segment& s, const Rat& k) {
  return Segment{s.cusp, s.begin + k, s.end + k};
}

bool canonical_less(const Segment& a, const Segment& b) {
  if (a.begin != b.begin) return b.begin < a.begin;
  if (a.end != b.end) return b.end < a.end;
  return a.cusp.name < b.cusp.name;
}

Multisegment::Multisegment(std::vector<Segment> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), canonical_less);
}

long long Multisegment::group_size() const {
  long long total = 0;
  for (const Segment& s : entries_) total += seg_group_size(s);
  return total;
}

Multisegment Multisegment::with(const Segment& s) const {
  std::vector<Segment> es = entries_;
  es.insert(std::upper_bound(es.begin(), es.end(), s, canonical_less), s);
  return Multisegment(std::move(es));
}

Multisegment Multisegment::without(std::size_t idx) const {
  std::vector<Segment> es = entries_;
  es.erase(es.begin() + static_cast<std::ptrdiff_t>(idx));
  return Multisegment(std::move(es));
}

Multisegment Multisegment::replaced(std::size_t idx, const Segment& s) const {
  std::vector<Segment> es = entries_;
  es[idx] = s;
  return Multisegment(std::move(es));
}

std::vector<Segment> ranged_sort(const Multisegment& m) { return m.entries(); }

long long group_size(const Multisegment& m) { return m.group_size(); }

Multisegment dual_multisegment(const Multisegment& m) {
  std::vector<Segment> es;
  es.reserve(m.count());
  for (const Segment& s : m.entries()) es.push_back(dual_segment(s));
  return Multisegment(std::move(es));
}

Multisegment twist_multisegment(const Multisegment& m, const Rat& k) {
  std::vector<Segment> es;
  es.reserve(m.count());
  for (const Segment& s : m.entries()) es.push_back(twist_segment(s, k));
  return Multisegment(std::move(es));
}

namespace {

// Entries on chi's cusp line (same label, coordinates an integer apart; twists
// by non-integers never interact), in ranged (= canonical) order.
std::vector<Segment> line_of(const Multisegment& m, const Segment& chi) {
  std::vector<Segment> line;
  for (const Segment& s : m.entries())
    if (s.cusp == chi.cusp && (s.begin - chi.begin).is_integer())
      line.push_back(s);
  return line;
}

}  // namespace

bool jac_left_necessary(const Multisegment& m, const Segment& chi) {
  std::vector<Segment> line = line_of(m, chi);
  if (line.empty()) return false;
  return chi.begin >= line.back().end;
}

bool jac_right_necessary(const Multisegment& m, const Segment& chi) {
  std::vector<Segment> line = line_of(m, chi);
  if (line.empty()) return false;
  return chi.begin <= line.front().begin;
}

}  // namespace howe
