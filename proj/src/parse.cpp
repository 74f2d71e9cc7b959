#include "howe/parse.hpp"

#include <cctype>
#include <vector>

namespace howe {

LabelTable::LabelTable() { labels_["1"] = unr_label(); }

void LabelTable::declare(const std::string& name, long long deg,
                         const std::string& dual_name) {
  if (name.empty() || dual_name.empty() || deg <= 0)
    throw domain_error("label declaration needs name:deg:dualname with deg > 0");
  CuspLabel label{name, deg, dual_name};
  CuspLabel dual{dual_name, deg, name};
  for (const CuspLabel& c : {label, dual}) {
    auto it = labels_.find(c.name);
    if (it != labels_.end() && it->second != c)
      throw domain_error("conflicting declaration for label '" + c.name + "'");
    labels_[c.name] = c;
  }
}

const CuspLabel* LabelTable::find(const std::string& name) const {
  auto it = labels_.find(name);
  return it == labels_.end() ? nullptr : &it->second;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw parse_error(pos, "unexpected end of input");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw parse_error(pos, std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    if (!at_end() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Rat rat() {
    skip_ws();
    std::size_t start = pos;
    bool neg = accept('-');
    long long num = digits(start);
    long long den = 1;
    if (accept('/')) {
      den = digits(start);
      if (den == 0) throw parse_error(start, "zero denominator");
    }
    return Rat(neg ? -num : num, den);
  }

  long long digits(std::size_t start) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error(pos, "expected a number");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1LL << 40)) throw parse_error(start, "number too large");
      ++pos;
    }
    return v;
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos;
    std::string out;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' ||
          c == '\'') {
        out += c;
        ++pos;
      } else {
        break;
      }
    }
    if (out.empty()) throw parse_error(start, "expected a label name");
    return out;
  }
};

}  // namespace

Rat parse_rat(std::string_view text) {
  Cursor c{text};
  Rat r = c.rat();
  if (!c.at_end()) throw parse_error(c.pos, "trailing input after number");
  return r;
}

Multisegment parse_multisegment(std::string_view text,
                                const LabelTable& labels) {
  Cursor c{text};
  c.expect('{');
  std::vector<Segment> entries;
  if (c.peek() != '}') {
    while (true) {
      std::size_t seg_start = c.pos;
      c.expect('[');
      Rat begin = c.rat();
      Rat end = begin;
      if (c.accept('.')) {
        c.expect('.');
        end = c.rat();
      }
      c.expect(']');
      CuspLabel cusp = unr_label();
      if (c.accept('@')) {
        std::size_t name_start = c.pos;
        std::string name = c.name();
        const CuspLabel* found = labels.find(name);
        if (!found) throw parse_error(name_start, "unknown label '" + name + "'");
        cusp = *found;
      }
      Rat len = end - begin;
      if (!len.is_integer() || len.num() < 0)
        throw parse_error(seg_start,
                          "segment length must be a non-negative integer");
      entries.push_back(Segment{cusp, begin, end});
      if (c.accept(',')) continue;
      break;
    }
  }
  c.expect('}');
  if (!c.at_end()) throw parse_error(c.pos, "trailing input after '}'");
  return Multisegment(std::move(entries));
}

std::string render_segment(const Segment& s) {
  std::string out = "[" + s.begin.str();
  if (s.end != s.begin) out += ".." + s.end.str();
  out += "]";
  if (!(s.cusp == unr_label())) out += "@" + s.cusp.name;
  return out;
}

std::string render_text(const Multisegment& m) {
  std::string out = "{";
  bool first = true;
  for (const Segment& s : m.entries()) {
    if (!first) out += ",";
    first = false;
    out += render_segment(s);
  }
  out += "}";
  return out;
}

}  // namespace howe
