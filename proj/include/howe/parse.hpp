#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "howe/segments.hpp"

namespace howe {

// Positioned syntax errors from the expression grammar; the CLI maps these
// to exit code 2.
struct parse_error : std::runtime_error {
  parse_error(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + message),
        pos(position) {}
  std::size_t pos;
};

// Declared cuspidal labels; "1" (the unramified line) is predeclared.
// Declaring a label also declares its dual.
class LabelTable {
 public:
  LabelTable();
  void declare(const std::string& name, long long deg,
               const std::string& dual_name);
  const CuspLabel* find(const std::string& name) const;
  const std::map<std::string, CuspLabel>& all() const { return labels_; }

 private:
  std::map<std::string, CuspLabel> labels_;
};

// Grammar:
//   multisegment := "{" [ seg ("," seg)* ] "}"
//   seg          := "[" rat [ ".." rat ] "]" [ "@" name ]
//   rat          := ["-"] digits [ "/" digits ]
// Whitespace-insensitive; labels resolved against the table (UNR implicit).
Multisegment parse_multisegment(std::string_view text, const LabelTable& labels);
Rat parse_rat(std::string_view text);

std::string render_segment(const Segment& s);
std::string render_text(const Multisegment& m);

}  // namespace howe
