#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "semiord/group.hpp"
#include "semiord/poset.hpp"

namespace semiord {

// Poset text format:
//   poset <n>
//   <i> < <j>
// '#' starts a comment; the transitive closure is applied on load.
Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& path);

struct GroupSpecFile {
  GroupPtr group;
  std::optional<Window> window;  // from a "window:" line, if present
};

// Group spec text format:
//   group zn <n>
//   weights: r11 r12 ...; r21 ...
//   threshold: (t1,...,tn) closed|open
//   window: a1..b1 x ... x an..bn            (optional)
// Products nest, with the sub-spec on the following lines:
//   group lexprod <k>
//   <subspec>
//   group odot F=(f) closed|open alpha=(a1,...)
//   <subspec>
// A window line on the outermost spec covers the non-cyclic coordinates in
// element order (factor coordinates first).
GroupSpecFile parse_group(std::istream& in);
GroupSpecFile parse_group_file(const std::string& path);

// "a1..b1 x a2..b2" -> Window.  Throws ParseError.
Window parse_window(const std::string& text);

// Hasse diagram (cover relation only) in DOT, nodes labeled with coordinates.
std::string window_poset_dot(const WindowPoset& wp);
std::string poset_dot(const Poset& p);

}  // namespace semiord
